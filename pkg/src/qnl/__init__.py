"""Quantum noise limits of stationary linear force sensors.

Probe-side spectra (SQL, DQL, thermal floor), meter-side noise algebra
(uncertainty relations, gauge/feedback transformations, commutator
bookkeeping), closed-form sum-noise optimization with its regime threshold,
an independent brute-force verification oracle, the auxiliary-spin meter
worked example, and a noise-budget CLI.
"""

from ._version import __version__
from .errors import (
    ConfigError,
    DomainError,
    EmptyFeasibleRegionError,
    FdtViolationError,
    LosslessProbeError,
    QnlError,
    RangeError,
    SamplerError,
)
from .spectra import (
    ComplexTable,
    DampedOscillator,
    EffectiveTemperature,
    FreeMass,
    PhysConstants,
    Susceptibility,
    TabulatedSusceptibility,
    ThermalModel,
    UniformTemperature,
    ZeroTemperature,
    chi_inv_at,
    dql,
    fdt_psd,
    sql,
)
from .meter import (
    BackAction,
    CommutatorSpectra,
    GaugeKernel,
    NoiseTriad,
    commutator_check,
    feedback_equivalent_gauge,
    gauge_transform,
    local_uncertainty_pair,
    sigma,
    sum_noise_psd,
    uncertainty_slack,
)
from .optimize import (
    OptimumReport,
    PhaseTransitionProbe,
    Regime,
    optimize_fixed_backaction,
    optimize_fixed_eff_backaction,
    optimize_fixed_eff_backaction_sigma_zero,
    phase_transition_probe,
    qcrb_lossless,
    qcrb_simple,
    threshold_eff,
    threshold_full,
)
from .oracle import (
    OracleConfig,
    OracleResult,
    brute_force_min,
    random_saturating_triad,
    saturating_s_xx,
)
from .spin import (
    SpinMeterParams,
    matched_sum_noise,
    negative_mass_oscillator,
    optimal_spin_response,
    spin_triad,
)
from .budget import (
    CheckResult,
    GridSpec,
    SffSweepSpec,
    SweepConfig,
    VerificationReport,
    load_config,
    parse_config,
    run_budget,
    run_spin_figure,
    verify,
)
from .tables import (
    BudgetPoint,
    BudgetTable,
    SpinFigurePoint,
    SpinFigureTable,
    TableMeta,
    load_table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
