"""Valley-crossover design for biaxially strained SiGe/Si(111)/SiGe wells.

The library computes strain- and confinement-shifted conduction-band valley
energies (L1, L3, Delta6) of a thin Si(111) layer between Si(1-x)Ge(x)
barriers, locates the critical biaxial strain and Ge fraction where the L1
valley drops below Delta6, and checks plastic-relaxation feasibility with
the energy-balance critical-thickness model.

Typical use::

    import lvalley

    p = lvalley.default_params()
    res = lvalley.critical_strain(p, thickness_t=3.0)
    print(res.eps_critical, res.x_critical)

The ``lvalley`` console script emits the same quantities as CSV or
JSON-lines sweeps; the demos/ directory of the source tree walks through
each capability.
"""

from .design import (
    CrossoverResult,
    DesignPoint,
    SensitivityBand,
    Splitting,
    confinement_energies,
    critical_strain,
    crossover_curve,
    design_point,
    sensitivity_band,
    splitting_report,
    strain_to_x,
    total_energy,
    vegard_a,
    x_to_strain,
)
from .elasticity import (
    StrainState,
    cubic_stiffness,
    perp_strain,
    perp_strain_ratio,
    rotate_stiffness,
    rotation_111,
    rotation_from_angles,
    strain_state,
)
from .errors import InfeasibleError, SolverError
from .materials import (
    BURGERS_SI_NM,
    HBAR2_OVER_2M0,
    BandEdges,
    DeformationPotentials,
    EffectiveMasses,
    ElasticConstants,
    LatticeParams,
    MaterialParams,
    PhysicalConstants,
    QuadraticCoefficients,
    Valley,
    default_params,
    table1_labels,
    table1_set,
)
from .relaxation import (
    CriticalThickness,
    RelaxationInput,
    critical_thickness,
    hc_curve,
    poisson_111,
)
from .valleys import ValleyEnergy, bulk_energy, linear_shift, quadratic_shift
from .well import (
    WellConfig,
    WellSolution,
    eq_vs_thickness,
    ground_state,
    infinite_well_reference,
    matching_mismatch,
    well_config,
)

__version__ = "0.1.0"

__all__ = [
    "BURGERS_SI_NM",
    "HBAR2_OVER_2M0",
    "BandEdges",
    "CriticalThickness",
    "CrossoverResult",
    "DeformationPotentials",
    "DesignPoint",
    "EffectiveMasses",
    "ElasticConstants",
    "InfeasibleError",
    "LatticeParams",
    "MaterialParams",
    "PhysicalConstants",
    "QuadraticCoefficients",
    "RelaxationInput",
    "SensitivityBand",
    "SolverError",
    "Splitting",
    "StrainState",
    "Valley",
    "ValleyEnergy",
    "WellConfig",
    "WellSolution",
    "bulk_energy",
    "confinement_energies",
    "critical_strain",
    "critical_thickness",
    "crossover_curve",
    "cubic_stiffness",
    "default_params",
    "design_point",
    "eq_vs_thickness",
    "ground_state",
    "hc_curve",
    "infinite_well_reference",
    "linear_shift",
    "matching_mismatch",
    "perp_strain",
    "perp_strain_ratio",
    "poisson_111",
    "quadratic_shift",
    "rotate_stiffness",
    "rotation_111",
    "rotation_from_angles",
    "sensitivity_band",
    "splitting_report",
    "strain_state",
    "strain_to_x",
    "table1_labels",
    "table1_set",
    "total_energy",
    "vegard_a",
    "well_config",
    "x_to_strain",
]
