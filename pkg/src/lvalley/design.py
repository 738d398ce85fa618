"""Crossover design engine.

Combines strained bulk valley energies with the confinement energy of each
valley, locates the critical in-plane strain where the L1 level drops below
Delta6, maps strain to the Ge fraction of the barrier alloy through the
Vegard rule, and evaluates deformation-potential sensitivity envelopes by
corner sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product
from typing import NamedTuple

from .elasticity import strain_state
from .errors import InfeasibleError
from .materials import LatticeParams, MaterialParams, QuadraticCoefficients, Valley
from .rootfind import bisect_root
from .valleys import ValleyEnergy, bulk_energy, linear_shift, quadratic_shift
from .well import ground_state, well_config

# Crossover search bracket: slightly above the strain of pure-Ge barriers,
# so "no crossing at all" is distinguishable from "requires x > 1".
EPS_BRACKET_MAX = 0.06

# Thickness range with a supported crossover search.
T_MIN_NM = 0.5
T_MAX_NM = 50.0

SENSITIVITY_MODES = ("linear10pct", "quadratic_range", "both")

# Scale factors applied independently to each first-order deformation
# potential in the linear10pct corner set.
LINEAR_VARIATION_FACTORS = (0.9, 1.1)

# Literature spread of the reduced quadratic coefficients, eV.
QUADRATIC_COEFF_RANGES = {
    Valley.L1: (-30.0, -15.0),
    Valley.L3: (-20.0, -10.0),
    Valley.DELTA6: (-15.0, -5.0),
}


@dataclass(frozen=True)
class DesignPoint:
    """One (thickness, strain, Ge fraction) operating point."""

    thickness_t: float
    eps_par: float
    ge_fraction_x: float


@dataclass(frozen=True)
class CrossoverResult:
    """Critical strain and Ge fraction where L1 and Delta6 intersect."""

    thickness_t: float
    eps_critical: float
    x_critical: float
    bracket_width: float


@dataclass(frozen=True)
class SensitivityBand:
    """Envelope of the critical Ge fraction over a perturbed-parameter box.

    ``clipped`` marks bands where at least one corner has no crossover below
    x = 1; such corners are recorded at x = 1.
    """

    thickness_t: float
    x_low: float
    x_nominal: float
    x_high: float
    clipped: bool = False


class Splitting(NamedTuple):
    delta6_minus_l1: float  # eV
    l3_minus_l1: float      # eV


# ---------------------------------------------------------------------------
# Vegard mapping between Ge fraction and in-plane strain

def vegard_a(x: float, lat: LatticeParams) -> float:
    """Lattice constant of the Si(1-x)Ge(x) alloy, Angstrom."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"Ge fraction must lie in [0, 1], got {x}")
    return (1.0 - x) * lat.a_si + x * lat.a_ge + lat.bowing_b * x * (1.0 - x)


def x_to_strain(x: float, lat: LatticeParams) -> float:
    """In-plane strain of the Si well on a relaxed Si(1-x)Ge(x) barrier."""
    return vegard_a(x, lat) / lat.a_si - 1.0


def strain_to_x(eps_par: float, lat: LatticeParams) -> float:
    """Ge fraction producing a given in-plane strain (monotone inversion).

    Bisection instead of the closed quadratic formula avoids a sign branch
    on the small bowing term; the alloy lattice constant is strictly
    increasing in x, so the root is unique.
    """
    if eps_par < 0.0:
        raise ValueError("compressive strain has no Ge-barrier realization")
    ceiling = x_to_strain(1.0, lat)
    if eps_par == 0.0:
        return 0.0
    if eps_par == ceiling:
        return 1.0
    if eps_par > ceiling:
        raise InfeasibleError(
            f"strain {eps_par:.6g} exceeds the pure-Ge value {ceiling:.6g}: "
            "requires x > 1",
            reason="requires_x_gt_1",
        )
    res = bisect_root(lambda x: x_to_strain(x, lat) - eps_par, 0.0, 1.0, xtol=1e-12)
    return res.root


def design_point(
    lat: LatticeParams,
    thickness_t: float,
    eps_par: float | None = None,
    ge_fraction_x: float | None = None,
) -> DesignPoint:
    """Build an operating point from exactly one of strain or Ge fraction."""
    if (eps_par is None) == (ge_fraction_x is None):
        raise ValueError("give exactly one of eps_par or ge_fraction_x")
    if eps_par is None:
        eps_par = x_to_strain(ge_fraction_x, lat)
    else:
        ge_fraction_x = strain_to_x(eps_par, lat)
    return DesignPoint(thickness_t=thickness_t, eps_par=eps_par, ge_fraction_x=ge_fraction_x)


# ---------------------------------------------------------------------------
# Combined energies and the L1/Delta6 crossover

def confinement_energies(params: MaterialParams, thickness_t: float) -> dict[Valley, float]:
    """Confinement energy of each valley at one thickness, eV."""
    k = params.constants.hbar2_over_2m0
    return {
        v: ground_state(well_config(v, params, thickness_t), k).energy_eq for v in Valley
    }


def total_energy(
    valley: Valley, params: MaterialParams, thickness_t: float, eps_par: float
) -> ValleyEnergy:
    """Strained bulk energy plus the confinement energy of one valley."""
    bulk = bulk_energy(valley, params, eps_par)
    sol = ground_state(
        well_config(valley, params, thickness_t), params.constants.hbar2_over_2m0
    )
    return replace(bulk, eq=sol.energy_eq)


def _critical_strain_given_eq(
    params: MaterialParams, eqs: dict[Valley, float]
) -> tuple[float, float]:
    """Root of E(Delta6) - E(L1) over the strain bracket, (eps, bracket width).

    The confinement energies are strain-independent and passed in so corner
    sweeps can reuse them.
    """
    de_eq = eqs[Valley.DELTA6] - eqs[Valley.L1]
    base = params.bands.e0_delta - params.bands.e0_L

    def gap(eps: float) -> float:
        s = strain_state(params.elastic, eps)
        d_lin = linear_shift(Valley.DELTA6, params.deformation, s) - linear_shift(
            Valley.L1, params.deformation, s
        )
        d_quad = quadratic_shift(Valley.DELTA6, params.quadratic, eps) - quadratic_shift(
            Valley.L1, params.quadratic, eps
        )
        return base + d_lin + d_quad + de_eq

    if gap(0.0) >= 0.0:
        raise InfeasibleError(
            "L1 already lies below Delta6 at zero strain", reason="below_at_zero"
        )
    if gap(EPS_BRACKET_MAX) < 0.0:
        raise InfeasibleError(
            f"L1 never drops below Delta6 for strain up to {EPS_BRACKET_MAX}",
            reason="no_crossing",
        )
    res = bisect_root(gap, 0.0, EPS_BRACKET_MAX, xtol=1e-9)
    return res.root, res.hi - res.lo


def critical_strain(params: MaterialParams, thickness_t: float) -> CrossoverResult:
    """Critical strain and Ge fraction at which L1 and Delta6 intersect."""
    if not T_MIN_NM <= thickness_t <= T_MAX_NM:
        raise ValueError(
            f"thickness {thickness_t} nm outside the supported range "
            f"[{T_MIN_NM}, {T_MAX_NM}] nm"
        )
    eqs = confinement_energies(params, thickness_t)
    eps, width = _critical_strain_given_eq(params, eqs)
    return CrossoverResult(
        thickness_t=thickness_t,
        eps_critical=eps,
        x_critical=strain_to_x(eps, params.lattice),
        bracket_width=width,
    )


def crossover_curve(
    params: MaterialParams, t_grid: list[float]
) -> tuple[list[CrossoverResult], list[tuple[float, Exception]]]:
    """Crossover over a thickness grid; per-point failures are collected."""
    if not t_grid:
        raise ValueError("thickness grid must be non-empty")
    results: list[CrossoverResult] = []
    failures: list[tuple[float, Exception]] = []
    for t in t_grid:
        try:
            results.append(critical_strain(params, t))
        except (InfeasibleError, ValueError) as err:
            failures.append((t, err))
    return results, failures


def splitting_report(params: MaterialParams, thickness_t: float, x: float) -> Splitting:
    """Valley splittings relative to L1 at a (thickness, Ge fraction) point."""
    if not thickness_t > 0.0:
        raise ValueError("thickness must be positive")
    eps = x_to_strain(x, params.lattice)
    e_l1 = total_energy(Valley.L1, params, thickness_t, eps).total
    e_l3 = total_energy(Valley.L3, params, thickness_t, eps).total
    e_d6 = total_energy(Valley.DELTA6, params, thickness_t, eps).total
    return Splitting(delta6_minus_l1=e_d6 - e_l1, l3_minus_l1=e_l3 - e_l1)


# ---------------------------------------------------------------------------
# Sensitivity envelopes by corner sampling

def _linear_corners(params: MaterialParams):
    dp = params.deformation
    for fd_d, fu_d, fd_l, fu_l in product(LINEAR_VARIATION_FACTORS, repeat=4):
        yield replace(
            params,
            deformation=replace(
                dp,
                xi_d_delta=dp.xi_d_delta * fd_d,
                xi_u_delta=dp.xi_u_delta * fu_d,
                xi_d_L=dp.xi_d_L * fd_l,
                xi_u_L=dp.xi_u_L * fu_l,
            ),
        )


def _quadratic_corners(params: MaterialParams):
    for d1, d3, d6 in product(
        QUADRATIC_COEFF_RANGES[Valley.L1],
        QUADRATIC_COEFF_RANGES[Valley.L3],
        QUADRATIC_COEFF_RANGES[Valley.DELTA6],
    ):
        yield replace(
            params, quadratic=QuadraticCoefficients(d_L1=d1, d_L3=d3, d_delta6=d6)
        )


def _corner_params(params: MaterialParams, mode: str) -> list[MaterialParams]:
    if mode == "linear10pct":
        return list(_linear_corners(params))
    if mode == "quadratic_range":
        return list(_quadratic_corners(params))
    if mode == "both":
        return [q for p in _linear_corners(params) for q in _quadratic_corners(p)]
    raise ValueError(f"unknown sensitivity mode {mode!r}; valid: {SENSITIVITY_MODES}")


def sensitivity_band(
    params: MaterialParams, t_grid: list[float], mode: str
) -> list[SensitivityBand]:
    """Envelope of the critical Ge fraction over the perturbed-parameter box.

    The critical strain is monotone in each perturbed coefficient, so the
    band extremes occur at corners of the box; corners are enumerated
    exhaustively (16 for linear10pct, 8 for quadratic_range, 128 for both).
    Corners whose crossover would need x > 1, or none at all, enter the
    envelope at x = 1 and set the ``clipped`` flag.
    """
    corners = _corner_params(params, mode)
    bands: list[SensitivityBand] = []
    for t in t_grid:
        if not T_MIN_NM <= t <= T_MAX_NM:
            raise ValueError(
                f"thickness {t} nm outside the supported range "
                f"[{T_MIN_NM}, {T_MAX_NM}] nm"
            )
        # corner sets perturb only band coefficients, never masses or V0,
        # so the confinement energies are shared across the whole box
        eqs = confinement_energies(params, t)
        eps_nom, _ = _critical_strain_given_eq(params, eqs)
        x_nom = strain_to_x(eps_nom, params.lattice)
        xs: list[float] = []
        clipped = False
        for corner in corners:
            try:
                eps, _ = _critical_strain_given_eq(corner, eqs)
                xs.append(strain_to_x(eps, corner.lattice))
            except InfeasibleError as err:
                if err.reason == "below_at_zero":
                    xs.append(0.0)
                else:
                    xs.append(1.0)
                    clipped = True
        bands.append(
            SensitivityBand(
                thickness_t=t,
                x_low=min(xs),
                x_nominal=x_nom,
                x_high=max(xs),
                clipped=clipped,
            )
        )
    return bands
