"""People-Bean critical thickness of the strained Si(111) layer.

The energy-balance model gives the implicit relation

    h_c = (b / (32 pi f^2)) ((1 - nu) / (1 + nu)) ln(h_c / b)

with misfit f, Burgers vector b and the effective [111] Poisson ratio nu.
The relation has two positive roots; the physical critical thickness is the
larger one (the small root sits below a monolayer).  Fixed-point iteration
from well above the root converges only to the larger root, where the
iteration map h -> A ln(h/b) has slope A/h < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .design import x_to_strain
from .errors import InfeasibleError, SolverError
from .materials import BURGERS_SI_NM, ElasticConstants, LatticeParams
from .rootfind import bisect_root

# Linearized misfit of Si against the relaxed Si(1-x)Ge(x) barrier per unit
# Ge fraction.
DEFAULT_MISFIT_SLOPE = 0.0418


def poisson_111(elastic: ElasticConstants) -> tuple[float, float]:
    """Effective [111] Poisson ratio and its stiffness ratio, (nu_111, r_111)."""
    denom = elastic.c11 + 2.0 * elastic.c12 + 4.0 * elastic.c44
    if not denom > 0.0:
        raise ValueError("C11 + 2 C12 + 4 C44 must be positive")
    r_111 = 2.0 * (elastic.c11 + 2.0 * elastic.c12 - 2.0 * elastic.c44) / denom
    return r_111 / (2.0 + r_111), r_111


@dataclass(frozen=True)
class RelaxationInput:
    """Inputs of the critical-thickness model.

    With ``lattice`` set, the misfit is evaluated from the Vegard alloy
    lattice constant instead of the linearized slope.
    """

    ge_fraction_x: float
    elastic: ElasticConstants
    burgers_b: float = BURGERS_SI_NM       # nm
    misfit_slope: float = DEFAULT_MISFIT_SLOPE
    lattice: LatticeParams | None = None

    def __post_init__(self):
        if not 0.0 <= self.ge_fraction_x <= 1.0:
            raise ValueError("Ge fraction must lie in [0, 1]")
        if not self.burgers_b > 0.0:
            raise ValueError("Burgers vector must be positive")
        if not self.misfit_slope > 0.0:
            raise ValueError("misfit slope must be positive")

    def misfit(self) -> float:
        if self.lattice is not None:
            return x_to_strain(self.ge_fraction_x, self.lattice)
        return self.misfit_slope * self.ge_fraction_x


@dataclass(frozen=True)
class CriticalThickness:
    h_c: float       # nm
    misfit_f: float
    nu_111: float
    iterations: int


def critical_thickness(inp: RelaxationInput) -> CriticalThickness:
    """Solve the energy-balance relation for the larger positive root."""
    if inp.ge_fraction_x == 0.0:
        raise InfeasibleError(
            "zero misfit: the critical thickness is unbounded", reason="unbounded"
        )
    b = inp.burgers_b
    f = inp.misfit()
    nu, _ = poisson_111(inp.elastic)
    amp = b / (32.0 * math.pi * f * f) * (1.0 - nu) / (1.0 + nu)
    if amp <= math.e * b:
        # h and A ln(h/b) never intersect: the model has no root
        raise InfeasibleError(
            f"no critical-thickness root: misfit {f:.4g} too large for the "
            "energy-balance relation",
            reason="no_root",
        )
    h = 50.0 * b
    for i in range(1, 201):
        h_next = amp * math.log(h / b)
        if abs(h_next - h) < 1e-12:
            return CriticalThickness(h_c=h_next, misfit_f=f, nu_111=nu, iterations=i)
        h = h_next
    # near-tangency contraction can crawl; fall back to bisection on the
    # descending side of A ln(h/b) - h, which brackets only the larger root
    hi = max(amp, 50.0 * b)
    while amp * math.log(hi / b) - hi >= 0.0:
        hi *= 2.0
        if hi > 1e12:
            raise SolverError(f"critical-thickness bracket expansion failed (f={f:.4g})")
    res = bisect_root(lambda x: amp * math.log(x / b) - x, amp, hi, xtol=1e-12)
    return CriticalThickness(h_c=res.root, misfit_f=f, nu_111=nu, iterations=200 + res.iterations)


def hc_curve(inp: RelaxationInput, x_grid: list[float]) -> list[CriticalThickness]:
    """Critical thickness over an ascending Ge-fraction grid."""
    if not x_grid:
        raise ValueError("Ge-fraction grid must be non-empty")
    if any(not 0.05 <= x <= 1.0 for x in x_grid):
        raise ValueError("Ge-fraction grid must lie within [0.05, 1]")
    if any(b <= a for a, b in zip(x_grid, x_grid[1:])):
        raise ValueError("Ge-fraction grid must be strictly ascending")
    return [critical_thickness(replace(inp, ge_fraction_x=x)) for x in x_grid]
