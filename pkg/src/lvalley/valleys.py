"""Strain-induced shifts and absolute bulk energies of the L1, L3, Delta6 valleys."""

from __future__ import annotations

from dataclasses import dataclass

from .elasticity import StrainState, strain_state
from .materials import (
    DeformationPotentials,
    MaterialParams,
    QuadraticCoefficients,
    Valley,
)

# The reduced quadratic coefficients are fits with no support beyond this
# in-plane strain magnitude.
MAX_SUPPORTED_STRAIN = 0.10


@dataclass(frozen=True)
class ValleyEnergy:
    """Per-valley energy breakdown: E = e0 + de1 + de2 + eq, all in eV."""

    valley: Valley
    e0: float   # unstrained band edge
    de1: float  # first-order strain shift
    de2: float  # second-order strain shift
    eq: float = 0.0  # confinement energy, zero for bulk

    @property
    def total(self) -> float:
        return self.e0 + self.de1 + self.de2 + self.eq


def linear_shift(valley: Valley, dp: DeformationPotentials, s: StrainState) -> float:
    """First-order valley shift for a biaxial (111) strain state, eV.

    The trace 2*eps_par + eps_perp multiplies the dilatational potential for
    every valley; the uniaxial projection differs per valley because L1 lies
    along the film normal, L3 on the three oblique <111> axes and the Delta
    set on the cubic axes.
    """
    trace = 2.0 * s.eps_par + s.eps_perp
    if valley is Valley.L1:
        return dp.xi_d_L * trace + dp.xi_u_L * s.eps_perp
    if valley is Valley.L3:
        return dp.xi_d_L * trace + dp.xi_u_L * (8.0 * s.eps_par + s.eps_perp) / 9.0
    return dp.xi_d_delta * trace + dp.xi_u_delta * trace / 3.0


def quadratic_shift(valley: Valley, q: QuadraticCoefficients, eps_par: float) -> float:
    """Second-order valley shift d * eps_par**2, eV."""
    return q.coefficient(valley) * eps_par * eps_par


def bulk_energy(valley: Valley, params: MaterialParams, eps_par: float) -> ValleyEnergy:
    """Absolute valley energy of the strained bulk film (no confinement)."""
    if abs(eps_par) > MAX_SUPPORTED_STRAIN:
        raise ValueError(
            f"|eps_par| = {abs(eps_par):.4g} exceeds the supported range "
            f"{MAX_SUPPORTED_STRAIN} of the quadratic coefficients"
        )
    e0 = params.bands.e0_delta if valley is Valley.DELTA6 else params.bands.e0_L
    s = strain_state(params.elastic, eps_par)
    return ValleyEnergy(
        valley=valley,
        e0=e0,
        de1=linear_shift(valley, params.deformation, s),
        de2=quadratic_shift(valley, params.quadratic, eps_par),
    )
