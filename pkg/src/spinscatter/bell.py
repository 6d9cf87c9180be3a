"""Bell correlator, analyzer geometry and inequality test.

For the outgoing state with real channel amplitudes and quantization axis
z, the two-particle spin correlator for analyzer directions a and b has
the closed form

    E(a, b) = <(sigma.a) x (sigma.b)> = -[a_z b_z + 2 f_plus f_minus (a_x b_x + a_y b_y)]

Three coplanar analyzer directions with pairwise angles (pi/3, 2pi/3,
pi/3), the first along the quantization axis, turn the local-realism
bound |E(a,b) - E(a,c)| <= 1 + E(b,c) into the scalar condition F >= 1
with

    F(theta) = 1 + E(b, c) = 5/4 - (3/2) f_plus f_minus,

because |E(a,b) - E(a,c)| = 1 identically for that triple.  F < 1 flags a
Bell violation; for Coulomb amplitudes the border is crossed at
theta = pi/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .amplitudes import NORM_TOL, AmplitudeProvider, NormalizedAmplitudePair, normalize
from .spin_states import TwoSpinState

_ANGLE_AB = math.pi / 3
_ANGLE_AC = 2.0 * math.pi / 3
_ANGLE_BC = math.pi / 3

# Tolerance on the imaginary part of the oracle expectation value; the
# operator is Hermitian, so anything larger signals a construction bug.
_IMAG_TOL = 1e-9

_SCAN_POINTS = 1024
_BRACKET_LO = 1e-6


@dataclass(frozen=True)
class UnitVector3:
    """A direction on the unit sphere (x^2 + y^2 + z^2 = 1)."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        norm_sq = self.x ** 2 + self.y ** 2 + self.z ** 2
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"direction must be unit length, got |v|^2 = {norm_sq!r}")

    @classmethod
    def normalized(cls, x: float, y: float, z: float) -> "UnitVector3":
        """Scale an arbitrary nonzero vector onto the unit sphere."""
        n = math.sqrt(x * x + y * y + z * z)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(x / n, y / n, z / n)

    def dot(self, other: "UnitVector3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


def _angle_between(u: UnitVector3, v: UnitVector3) -> float:
    return math.acos(min(1.0, max(-1.0, u.dot(v))))


@dataclass(frozen=True)
class BellGeometry:
    """Three coplanar analyzer directions with pairwise angles (pi/3, 2pi/3, pi/3).

    Any rigid rotation of the canonical triple is accepted; the angular
    pattern and coplanarity are what the inequality arithmetic relies on.
    """

    a_hat: UnitVector3
    b_hat: UnitVector3
    c_hat: UnitVector3

    def __post_init__(self) -> None:
        pairs = (
            ("a,b", self.a_hat, self.b_hat, _ANGLE_AB),
            ("a,c", self.a_hat, self.c_hat, _ANGLE_AC),
            ("b,c", self.b_hat, self.c_hat, _ANGLE_BC),
        )
        for label, u, v, want in pairs:
            got = _angle_between(u, v)
            if abs(got - want) > NORM_TOL:
                raise ValueError(f"angle({label}) must be {want!r}, got {got!r}")
        triple = float(np.dot(self.a_hat.as_array(), np.cross(self.b_hat.as_array(), self.c_hat.as_array())))
        if abs(triple) > NORM_TOL:
            raise ValueError(f"directions must be coplanar, got triple product {triple!r}")


def standard_geometry() -> BellGeometry:
    """Canonical x-z plane realization of the analyzer triple.

    a along the quantization axis z, with b and c at pi/3 and 2pi/3 from
    it.  With a on the axis, the amplitude-dependent transverse term drops
    out of E(a, .), so |E(a,b) - E(a,c)| = 1 holds identically and the
    whole inequality collapses onto F = 1 + E(b,c).
    """
    return BellGeometry(
        UnitVector3(0.0, 0.0, 1.0),
        UnitVector3(math.sin(_ANGLE_AB), 0.0, math.cos(_ANGLE_AB)),
        UnitVector3(math.sin(_ANGLE_AC), 0.0, math.cos(_ANGLE_AC)),
    )


def _require_real(amps: NormalizedAmplitudePair) -> tuple[float, float]:
    if not amps.is_real:
        raise ValueError(
            "closed form requires real channel amplitudes; "
            "use correlator_oracle for pairs with a relative phase"
        )
    return amps.f_plus.real, amps.f_minus.real


def correlator_closed_form(a: UnitVector3, b: UnitVector3, amps: NormalizedAmplitudePair) -> float:
    """Spin correlator E(a, b) of the fermion outgoing state, closed form.

    E(a, b) = -[a_z b_z + 2 f_plus f_minus (a_x b_x + a_y b_y)]; valid for
    real amplitude pairs with quantization axis z.
    """
    f_plus, f_minus = _require_real(amps)
    return -(a.z * b.z + 2.0 * f_plus * f_minus * (a.x * b.x + a.y * b.y))


_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def _spin_along(direction: UnitVector3) -> np.ndarray:
    return direction.x * _SIGMA_X + direction.y * _SIGMA_Y + direction.z * _SIGMA_Z


def correlator_oracle(state: TwoSpinState, a: UnitVector3, b: UnitVector3) -> float:
    """Spin correlator from the explicit Pauli tensor product.

    Builds (sigma.a) x (sigma.b) and takes its expectation value in the
    given state.  Works for any normalized two-spin state and serves as
    the independent cross-check of the closed form.  The operator is
    Hermitian, so a non-negligible imaginary part raises rather than
    being silently discarded.
    """
    op = np.kron(_spin_along(a), _spin_along(b))
    psi = state.vector
    value = complex(np.vdot(psi, op @ psi))
    if abs(value.imag) > _IMAG_TOL:
        raise ArithmeticError(f"correlator expectation has imaginary part {value.imag!r}")
    return value.real


def bell_F(amps: NormalizedAmplitudePair) -> float:
    """Bell combination F = 5/4 - (3/2) f_plus f_minus for the canonical triple.

    F equals 1 + E(b, c); local realism requires F >= 1, so F < 1 is a
    violation.  Real amplitude pairs only.
    """
    f_plus, f_minus = _require_real(amps)
    return 1.25 - 1.5 * f_plus * f_minus


def is_violated(amps: NormalizedAmplitudePair) -> bool:
    """True when the Bell combination falls strictly below the classical border."""
    return bell_F(amps) < 1.0


def critical_angle(provider: AmplitudeProvider, tol: float = 1e-10) -> Optional[float]:
    """Smallest angle in (0, pi/2] where the provider's F(theta) crosses 1.

    A fixed grid scan over the range brackets the first sign change of
    F - 1 (robust against non-monotone providers), then bisection narrows
    the bracket until its half-width drops below tol.  Returns None when
    F - 1 keeps a single sign over the whole range.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")

    def gap(theta: float) -> float:
        return bell_F(normalize(provider(theta))) - 1.0

    thetas = np.linspace(_BRACKET_LO, math.pi / 2.0, _SCAN_POINTS)
    values = [gap(float(t)) for t in thetas]

    for i in range(_SCAN_POINTS - 1):
        if values[i] == 0.0:
            return float(thetas[i])
        if (values[i] < 0.0) != (values[i + 1] < 0.0):
            lo, f_lo = float(thetas[i]), values[i]
            hi = float(thetas[i + 1])
            break
    else:
        return float(thetas[-1]) if values[-1] == 0.0 else None

    while 0.5 * (hi - lo) > tol:
        mid = 0.5 * (lo + hi)
        f_mid = gap(mid)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)
