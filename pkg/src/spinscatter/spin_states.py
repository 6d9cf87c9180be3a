"""Two-particle spin states and their Slater-determinant bookkeeping.

States are written over the product basis (uu, ud, du, dd), where slot 1
is the particle detected at theta and slot 2 its partner at pi - theta.
Starting from opposite spins along the quantization axis, a
spin-independent interaction superposes the direct and exchange channels
into

    fermions:  f_plus |ud> - f_minus |du>
    bosons:    f_plus |ud> + f_minus |du>

Re-expressed over the two antisymmetrized opposite-spin mode determinants,
the fermion state carries the coefficient pair (f_plus, -f_minus).  A
single determinant is just antisymmetrization and carries no useful
entanglement; a genuine superposition of both does, which is what the
entropy module quantifies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .amplitudes import NORM_TOL, NormalizedAmplitudePair


class ExchangeStatistics(enum.Enum):
    """Exchange symmetry of the identical pair; the value is the exchange sign."""

    FERMION = -1
    BOSON = 1

    @property
    def sign(self) -> int:
        return self.value


@dataclass(frozen=True)
class TwoSpinState:
    """Normalized pure state of two spin-1/2 slots, basis order (uu, ud, du, dd)."""

    c_upup: complex
    c_updown: complex
    c_downup: complex
    c_downdown: complex

    def __post_init__(self) -> None:
        norm_sq = sum(abs(c) ** 2 for c in self._coeffs())
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state must be normalized, got |psi|^2 = {norm_sq!r}")

    def _coeffs(self) -> tuple[complex, complex, complex, complex]:
        return (self.c_upup, self.c_updown, self.c_downup, self.c_downdown)

    @property
    def vector(self) -> np.ndarray:
        """Coefficients as a length-4 complex array in basis order."""
        return np.array(self._coeffs(), dtype=complex)


@dataclass(frozen=True)
class SlaterDecomposition:
    """Coefficients over the two opposite-spin mode determinants.

    c_s multiplies the determinant with spin up in the detected slot,
    c_minus_s the one with spin down there.
    """

    c_s: complex
    c_minus_s: complex

    def __post_init__(self) -> None:
        norm_sq = abs(self.c_s) ** 2 + abs(self.c_minus_s) ** 2
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"coefficients must be normalized, got {norm_sq!r}")

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([self.c_s, self.c_minus_s], dtype=complex)


def outgoing_state(amps: NormalizedAmplitudePair, statistics: ExchangeStatistics) -> TwoSpinState:
    """Outgoing spin state for identical particles with opposite initial spins.

    The direct channel keeps the detected slot's spin (|ud>), the exchange
    channel swaps it (|du>); the exchange sign of the statistics sets the
    relative sign between the two channels in the slot-labeled basis.
    """
    return TwoSpinState(0.0, amps.f_plus, statistics.sign * amps.f_minus, 0.0)


def distinguishable_outgoing_state(amps: NormalizedAmplitudePair) -> TwoSpinState:
    """Outgoing spin state when the two particles are distinguishable.

    Without exchange there is a single channel, and a spin-independent
    interaction factors out of the spin sector entirely: whatever the
    amplitudes, the normalized spin content stays the initial |ud>.
    """
    return TwoSpinState(0.0, 1.0, 0.0, 0.0)


def slater_decomposition(amps: NormalizedAmplitudePair) -> SlaterDecomposition:
    """Determinant coefficients (f_plus, -f_minus) of the fermion outgoing state."""
    return SlaterDecomposition(amps.f_plus, -amps.f_minus)


def state_from_slater(dec: SlaterDecomposition) -> TwoSpinState:
    """Expand determinant coefficients back into the slot-labeled basis.

    Inverse of slater_decomposition: the up-detected determinant maps to
    |ud> and the down-detected one to |du>, signs carried by the
    coefficients themselves.
    """
    return TwoSpinState(0.0, dec.c_s, dec.c_minus_s, 0.0)


def slater_rank(dec: SlaterDecomposition, epsilon: float = 1e-12) -> int:
    """Number of determinants with weight |c|^2 above epsilon (1 or 2).

    Rank 1 means a single determinant, i.e. nothing beyond
    antisymmetrization; rank 2 is genuine two-particle entanglement.
    """
    if epsilon < 0.0:
        raise ValueError(f"epsilon must be nonnegative, got {epsilon!r}")
    return sum(1 for c in (dec.c_s, dec.c_minus_s) if abs(c) ** 2 > epsilon)


def reduced_density_matrix(state: TwoSpinState, slot: int) -> np.ndarray:
    """Partial trace of the pure two-spin state onto one slot.

    Returns the 2x2 complex density matrix of the kept slot in its
    (up, down) basis: Hermitian, unit trace, positive semidefinite.
    """
    if slot not in (1, 2):
        raise ValueError(f"slot must be 1 or 2, got {slot!r}")
    c = state.vector.reshape(2, 2)
    if slot == 1:
        return c @ c.conj().T
    return c.T @ c.conj()


def symmetrized_initial_state() -> SlaterDecomposition:
    """Determinant coefficients of the antisymmetrized opposite-spin initial state.

    A single determinant, (1, 0): the bare initial configuration carries no
    entanglement beyond antisymmetrization.
    """
    return SlaterDecomposition(1.0, 0.0)
