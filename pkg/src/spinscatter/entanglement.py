"""Entropy of entanglement for determinant superpositions and two-spin states.

Two bookkeeping conventions coexist for identical particles.  With the
slot labels held fixed, the entropy is the Shannon entropy (base 2) of the
determinant weights: zero for a single determinant, one bit for an equal
superposition.  Over the antisymmetrized states themselves, the
unremovable which-particle uncertainty adds exactly one bit on top of the
same quantity.  The label-fixed convention is the default everywhere
user-facing.
"""

from __future__ import annotations

import math

import numpy as np

from .amplitudes import NORM_TOL, coulomb_f_pm
from .spin_states import TwoSpinState, reduced_density_matrix


def _shannon_bits(weights) -> float:
    # 0 log 0 := 0; weights clamped to [0, 1] to absorb eigenvalue round-off.
    total = 0.0
    for w in weights:
        w = min(max(float(w), 0.0), 1.0)
        if w > 0.0:
            total -= w * math.log2(w)
    return total + 0.0  # never return -0.0


def _as_normalized(coeffs) -> np.ndarray:
    c = np.asarray(coeffs, dtype=complex).ravel()
    norm_sq = float(np.sum(np.abs(c) ** 2))
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise ValueError(f"coefficients must be normalized, got sum |c|^2 = {norm_sq!r}")
    return c


def eoe_label_fixed(coeffs) -> float:
    """Entropy of entanglement with slot labels fixed: -sum |c|^2 log2 |c|^2.

    Zero for a single determinant, 1 bit for an equal-weight pair.
    """
    c = _as_normalized(coeffs)
    return _shannon_bits(np.abs(c) ** 2)


def eoe_symmetrized(coeffs) -> float:
    """Entropy of entanglement over antisymmetrized states: 1 + label-fixed.

    The offset is the one bit of which-particle uncertainty carried by
    antisymmetrization itself; it is exactly 1 for every input.
    """
    return 1.0 + eoe_label_fixed(coeffs)


def entropy_of_state(state: TwoSpinState) -> float:
    """Von Neumann entropy (base 2) of either slot's reduced density matrix.

    Computed by the Schmidt route: eigenvalues of the slot-1 reduced
    density matrix, clamped to [0, 1] before the logarithm.  Independent
    of which slot is traced out, and of any fixed exchange sign between
    the channel components.
    """
    evals = np.linalg.eigvalsh(reduced_density_matrix(state, 1))
    return _shannon_bits(evals)


def coulomb_entropy(theta: float) -> float:
    """Closed-form entanglement entropy of the Coulomb outgoing state.

    S(theta) = -f_plus^2 log2 f_plus^2 - f_minus^2 log2 f_minus^2 with the
    closed-form normalized amplitudes.  Symmetric about pi/2, vanishing
    toward the (excluded) beam axis, and rising to exactly one bit at
    theta = pi/2 where the state becomes the singlet.
    """
    f_plus, f_minus = coulomb_f_pm(theta)
    return _shannon_bits((f_plus * f_plus, f_minus * f_minus))
