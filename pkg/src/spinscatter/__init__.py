"""Spin entanglement generated by spin-independent scattering of identical particles.

The package follows one pipeline: an interaction model supplies raw
direct/exchange amplitudes at a scattering angle; normalization reduces
them to the unit pair (f_plus, f_minus); from there come the outgoing
two-spin state and its Slater decomposition, the entropy of entanglement,
and the Bell combination F with its critical crossing angle.  The
lowest-order Coulomb interaction is built in as the worked example.
"""

from .amplitudes import (
    DEFAULT_KINEMATICS,
    NORM_TOL,
    AmplitudePair,
    AmplitudeProvider,
    Kinematics,
    NormalizedAmplitudePair,
    constant_provider,
    coulomb_amplitudes,
    coulomb_f_pm,
    coulomb_provider,
    mandelstam_t,
    mandelstam_u,
    normalize,
    validate_angle,
)
from .bell import (
    BellGeometry,
    UnitVector3,
    bell_F,
    correlator_closed_form,
    correlator_oracle,
    critical_angle,
    is_violated,
    standard_geometry,
)
from .entanglement import (
    coulomb_entropy,
    entropy_of_state,
    eoe_label_fixed,
    eoe_symmetrized,
)
from .spin_states import (
    ExchangeStatistics,
    SlaterDecomposition,
    TwoSpinState,
    distinguishable_outgoing_state,
    outgoing_state,
    reduced_density_matrix,
    slater_decomposition,
    slater_rank,
    state_from_slater,
    symmetrized_initial_state,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_KINEMATICS",
    "NORM_TOL",
    "AmplitudePair",
    "AmplitudeProvider",
    "BellGeometry",
    "ExchangeStatistics",
    "Kinematics",
    "NormalizedAmplitudePair",
    "SlaterDecomposition",
    "TwoSpinState",
    "UnitVector3",
    "bell_F",
    "constant_provider",
    "correlator_closed_form",
    "correlator_oracle",
    "coulomb_amplitudes",
    "coulomb_entropy",
    "coulomb_f_pm",
    "coulomb_provider",
    "critical_angle",
    "distinguishable_outgoing_state",
    "entropy_of_state",
    "eoe_label_fixed",
    "eoe_symmetrized",
    "is_violated",
    "mandelstam_t",
    "mandelstam_u",
    "normalize",
    "outgoing_state",
    "reduced_density_matrix",
    "slater_decomposition",
    "slater_rank",
    "state_from_slater",
    "standard_geometry",
    "symmetrized_initial_state",
    "validate_angle",
]
