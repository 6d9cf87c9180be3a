"""Tests for the Bell correlator, analyzer geometry and critical angle."""

import math

import numpy as np
import pytest

from spinscatter.amplitudes import (
    NormalizedAmplitudePair,
    constant_provider,
    coulomb_f_pm,
    coulomb_provider,
)
from spinscatter.bell import (
    BellGeometry,
    UnitVector3,
    bell_F,
    correlator_closed_form,
    correlator_oracle,
    critical_angle,
    is_violated,
    standard_geometry,
)
from spinscatter.spin_states import ExchangeStatistics, TwoSpinState, outgoing_state

# Frozen before implementation by two independent evaluation routes.
F_PI_8 = 1.1907435698305462

X_HAT = UnitVector3(1.0, 0.0, 0.0)
Z_HAT = UnitVector3(0.0, 0.0, 1.0)


def coulomb_pair(theta):
    return NormalizedAmplitudePair(*coulomb_f_pm(theta))


def singlet():
    return TwoSpinState(0.0, math.sqrt(0.5), -math.sqrt(0.5), 0.0)


def random_direction(rng):
    return UnitVector3.normalized(*rng.normal(size=3))


class TestUnitVector:
    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            UnitVector3(1.0, 1.0, 0.0)

    def test_normalized_constructor(self):
        v = UnitVector3.normalized(3.0, 0.0, 4.0)
        assert (v.x, v.y, v.z) == pytest.approx((0.6, 0.0, 0.8), abs=1e-15)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            UnitVector3.normalized(0.0, 0.0, 0.0)

    def test_dot(self):
        assert X_HAT.dot(Z_HAT) == 0.0
        assert Z_HAT.dot(Z_HAT) == 1.0


class TestGeometry:
    def test_standard_geometry_angles(self):
        geo = standard_geometry()
        assert geo.a_hat.dot(geo.b_hat) == pytest.approx(0.5, abs=1e-12)
        assert geo.a_hat.dot(geo.c_hat) == pytest.approx(-0.5, abs=1e-12)
        assert geo.b_hat.dot(geo.c_hat) == pytest.approx(0.5, abs=1e-12)

    def test_standard_geometry_is_coplanar(self):
        geo = standard_geometry()
        triple = np.dot(
            geo.a_hat.as_array(), np.cross(geo.b_hat.as_array(), geo.c_hat.as_array())
        )
        assert abs(triple) <= 1e-12

    def test_rotations_of_the_triple_are_accepted(self):
        for phi in (0.3, 1.0, 2.5):
            BellGeometry(
                UnitVector3(math.sin(phi), 0.0, math.cos(phi)),
                UnitVector3(math.sin(phi + math.pi / 3), 0.0, math.cos(phi + math.pi / 3)),
                UnitVector3(math.sin(phi + 2 * math.pi / 3), 0.0, math.cos(phi + 2 * math.pi / 3)),
            )

    def test_wrong_angles_rejected(self):
        with pytest.raises(ValueError):
            BellGeometry(Z_HAT, X_HAT, UnitVector3(0.0, 0.0, -1.0))

    def test_axis_identity(self):
        """|E(a,b) - E(a,c)| = 1 for every amplitude pair once a sits on the axis."""
        geo = standard_geometry()
        for theta in np.linspace(0.01, math.pi - 0.01, 100):
            amps = coulomb_pair(theta)
            gap = correlator_closed_form(geo.a_hat, geo.b_hat, amps) - correlator_closed_form(
                geo.a_hat, geo.c_hat, amps
            )
            assert abs(gap) == pytest.approx(1.0, abs=1e-12)


class TestClosedForm:
    def test_axis_analyzers(self):
        """E(z, z) = -1 for any amplitudes: axis spins are always opposite."""
        for theta in (0.3, 1.0, math.pi / 2):
            assert correlator_closed_form(Z_HAT, Z_HAT, coulomb_pair(theta)) == -1.0

    def test_transverse_analyzers_at_symmetric_point(self):
        """E(x, x) = -2 f+ f- = -1 at pi/2, where the state is the singlet."""
        value = correlator_closed_form(X_HAT, X_HAT, coulomb_pair(math.pi / 2))
        assert value == pytest.approx(-1.0, abs=1e-12)

    def test_transverse_analyzers_at_pi_third(self):
        """E(x, x) = -2 sqrt(0.9 * 0.1) = -0.6 at pi/3."""
        value = correlator_closed_form(X_HAT, X_HAT, coulomb_pair(math.pi / 3))
        assert value == pytest.approx(-0.6, abs=1e-12)

    def test_rejects_relative_phase(self):
        with pytest.raises(ValueError):
            correlator_closed_form(X_HAT, Z_HAT, NormalizedAmplitudePair(0.6, 0.8j))

    def test_bounded(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            amps = coulomb_pair(rng.uniform(0.01, math.pi - 0.01))
            value = correlator_closed_form(random_direction(rng), random_direction(rng), amps)
            assert -1.0 - 1e-12 <= value <= 1.0 + 1e-12


class TestOracle:
    def test_singlet_is_minus_cosine(self):
        """Textbook check: the singlet correlator is E(a, b) = -a.b."""
        rng = np.random.default_rng(8)
        state = singlet()
        for _ in range(100):
            a = random_direction(rng)
            b = random_direction(rng)
            assert correlator_oracle(state, a, b) == pytest.approx(-a.dot(b), abs=1e-12)

    def test_product_state(self):
        state = TwoSpinState(0.0, 1.0, 0.0, 0.0)
        assert correlator_oracle(state, Z_HAT, Z_HAT) == pytest.approx(-1.0, abs=1e-15)
        assert correlator_oracle(state, X_HAT, X_HAT) == pytest.approx(0.0, abs=1e-15)

    def test_matches_closed_form_on_random_triples(self):
        rng = np.random.default_rng(13)
        for _ in range(500):
            amps = coulomb_pair(rng.uniform(0.01, math.pi - 0.01))
            state = outgoing_state(amps, ExchangeStatistics.FERMION)
            a = random_direction(rng)
            b = random_direction(rng)
            assert correlator_oracle(state, a, b) == pytest.approx(
                correlator_closed_form(a, b, amps), abs=1e-12
            )

    def test_handles_relative_phase(self):
        """The oracle covers complex pairs the closed form refuses."""
        state = outgoing_state(NormalizedAmplitudePair(0.6, 0.8j), ExchangeStatistics.FERMION)
        assert correlator_oracle(state, Z_HAT, Z_HAT) == pytest.approx(-1.0, abs=1e-12)


class TestBellF:
    def test_border_value(self):
        """F(pi/4) = 1: the classical border."""
        assert bell_F(coulomb_pair(math.pi / 4)) == pytest.approx(1.0, abs=1e-12)

    def test_symmetric_point_value(self):
        """F(pi/2) = 5/4 - 3/2 * 1/2 = 1/2, the strongest violation."""
        assert bell_F(coulomb_pair(math.pi / 2)) == pytest.approx(0.5, abs=1e-12)

    def test_pi_third_value(self):
        """F(pi/3) = 5/4 - 3/2 * 0.3 = 0.8."""
        assert bell_F(coulomb_pair(math.pi / 3)) == pytest.approx(0.8, abs=1e-12)

    def test_pi_eighth_value(self):
        assert bell_F(coulomb_pair(math.pi / 8)) == pytest.approx(F_PI_8, abs=1e-12)

    def test_equals_one_plus_transverse_correlator(self):
        """F = 1 + E(b, c) for the standard analyzer triple."""
        geo = standard_geometry()
        for theta in np.linspace(0.01, math.pi / 2, 100):
            amps = coulomb_pair(theta)
            want = 1.0 + correlator_closed_form(geo.b_hat, geo.c_hat, amps)
            assert bell_F(amps) == pytest.approx(want, abs=1e-12)

    def test_strictly_decreasing_on_half_range(self):
        values = [bell_F(coulomb_pair(t)) for t in np.linspace(0.01, math.pi / 2, 400)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_rejects_relative_phase(self):
        with pytest.raises(ValueError):
            bell_F(NormalizedAmplitudePair(0.6, 0.8j))


class TestViolation:
    def test_violated_beyond_critical_angle(self):
        assert is_violated(coulomb_pair(math.pi / 3))
        assert is_violated(coulomb_pair(math.pi / 2))

    def test_not_violated_below_critical_angle(self):
        assert not is_violated(coulomb_pair(math.pi / 8))
        assert not is_violated(coulomb_pair(0.1))


class TestCriticalAngle:
    def test_coulomb_crossing_at_pi_quarter(self):
        assert critical_angle(coulomb_provider()) == pytest.approx(math.pi / 4, abs=1e-9)

    def test_tighter_tolerance(self):
        assert critical_angle(coulomb_provider(), tol=1e-12) == pytest.approx(
            math.pi / 4, abs=1e-11
        )

    def test_no_crossing_when_always_violated(self):
        """f+ = 0.6 keeps F = 0.53 < 1 over the whole range: no crossing."""
        assert critical_angle(constant_provider(0.6)) is None

    def test_no_crossing_when_never_violated(self):
        """f+ = 1 keeps F = 1.25 > 1 over the whole range: no crossing."""
        assert critical_angle(constant_provider(1.0)) is None

    def test_invalid_tolerance(self):
        with pytest.raises(ValueError):
            critical_angle(coulomb_provider(), tol=0.0)
