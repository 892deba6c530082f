import math
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from energyscale import cone
from energyscale.cone import ConeGeometry
from energyscale.errors import ParameterDomainError, RangeOverflowError

S_values = st.floats(1.0001, 1000.0)
k_values = st.integers(1, 100)


class TestGeometry:
    def test_scaling_factors_derive_from_S(self):
        g = ConeGeometry(S=64)
        assert g.beta == pytest.approx(8, rel=1e-12)
        assert g.gamma == pytest.approx(4, rel=1e-12)

    @pytest.mark.parametrize("field", ["D1", "L1", "theta1"])
    def test_dimensions_positive(self, field):
        with pytest.raises(ParameterDomainError):
            ConeGeometry(S=2, **{field: 0.0})

    def test_S_above_one(self):
        with pytest.raises(ParameterDomainError):
            ConeGeometry(S=1)


class TestSectionReport:
    def test_absorbing_volume(self):
        assert cone.section_report(ConeGeometry(S=2, theta1=1), 3).absorbing_volume == pytest.approx(8, rel=1e-12)

    def test_transmitting_ratio_S8(self):
        # beta = sqrt(8), gamma = 2: beta^6 * gamma^3 = 512 * 8
        assert cone.section_report(ConeGeometry(S=8), 3).transmitting_volume_ratio == pytest.approx(4096, rel=1e-12)

    def test_length_ratio(self):
        assert cone.section_report(ConeGeometry(S=math.e), 1).length_ratio == pytest.approx(1.3956124250860895, rel=1e-12)

    def test_overflow(self):
        with pytest.raises(RangeOverflowError):
            cone.section_report(ConeGeometry(S=1000), 200)

    @given(S=S_values, k=k_values)
    def test_volume_is_diameter_squared_times_length(self, S, k):
        assume(4 / 3 * k * math.log(S) < 700)
        r = cone.section_report(ConeGeometry(S=S), k)
        assert r.transmitting_volume_ratio == pytest.approx(r.diameter_ratio**2 * r.length_ratio, rel=1e-12)

    @given(S=S_values, k=st.integers(1, 99))
    def test_absorbing_growth_per_section(self, S, k):
        assume(4 / 3 * (k + 1) * math.log(S) < 700)
        g = ConeGeometry(S=S, theta1=2.5)
        a, b = cone.section_report(g, k), cone.section_report(g, k + 1)
        assert b.absorbing_volume / a.absorbing_volume == pytest.approx(S, rel=1e-12)


class TestEntropyRatio:
    @pytest.mark.parametrize("S,k", [(2, 5), (math.e, 1), (1000, 100)])
    def test_exactly_four_thirds(self, S, k):
        r = cone.entropy_ratio(S, k)
        assert isinstance(r, Fraction)
        assert (r.numerator, r.denominator) == (4, 3)

    def test_domain(self):
        with pytest.raises(ParameterDomainError):
            cone.entropy_ratio(0.9, 1)


class TestFractalDimension:
    @pytest.mark.parametrize("S,k", [(math.e, 1), (2, 7), (10, 2)])
    def test_examples(self, S, k):
        assert cone.fractal_dimension(S, k) == pytest.approx(4 / 3, abs=1e-12)

    @given(S=S_values, k=k_values)
    def test_independent_of_S_and_k(self, S, k):
        assert cone.fractal_dimension(S, k) == pytest.approx(4 / 3, abs=1e-12)

    def test_log_oracle(self):
        # log of the transmitting length over log of the absorbing length, from explicit powers
        S, k = 3.0, 4
        transmit_length = (S ** (4 * k / 3)) ** (1 / 3)
        absorb_length = (S**k) ** (1 / 3)
        assert cone.fractal_dimension(S, k) == pytest.approx(math.log(transmit_length) / math.log(absorb_length), abs=1e-12)

    def test_domain(self):
        with pytest.raises(ParameterDomainError):
            cone.fractal_dimension(1.0, 3)


class TestStefan:
    @pytest.mark.parametrize("E,T,expected", [(3, 1, 4.0), (0, 5, 0.0), (1, 4 / 3, 1.0)])
    def test_examples(self, E, T, expected):
        assert cone.stefan_entropy_density_rate(E, T) == pytest.approx(expected, rel=1e-12)

    def test_temperature_domain(self):
        with pytest.raises(ParameterDomainError):
            cone.stefan_entropy_density_rate(1, 0)

    @given(E=st.floats(1e-6, 1e6), T=st.floats(1e-3, 1e4))
    def test_same_four_thirds_as_cone(self, E, T):
        ratio = cone.stefan_entropy_density_rate(E, T) * T / E
        assert ratio == pytest.approx(float(cone.entropy_ratio(2, 1)), rel=1e-12)


class TestHeatDecomposition:
    def test_unit_example(self):
        h = cone.heat_decomposition(Fraction(1), Fraction(0), Fraction(1), Fraction(1))
        assert (h.dQ, h.internal_part, h.emergent_part) == (Fraction(4, 3), 1, Fraction(1, 3))

    def test_no_energy_density(self):
        h = cone.heat_decomposition(0, 2, 3, 1)
        assert h.dQ == 6 and h.emergent_part == 0

    def test_constant_volume(self):
        h = cone.heat_decomposition(3, 1, 2, 0)
        assert h.dQ == 2 and h.emergent_part == 0

    def test_exact_identity_random_rationals(self):
        rng = random.Random(11)
        for _ in range(100):
            E, dE, v, dv = (Fraction(rng.randint(0, 500), rng.randint(1, 50)),
                            Fraction(rng.randint(-500, 500), rng.randint(1, 50)),
                            Fraction(rng.randint(1, 500), rng.randint(1, 50)),
                            Fraction(rng.randint(-500, 500), rng.randint(1, 50)))
            h = cone.heat_decomposition(E, dE, v, dv)
            assert h.dQ - v * dE - Fraction(4, 3) * E * dv == 0
            assert h.internal_part == v * dE + E * dv
            if h.internal_part:
                assert h.emergent_part / h.internal_part == Fraction(1, 3) * E * dv / (v * dE + E * dv)

    def test_domain(self):
        with pytest.raises(ParameterDomainError):
            cone.heat_decomposition(1, 0, 0, 1)
