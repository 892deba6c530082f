import math
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from energyscale import allometry
from energyscale.allometry import AllometryScenario
from energyscale.errors import ParameterDomainError, RangeOverflowError


def ols_slope(x, y):
    """Textbook least-squares slope, independent of numpy.polyfit."""
    mx, my = sum(x) / len(x), sum(y) / len(y)
    return sum((a - mx) * (b - my) for a, b in zip(x, y)) / sum((a - mx) ** 2 for a in x)


class TestScenario:
    def test_h_must_be_at_least_two(self):
        with pytest.raises(ParameterDomainError):
            AllometryScenario(S=2, h_range=(1, 2, 3))

    def test_empty_range(self):
        with pytest.raises(ParameterDomainError):
            AllometryScenario(S=2, h_range=())

    def test_capillary_constants_positive(self):
        with pytest.raises(ParameterDomainError):
            AllometryScenario(S=2, r_c=-1)


class TestOrganismVolumes:
    def test_h2(self):
        v, theta = allometry.organism_volumes(AllometryScenario(S=math.e), 2)
        assert v == pytest.approx(90.42707575120722, rel=1e-12)
        assert theta == pytest.approx(14.778112197861300, rel=1e-12)

    def test_ratio_between_generations(self):
        scen = AllometryScenario(S=math.e)
        v2, t2 = allometry.organism_volumes(scen, 2)
        v3, t3 = allometry.organism_volumes(scen, 3)
        assert v3 / v2 == pytest.approx(1.5 * math.exp(4 / 3), rel=1e-12)
        assert t3 / t2 == pytest.approx(1.5 * math.e, rel=1e-12)

    def test_inverse_factors_S16(self):
        scen = AllometryScenario(S=16)
        assert scen.beta**-2 * scen.gamma**-1 == pytest.approx(40.31747359663594, rel=1e-12)

    def test_matches_literal_formula(self):
        scen = AllometryScenario(S=3.0, r_c=0.2, l_c=1.5, theta_c=0.7)
        h = 6
        v, theta = allometry.organism_volumes(scen, h)
        b, g = scen.S**-0.5, scen.S ** (-1 / 3)
        assert v == pytest.approx(h * math.pi * b ** (-2 * h) * 0.2**2 * g**-h * 1.5, rel=1e-12)
        assert theta == pytest.approx(h * 3.0**h * 0.7, rel=1e-12)

    def test_overflow(self):
        with pytest.raises(RangeOverflowError):
            allometry.organism_volumes(AllometryScenario(S=1000), 200)


class TestClosedForm:
    @pytest.mark.parametrize("S", [math.e, 2, 100])
    def test_three_quarters(self, S):
        assert allometry.closed_form_exponent(S) == pytest.approx(0.75, abs=1e-12)

    @given(S=st.floats(1.0001, 1000))
    def test_any_S(self, S):
        assert allometry.closed_form_exponent(S) == pytest.approx(0.75, abs=1e-12)


class TestFit:
    def test_h_2_to_20(self):
        fit = allometry.fit_exponent(AllometryScenario(S=math.e, h_range=range(2, 21)))
        assert fit.a_hat == pytest.approx(0.75, abs=1e-3)
        assert fit.residual < 1e-10

    def test_slope_against_independent_oracle(self):
        scen = AllometryScenario(S=math.e, h_range=range(2, 21))
        x, y = [], []
        for h in scen.h_range:
            v, theta = allometry.organism_volumes(scen, h)
            x.append(math.log(theta / h))
            y.append(math.log(v / h))
        slope = ols_slope(x, y)
        assert slope == pytest.approx(4 / 3, abs=1e-3)
        assert allometry.fit_exponent(scen).a_hat == pytest.approx(1 / slope, rel=1e-9)

    def test_raw_fit_oracle(self):
        # with the h factor left in, the slope is pulled below 4/3
        scen = AllometryScenario(S=math.e, h_range=range(2, 21))
        pts = [tuple(map(math.log, allometry.organism_volumes(scen, h))) for h in scen.h_range]
        slope = ols_slope([p[1] for p in pts], [p[0] for p in pts])
        assert allometry.fit_exponent(scen).raw_a_hat == pytest.approx(1 / slope, rel=1e-9)
        assert slope < 4 / 3

    def test_raw_fit_tightens_with_range(self):
        errors = [
            abs(allometry.fit_exponent(AllometryScenario(S=math.e, h_range=range(2, hi))).raw_a_hat - 0.75)
            for hi in (12, 21, 51, 101, 201)
        ]
        assert errors == sorted(errors, reverse=True)
        assert errors[-1] < 3e-3

    @given(S=st.floats(1.1, 50), start=st.integers(2, 20), length=st.integers(10, 40))
    def test_recovers_three_quarters(self, S, start, length):
        scen = AllometryScenario(S=S, h_range=range(start, start + length))
        assert allometry.fit_exponent(scen).a_hat == pytest.approx(0.75, abs=1e-3)

    def test_needs_three_points(self):
        with pytest.raises(ParameterDomainError):
            allometry.fit_exponent(AllometryScenario(S=2, h_range=(2, 3, 3)))


class TestInvariants:
    @given(S=st.floats(1.01, 100), rc=st.floats(0.01, 10), lc=st.floats(0.01, 10), tc=st.floats(0.01, 10))
    def test_compensated_invariant_constant(self, S, rc, lc, tc):
        scen = AllometryScenario(S=S, r_c=rc, l_c=lc, theta_c=tc)
        values = np.array([allometry.compensated_invariant(scen, h) for h in range(2, 21)])
        expected = math.log(math.pi) + 2 * math.log(rc) + math.log(lc) - 4 / 3 * math.log(tc)
        assert np.all(np.abs(values - expected) <= 1e-12 * max(1.0, abs(expected)) + 1e-12 * 20 * math.log(S))

    @pytest.mark.parametrize("S,h", [(math.e, 2), (2, 5)])
    def test_capillary_check_is_one(self, S, h):
        assert allometry.capillary_invariance_check(AllometryScenario(S=S), h) == pytest.approx(1.0, abs=1e-12)

    def test_capillary_check_discriminates(self):
        value = allometry.capillary_invariance_check(AllometryScenario(S=math.e), 2, a=2 / 3)
        assert value == pytest.approx(0.8464817248906141, rel=1e-12)

    def test_random_S(self):
        rng = random.Random(3)
        for _ in range(100):
            S = rng.uniform(1.0001, 1000)
            scen = AllometryScenario(S=S)
            assert allometry.capillary_invariance_check(scen, 2) == pytest.approx(1.0, abs=1e-12)
            assert abs(allometry.capillary_invariance_check(scen, 2, a=2 / 3) - 1) >= 1 - S ** (-1 / 6) - 1e-12
