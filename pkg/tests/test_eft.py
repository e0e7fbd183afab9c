"""Error-free transformation primitives."""

import dis

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mwfloat.eft import assert_rounding_mode, fma, quick_two_sum, two_prod, two_sum
from mwfloat.oracle import float_pair_prod_exact, float_pair_sum_exact

finite_floats = st.floats(
    min_value=-1e250, max_value=1e250, allow_nan=False, allow_infinity=False
).filter(lambda x: x == 0.0 or abs(x) > 1e-250)

# two_prod's contract requires the product and its error to stay clear of
# the subnormal range: keep |a*b| >= ~1e-280
prod_floats = st.floats(
    min_value=-1e140, max_value=1e140, allow_nan=False, allow_infinity=False
).filter(lambda x: abs(x) > 1e-140)


def test_rounding_mode_is_nearest_even():
    assert_rounding_mode()


class TestQuickTwoSum:
    def test_zero_b_is_identity(self):
        assert quick_two_sum(3.5, 0.0) == (3.5, 0.0)

    def test_zero_a_allowed(self):
        assert quick_two_sum(0.0, 1.25) == (1.25, 0.0)

    def test_small_b_goes_to_error(self):
        assert quick_two_sum(1.0, 2.0**-60) == (1.0, 2.0**-60)

    def test_tie_keeps_error_exact(self):
        # 2^53 + 1 rounds to even 2^53; the unit survives in e
        assert quick_two_sum(2.0**53, 1.0) == (2.0**53, 1.0)

    @given(a=finite_floats, b=finite_floats)
    @settings(max_examples=300, deadline=None)
    def test_exact_under_precondition(self, a, b):
        if abs(a) < abs(b):
            a, b = b, a
        s, e = quick_two_sum(a, b)
        assert float_pair_sum_exact(a, b, s, e)


class TestTwoSum:
    def test_zero_operand(self):
        assert two_sum(0.0, 2.5) == (2.5, 0.0)

    def test_matches_quick_two_sum_when_ordered(self):
        assert two_sum(1.0, 2.0**-60) == quick_two_sum(1.0, 2.0**-60)

    @given(a=finite_floats, b=finite_floats)
    @settings(max_examples=500, deadline=None)
    def test_exact_any_magnitudes(self, a, b):
        s, e = two_sum(a, b)
        assert float_pair_sum_exact(a, b, s, e)

    def test_exact_wide_exponent_sweep(self, nprng):
        n = 20_000
        m = nprng.uniform(1, 2, n) * np.exp2(nprng.integers(-500, 501, n))
        a = (m * np.where(nprng.random(n) < 0.5, -1, 1)).tolist()
        m = nprng.uniform(1, 2, n) * np.exp2(nprng.integers(-500, 501, n))
        b = (m * np.where(nprng.random(n) < 0.5, -1, 1)).tolist()
        for x, y in zip(a, b):
            s, e = two_sum(x, y)
            assert float_pair_sum_exact(x, y, s, e)


class TestTwoProd:
    def test_times_one_exact(self):
        assert two_prod(3.7, 1.0) == (3.7, 0.0)

    def test_square_of_2p30_plus_1(self):
        # (2^30+1)^2 = 2^60 + 2^31 + 1; the unit is the rounding error
        p, e = two_prod(2.0**30 + 1, 2.0**30 + 1)
        assert p == 2.0**60 + 2.0**31
        assert e == 1.0

    @given(a=prod_floats, b=prod_floats)
    @settings(max_examples=500, deadline=None)
    def test_exact_in_range(self, a, b):
        p, e = two_prod(a, b)
        assert float_pair_prod_exact(a, b, p, e)


class TestDeterminismAndDispatch:
    def test_scalar_repeat_bitwise(self):
        a, b = 1.1, -2.2
        assert two_sum(a, b) == two_sum(a, b)
        assert two_prod(a, b) == two_prod(a, b)

    def test_array_matches_scalar_bitwise(self, nprng):
        a = nprng.uniform(-1e10, 1e10, 256)
        b = nprng.uniform(-1e-10, 1e10, 256)
        s, e = two_sum(a, b)
        p, pe = two_prod(a, b)
        for i in range(256):
            ss, ee = two_sum(float(a[i]), float(b[i]))
            assert (s[i], e[i]) == (ss, ee)
            pp, ppe = two_prod(float(a[i]), float(b[i]))
            assert (p[i], pe[i]) == (pp, ppe)

    def test_fma_correctly_rounded(self):
        # exact residue case only fma can produce
        assert fma(2.0**30 + 1, 2.0**30 + 1, -(2.0**60 + 2.0**31)) == 1.0

    def test_fma_numpy_scalar(self):
        assert fma(np.float64(2.0), np.float64(3.0), np.float64(1.0)) == 7.0


BF_PRIMITIVES = [quick_two_sum, two_sum, two_prod]


@pytest.mark.parametrize("fn", BF_PRIMITIVES, ids=lambda f: f.__name__)
def test_primitives_compile_branch_free(fn):
    jumps = [
        ins.opname
        for ins in dis.get_instructions(fn)
        if "JUMP" in ins.opname or ins.opname.startswith("FOR_ITER")
    ]
    assert jumps == []
