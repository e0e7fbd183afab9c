"""Scalar multi-word arithmetic: kernels, conversions, value class."""

import dis
import math
import random
from fractions import Fraction

import pytest

from conftest import CountingFloat, rand_multiword
from mwfloat.multiword import (
    BITS,
    DD,
    QD,
    TD,
    MultiWord,
    Variant,
    cadd,
    cdiv,
    cmul,
    csub,
    dw_add_accurate,
    dw_add_bf,
    dw_add_sloppy,
    dw_mul,
    dw_mul_bf,
    from_decimal_string,
    from_oracle,
    is_normalized,
    mw_add,
    mw_div,
    mw_mul,
    mw_neg,
    mw_sub,
    normalize,
    qw_add,
    qw_add_bf,
    qw_mul,
    qw_mul_bf,
    to_decimal_string,
    to_oracle,
    tw_add,
    tw_add_bf,
    tw_mul,
    tw_mul_bf,
    tw_mul_cleaned,
    tw_renormalize,
    qw_renormalize,
    ulp_k,
)
from mwfloat.oracle import BigFloat, OracleValue, oracle_sqrt, significant_digits

ADD_OPS = {
    (2, "std"): dw_add_accurate,
    (2, "bf"): dw_add_bf,
    (3, "std"): tw_add,
    (3, "bf"): tw_add_bf,
    (4, "std"): qw_add,
    (4, "bf"): qw_add_bf,
}
MUL_OPS = {
    (2, "std"): dw_mul,
    (2, "bf"): dw_mul_bf,
    (3, "std"): tw_mul,
    (3, "bf"): tw_mul_bf,
    (4, "std"): qw_mul,
    (4, "bf"): qw_mul_bf,
}


def exact(comps) -> Fraction:
    total = Fraction(0)
    for c in comps:
        total += Fraction(c)
    return total


def rel_err(comps, reference: Fraction) -> float:
    if reference == 0:
        return 0.0 if exact(comps) == 0 else math.inf
    return float(abs(exact(comps) - reference) / abs(reference))


def zero(k):
    return (0.0,) * k


def one(k):
    return (1.0,) + (0.0,) * (k - 1)


# --------------------------------------------------------------------------
# addition
# --------------------------------------------------------------------------


@pytest.mark.parametrize("k,variant", ADD_OPS, ids=lambda kv: None)
class TestAddition:
    def test_zero_identity(self, k, variant, rng):
        x = rand_multiword(rng, k)
        assert ADD_OPS[k, variant](x, zero(k)) == x

    def test_exact_cancellation(self, k, variant, rng):
        x = rand_multiword(rng, k)
        assert exact(ADD_OPS[k, variant](x, mw_neg(x))) == 0

    def test_error_bound_sweep(self, k, variant, rng):
        bound = 2.0 ** (-BITS[k] + 4)
        f = ADD_OPS[k, variant]
        for _ in range(1500):
            a = rand_multiword(rng, k)
            b = rand_multiword(rng, k)
            assert rel_err(f(a, b), exact(a) + exact(b)) <= bound


def test_dd_sloppy_add_zero_identity(rng):
    x = rand_multiword(rng, 2)
    assert dw_add_sloppy(x, (0.0, 0.0)) == x


def test_dd_sloppy_add_exact_cancellation(rng):
    x = rand_multiword(rng, 2)
    assert exact(dw_add_sloppy(x, mw_neg(x))) == 0


def test_dd_sloppy_add_mild_case():
    # value carried across 104+ bits survives the fast variant
    a = (1.0, 2.0**-60)
    b = (2.0**-53, 0.0)
    r = dw_add_sloppy(a, b)
    expected = Fraction(1) + Fraction(2) ** -60 + Fraction(2) ** -53
    assert rel_err(r, expected) <= 2.0**-104


def test_dd_accurate_beats_sloppy_under_cancellation():
    a = (1.0, 2.0**-55)
    b = (-1.0 + 2.0**-48, 2.0**-105)
    expected = exact(a) + exact(b)
    acc = rel_err(dw_add_accurate(a, b), expected)
    slo = rel_err(dw_add_sloppy(a, b), expected)
    assert acc <= 2.0**-102
    assert acc <= slo


def test_bf_agrees_with_accurate_dd(rng):
    for _ in range(500):
        a = rand_multiword(rng, 2)
        b = rand_multiword(rng, 2)
        expected = exact(a) + exact(b)
        if expected == 0:
            continue
        d = abs(exact(dw_add_bf(a, b)) - exact(dw_add_accurate(a, b)))
        assert float(d / abs(expected)) <= 2.0**-104


# --------------------------------------------------------------------------
# multiplication
# --------------------------------------------------------------------------


@pytest.mark.parametrize("k,variant", MUL_OPS, ids=lambda kv: None)
class TestMultiplication:
    def test_one_identity_on_normalized(self, k, variant, rng):
        x = normalize(rand_multiword(rng, k))
        assert MUL_OPS[k, variant](x, one(k)) == x

    def test_exact_small_integers(self, k, variant):
        a = (2.0,) + (0.0,) * (k - 1)
        b = (3.0,) + (0.0,) * (k - 1)
        assert MUL_OPS[k, variant](a, b) == (6.0,) + (0.0,) * (k - 1)

    def test_error_bound_sweep(self, k, variant, rng):
        bound = 2.0 ** (-BITS[k] + 4)
        f = MUL_OPS[k, variant]
        for _ in range(1500):
            a = rand_multiword(rng, k)
            b = rand_multiword(rng, k)
            assert rel_err(f(a, b), exact(a) * exact(b)) <= bound


def test_tw_mul_cleaned_within_bound(rng):
    bound = 2.0 ** (-BITS[3] + 4)
    for _ in range(1500):
        a = rand_multiword(rng, 3)
        b = rand_multiword(rng, 3)
        assert rel_err(tw_mul_cleaned(a, b), exact(a) * exact(b)) <= bound


def test_bf_std_variant_agreement(rng):
    # BF and Standard agree within twice the variant error bound
    for k in (3, 4):
        bound = 2.0 ** (-BITS[k] + 5)
        for _ in range(400):
            a = rand_multiword(rng, k)
            b = rand_multiword(rng, k)
            for std_op, bf_op, combine in (
                (ADD_OPS[k, "std"], ADD_OPS[k, "bf"], lambda x, y: x + y),
                (MUL_OPS[k, "std"], MUL_OPS[k, "bf"], lambda x, y: x * y),
            ):
                ref = combine(exact(a), exact(b))
                if ref == 0:
                    continue
                d = abs(exact(std_op(a, b)) - exact(bf_op(a, b)))
                assert float(d / abs(ref)) <= bound


# --------------------------------------------------------------------------
# renormalization
# --------------------------------------------------------------------------


class TestRenormalize:
    def test_tw_single_value(self):
        assert tw_renormalize(3.5, 0.0, 0.0, 0.0) == (3.5, 0.0, 0.0)

    def test_tw_already_disjoint(self):
        assert tw_renormalize(1.0, 2.0**-60, 2.0**-120, 0.0) == (
            1.0,
            2.0**-60,
            2.0**-120,
        )

    def test_tw_overlapping_inputs(self):
        r = tw_renormalize(1.0, 1.0, 2.0**-60, 0.0)
        assert exact(r) == Fraction(2) + Fraction(2) ** -60
        assert is_normalized(r)

    def test_qw_single_value(self):
        assert qw_renormalize(2.25, 0.0, 0.0, 0.0, 0.0) == (2.25, 0.0, 0.0, 0.0)

    def test_qw_disjoint(self):
        comps = (1.0, 2.0**-60, 2.0**-120, 2.0**-180)
        assert qw_renormalize(*comps, 0.0) == comps

    def test_qw_overlapping(self):
        r = qw_renormalize(1.0, 1.0, 2.0**-60, 0.0, 0.0)
        assert exact(r) == Fraction(2) + Fraction(2) ** -60
        assert is_normalized(r)

    def test_std_outputs_normalized(self, rng):
        for k, ops in ((3, (tw_add, tw_mul)), (4, (qw_add, qw_mul))):
            for _ in range(200):
                a = rand_multiword(rng, k)
                b = rand_multiword(rng, k)
                for f in ops:
                    assert is_normalized(f(a, b))

    def test_dd_std_outputs_normalized(self, rng):
        for _ in range(200):
            a = rand_multiword(rng, 2)
            b = rand_multiword(rng, 2)
            assert is_normalized(dw_add_accurate(a, b))
            assert is_normalized(dw_mul(a, b))


# --------------------------------------------------------------------------
# negation, subtraction, division
# --------------------------------------------------------------------------


def test_neg_and_sub(rng):
    for k in (2, 3, 4):
        assert mw_neg(zero(k)) == zero(k)
        x = rand_multiword(rng, k)
        assert exact(mw_sub(x, x)) == 0
        for _ in range(300):
            a = rand_multiword(rng, k)
            b = rand_multiword(rng, k)
            ref = exact(a) - exact(b)
            assert rel_err(mw_sub(a, b), ref) <= 2.0 ** (-BITS[k] + 4)


class TestDivision:
    @pytest.mark.parametrize("k", (2, 3, 4))
    def test_by_one(self, k, rng):
        x = normalize(rand_multiword(rng, k))
        assert mw_div(x, one(k)) == x

    @pytest.mark.parametrize("k", (2, 3, 4))
    def test_self_division(self, k, rng):
        for _ in range(100):
            x = rand_multiword(rng, k)
            assert rel_err(mw_div(x, x), Fraction(1)) <= 2.0 ** (-BITS[k] + 4)

    def test_one_third_dd(self):
        r = mw_div(one(2), (3.0, 0.0))
        assert rel_err(r, Fraction(1, 3)) <= 2.0**-104

    @pytest.mark.parametrize("k", (2, 3, 4))
    @pytest.mark.parametrize("variant", (Variant.STANDARD, Variant.BRANCH_FREE))
    def test_error_bound_sweep(self, k, variant, rng):
        bound = 2.0 ** (-BITS[k] + 4)
        for _ in range(400):
            a = rand_multiword(rng, k)
            b = rand_multiword(rng, k)
            assert rel_err(mw_div(a, b, variant), exact(a) / exact(b)) <= bound

    def test_division_by_zero_propagates(self):
        r = mw_div(one(2), zero(2))
        assert not math.isfinite(r[0])


# --------------------------------------------------------------------------
# complex
# --------------------------------------------------------------------------


class TestComplex:
    def test_mul_identity(self, rng):
        k = 2
        z = (normalize(rand_multiword(rng, k)), normalize(rand_multiword(rng, k)))
        w = cmul(z, (one(k), zero(k)))
        assert w[0] == z[0] and w[1] == z[1]

    def test_i_squared(self):
        k = 3
        i = (zero(k), one(k))
        r = cmul(i, i)
        assert exact(r[0]) == -1 and exact(r[1]) == 0

    def test_3m_matches_4m_within_2ulp(self, rng):
        for k in (2, 3, 4):
            for _ in range(300):
                a = (rand_multiword(rng, k, -2, 2), rand_multiword(rng, k, -2, 2))
                b = (rand_multiword(rng, k, -2, 2), rand_multiword(rng, k, -2, 2))
                re3, im3 = cmul(a, b)
                # four-multiplication reference: ac-bd, ad+bc
                re4 = mw_sub(mw_mul(a[0], b[0]), mw_mul(a[1], b[1]))
                im4 = mw_add(mw_mul(a[0], b[1]), mw_mul(a[1], b[0]))
                scale = (abs(exact(a[0])) + abs(exact(a[1]))) * (
                    abs(exact(b[0])) + abs(exact(b[1]))
                )
                tol = 2 * ulp_k(float(scale), k)
                assert abs(float(exact(re3) - exact(re4))) <= tol
                assert abs(float(exact(im3) - exact(im4))) <= tol

    def test_cadd_csub(self, rng):
        # comparable magnitudes so the subtraction can recover a
        k = 2
        a = (rand_multiword(rng, k, -1, 1), rand_multiword(rng, k, -1, 1))
        b = (rand_multiword(rng, k, -1, 1), rand_multiword(rng, k, -1, 1))
        s = cadd(a, b)
        d = csub(s, b)
        scale = abs(exact(a[0])) + abs(exact(b[0]))
        assert abs(float(exact(d[0]) - exact(a[0]))) <= float(scale) * 2.0**-100

    def test_cdiv_roundtrip(self, rng):
        for k in (2, 4):
            a = (rand_multiword(rng, k, -2, 2), rand_multiword(rng, k, -2, 2))
            b = (rand_multiword(rng, k, -2, 2), rand_multiword(rng, k, -2, 2))
            q = cdiv(a, b)
            back = cmul(q, b)
            assert rel_err(back[0], exact(a[0])) <= 2.0 ** (-BITS[k] + 8)
            assert rel_err(back[1], exact(a[1])) <= 2.0 ** (-BITS[k] + 8)

    def test_cdiv_by_zero_propagates(self):
        k = 2
        q = cdiv((one(k), zero(k)), (zero(k), zero(k)))
        assert not math.isfinite(q[0][0])


# --------------------------------------------------------------------------
# conversions
# --------------------------------------------------------------------------


class TestConversions:
    def test_parse_simple(self):
        assert from_decimal_string("1.0", 2) == (1.0, 0.0)
        assert from_decimal_string("-2.5e1", 3) == (-25.0, 0.0, 0.0)
        assert from_decimal_string("+125e-2", 2) == (1.25, 0.0)

    def test_parse_rejects_garbage(self):
        for bad in ("", "abc", "1.2.3", "1e", "--5"):
            with pytest.raises(ValueError):
                from_decimal_string(bad, 2)

    def test_to_oracle_exact(self):
        comps = (1.0, 2.0**-60, 2.0**-120)
        assert to_oracle(comps).as_fraction() == exact(comps)

    def test_round_trip_preserves_digits(self, rng):
        # floor(K*53*log10(2)) - 2 significant digits survive the cycle
        for k in (2, 3, 4):
            digits = math.floor(53 * k * math.log10(2)) - 2
            for _ in range(50):
                x = rand_multiword(rng, k, -30, 30)
                s = to_decimal_string(x, digits)
                y = from_decimal_string(s, k)
                assert rel_err(y, exact(x)) <= 10.0 ** (-(digits - 1))

    def test_round_trip_default_digits_tight(self, rng):
        for k in (2, 3, 4):
            for _ in range(50):
                x = normalize(rand_multiword(rng, k, -10, 10))
                y = from_decimal_string(to_decimal_string(x), k)
                assert rel_err(y, exact(x)) <= 2.0 ** (-BITS[k] + 2)

    def test_sqrt5_constant_matches_oracle(self):
        for k in (2, 3, 4):
            approx = from_oracle(oracle_sqrt(BigFloat.from_int(5)), k)
            exact_bf = oracle_sqrt(BigFloat.from_int(5))
            digits = significant_digits(BigFloat.from_components(approx), exact_bf, k)
            assert digits >= BITS[k] * math.log10(2) - 1

    def test_from_oracle_greedy_is_normalized(self, rng):
        v = OracleValue(Fraction(10, 3))
        for k in (2, 3, 4):
            comps = from_oracle(v, k)
            assert is_normalized(comps)


# --------------------------------------------------------------------------
# value class
# --------------------------------------------------------------------------


class TestMultiWordClass:
    def test_constructors(self):
        assert DD(1.5).comps == (1.5, 0.0)
        assert TD(1.0, 2.0**-60).comps == (1.0, 2.0**-60, 0.0)
        assert QD(2.0).comps == (2.0, 0.0, 0.0, 0.0)
        assert MultiWord.from_components((1.0, 0.5)).k == 2

    def test_operators(self):
        x = DD(2.0)
        y = DD(3.0)
        assert (x * y).comps == (6.0, 0.0)
        assert (x + y).comps == (5.0, 0.0)
        assert (y - x).comps == (1.0, 0.0)
        assert (DD(1.0) / y * y - DD(1.0)).to_float() == pytest.approx(0.0, abs=1e-30)

    def test_mixed_k_rejected(self):
        with pytest.raises(ValueError):
            DD(1.0) + TD(1.0)

    def test_equality_is_value_equality(self):
        assert DD(1.0, 2.0**-60) == DD(1.0, 2.0**-60)
        assert DD(1.0) != DD(1.0, 2.0**-60)
        assert DD(3.0) == 3.0

    def test_immutability(self):
        x = DD(1.0)
        with pytest.raises(AttributeError):
            x.comps = (2.0, 0.0)

    def test_float_promotion(self):
        assert (DD(1.0) + 1.0).comps == (2.0, 0.0)
        assert (2.0 * TD(3.0)).comps == (6.0, 0.0, 0.0)

    def test_str_and_parse_cycle(self):
        x = DD(1.0) / DD(3.0)
        y = DD.from_decimal(str(x))
        assert abs((x - y).to_float()) <= 1e-32

    def test_nonfinite_propagates(self):
        big = DD(1e308)
        r = big * big
        assert not math.isfinite(r.comps[0])


# --------------------------------------------------------------------------
# operation-count ledger
# --------------------------------------------------------------------------


def _counted(fn, k, trials=100):
    rng = random.Random(4)
    total = 0
    for _ in range(trials):
        a = tuple(CountingFloat(c) for c in rand_multiword(rng, k, -4, 4))
        b = tuple(CountingFloat(c) for c in rand_multiword(rng, k, -4, 4))
        CountingFloat.reset()
        fn(a, b)
        total += CountingFloat.total()
    return total / trials


@pytest.mark.parametrize(
    "std_op,bf_op,k",
    [
        (tw_add, tw_add_bf, 3),
        (tw_mul, tw_mul_bf, 3),
        (qw_add, qw_add_bf, 4),
        (qw_mul, qw_mul_bf, 4),
    ],
    ids=["tw_add", "tw_mul", "qw_add", "qw_mul"],
)
def test_bf_uses_fewer_operations(std_op, bf_op, k):
    """Executed FP-unit operations (arithmetic plus magnitude tests and
    comparisons, which conventional renormalization leans on and BF
    eliminates entirely)."""
    std_ops = _counted(std_op, k)
    bf_ops = _counted(bf_op, k)
    assert bf_ops < std_ops


def test_bf_kernels_have_zero_comparisons():
    rng = random.Random(5)
    for fn, k in ((dw_add_bf, 2), (dw_mul_bf, 2), (tw_add_bf, 3), (tw_mul_bf, 3), (qw_add_bf, 4), (qw_mul_bf, 4)):
        a = tuple(CountingFloat(c) for c in rand_multiword(rng, k, -4, 4))
        b = tuple(CountingFloat(c) for c in rand_multiword(rng, k, -4, 4))
        CountingFloat.reset()
        fn(a, b)
        assert CountingFloat.cmp == 0


BF_KERNELS = [dw_add_bf, dw_mul_bf, tw_add_bf, tw_mul_bf, qw_add_bf, qw_mul_bf]


@pytest.mark.parametrize("fn", BF_KERNELS, ids=lambda f: f.__name__)
def test_bf_kernels_compile_branch_free(fn):
    jumps = [
        ins.opname
        for ins in dis.get_instructions(fn)
        if "JUMP" in ins.opname or ins.opname.startswith("FOR_ITER")
    ]
    assert jumps == []
