"""Double-, triple- and quadruple-word scalar arithmetic.

A K-word value is an unevaluated sum of K binary64 components, kept as a
plain tuple ``(c0, ..., cK-1)`` with the leading component largest in
magnitude.  Two families of kernels are provided:

* conventional (Standard) operations that finish with a renormalization
  pass restoring the non-overlapping component invariant, and
* branch-free (BF) reformulations whose bodies are pure straight-line
  float code, suitable for lane-batched execution.

Kernels are written against operators plus the eft primitives, so the
identical code also runs elementwise on numpy component arrays (see
:mod:`mwfloat.batch`) and on instrumented floats.  The conventional
triple/quad renormalizations and the conventional quad addition contain
data-dependent branches and therefore only accept scalars.

Subtraction is negation plus addition; division is a Newton reciprocal
iteration built from the module's own add/mul.  Non-finite inputs
propagate through the leading component and are never trapped.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .eft import quick_two_sum, two_prod, two_sum
from .oracle import BigFloat, OracleValue

__all__ = [
    "Variant",
    "MultiWord",
    "DD",
    "TD",
    "QD",
    "BITS",
    "DEFAULT_DIGITS",
    "dw_add_sloppy",
    "dw_add_accurate",
    "dw_add_bf",
    "dw_mul",
    "dw_mul_bf",
    "tw_renormalize",
    "tw_add",
    "tw_mul",
    "tw_mul_cleaned",
    "tw_add_bf",
    "tw_mul_bf",
    "qw_renormalize",
    "qw_add",
    "qw_mul",
    "qw_add_bf",
    "qw_mul_bf",
    "mw_add",
    "mw_sub",
    "mw_mul",
    "mw_div",
    "mw_neg",
    "cadd",
    "csub",
    "cmul",
    "cdiv",
    "from_basefloat",
    "from_decimal_string",
    "to_decimal_string",
    "from_oracle",
    "to_oracle",
    "normalize",
    "ulp_k",
    "is_normalized",
]

# precision in bits per word count: 53 * K
BITS = {2: 106, 3: 159, 4: 212}

# default decimal output digits, roughly the precision in decimal
DEFAULT_DIGITS = {2: 34, 3: 49, 4: 64}


class Variant(enum.Enum):
    """Selects conventional renormalizing or branch-free kernels."""

    STANDARD = "std"
    BRANCH_FREE = "bf"

    @classmethod
    def parse(cls, name) -> "Variant":
        if isinstance(name, cls):
            return name
        key = str(name).lower()
        for v in cls:
            if v.value == key or v.name.lower() == key:
                return v
        raise ValueError(f"unknown variant {name!r}")


# --------------------------------------------------------------------------
# double-word kernels
# --------------------------------------------------------------------------


def dw_add_sloppy(a, b):
    """Fast double-word addition; larger worst-case error than accurate.

    The error of the low-part sum is not captured, so heavy cancellation
    of the leading components can surface it; use the accurate variant
    when that matters.
    """
    a0, a1 = a
    b0, b1 = b
    s, e = two_sum(a0, b0)
    e = e + (a1 + b1)
    return quick_two_sum(s, e)


def dw_add_accurate(a, b):
    a0, a1 = a
    b0, b1 = b
    s1, s2 = two_sum(a0, b0)
    t1, t2 = two_sum(a1, b1)
    s2 = s2 + t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 = s2 + t2
    return quick_two_sum(s1, s2)


def dw_add_bf(a, b):
    a0, a1 = a
    b0, b1 = b
    g1, g1e = two_sum(a0, b0)
    g2, g2e = two_sum(a1, b1)
    g3, g3e = quick_two_sum(g1, g2)
    g4 = g1e + g2e
    g5 = g4 + g3e
    return quick_two_sum(g3, g5)


def dw_mul(a, b):
    a0, a1 = a
    b0, b1 = b
    p1, p2 = two_prod(a0, b0)
    p2 = p2 + (a0 * b1 + a1 * b0)
    return quick_two_sum(p1, p2)


def dw_mul_bf(a, b):
    a0, a1 = a
    b0, b1 = b
    p00, pe00 = two_prod(a0, b0)
    p01 = a0 * b1
    p10 = a1 * b0
    g1 = p01 + p10
    g2 = pe00 + g1
    return quick_two_sum(p00, g2)


# --------------------------------------------------------------------------
# renormalization (scalar only: data-dependent branches)
# --------------------------------------------------------------------------


def _renorm4(c0, c1, c2, c3):
    """Four-input compaction pass, up to five quick_two_sums."""
    if math.isinf(c0):
        return c0, c1, c2, c3
    s0, c3 = quick_two_sum(c2, c3)
    s0, c2 = quick_two_sum(c1, s0)
    c0, c1 = quick_two_sum(c0, s0)

    s0 = c0
    s1 = c1
    s2 = 0.0
    s3 = 0.0
    if s1 != 0.0:
        s1, s2 = quick_two_sum(s1, c2)
        if s2 != 0.0:
            s2, s3 = quick_two_sum(s2, c3)
        else:
            s1, s2 = quick_two_sum(s1, c3)
    else:
        s0, s1 = quick_two_sum(s0, c2)
        if s1 != 0.0:
            s1, s2 = quick_two_sum(s1, c3)
        else:
            s0, s1 = quick_two_sum(s0, c3)
    return s0, s1, s2, s3


def tw_renormalize(s0, s1, s2, t0):
    """Normalize a decreasing four-term expansion into a triple-word."""
    r0, r1, r2, _ = _renorm4(s0, s1, s2, t0)
    return r0, r1, r2


def qw_renormalize(x0, x1, x2, x3, x4):
    """Normalize a decreasing five-term expansion into a quadruple-word.

    Up to seven quick_two_sums.
    """
    if math.isinf(x0):
        return x0, x1, x2, x3
    s0, x4 = quick_two_sum(x3, x4)
    s0, x3 = quick_two_sum(x2, s0)
    s0, x2 = quick_two_sum(x1, s0)
    x0, x1 = quick_two_sum(x0, s0)

    s0 = x0
    s1 = x1
    s2 = 0.0
    s3 = 0.0
    if s1 != 0.0:
        s1, s2 = quick_two_sum(s1, x2)
        if s2 != 0.0:
            s2, s3 = quick_two_sum(s2, x3)
            if s3 != 0.0:
                s3 = s3 + x4
            else:
                s2, s3 = quick_two_sum(s2, x4)
        else:
            s1, s2 = quick_two_sum(s1, x3)
            if s2 != 0.0:
                s2, s3 = quick_two_sum(s2, x4)
            else:
                s1, s2 = quick_two_sum(s1, x4)
    else:
        s0, s1 = quick_two_sum(s0, x2)
        if s1 != 0.0:
            s1, s2 = quick_two_sum(s1, x3)
            if s2 != 0.0:
                s2, s3 = quick_two_sum(s2, x4)
            else:
                s1, s2 = quick_two_sum(s1, x4)
        else:
            s0, s1 = quick_two_sum(s0, x3)
            if s1 != 0.0:
                s1, s2 = quick_two_sum(s1, x4)
            else:
                s0, s1 = quick_two_sum(s0, x4)
    return s0, s1, s2, s3


# --------------------------------------------------------------------------
# triple-word kernels
# --------------------------------------------------------------------------


def _tw_add_core(a, b):
    """Branch-free body of conventional triple-word addition."""
    a0, a1, a2 = a
    b0, b1, b2 = b
    s0 = a0 + b0
    s1 = a1 + b1
    s2 = a2 + b2
    v0 = s0 - a0
    v1 = s1 - a1
    v2 = s2 - a2
    u0 = s0 - v0
    u1 = s1 - v1
    u2 = s2 - v2
    w0 = a0 - u0
    w1 = a1 - u1
    w2 = a2 - u2
    u0 = b0 - v0
    u1 = b1 - v1
    u2 = b2 - v2
    t0 = w0 + u0
    t1 = w1 + u1
    t2 = w2 + u2
    s1, t0 = two_sum(s1, t0)
    i1, i2 = two_sum(s2, t0)
    s2, i3 = two_sum(t1, i1)
    t0, t1 = two_sum(i2, i3)
    t0 = t0 + t1 + t2
    return s0, s1, s2, t0


def tw_add(a, b):
    return tw_renormalize(*_tw_add_core(a, b))


def _tw_mul_core(a, b):
    """Branch-free body of conventional triple-word multiplication.

    Transcribed literally, including the final overwrite of (t0, t1) that
    leaves the q0/q4 error chain unused; accuracy is arbitrated by the
    oracle error-bound sweep, and a folded rewrite is kept alongside in
    tw_mul_cleaned for comparison.
    """
    a0, a1, a2 = a
    b0, b1, b2 = b
    p0, q0 = two_prod(a0, b0)
    p1, q1 = two_prod(a0, b1)
    p2, q2 = two_prod(a1, b0)
    p3, q3 = two_prod(a0, b2)
    p4, q4 = two_prod(a1, b1)
    p5, q5 = two_prod(a2, b0)
    i1, i2 = two_sum(p1, p2)
    p1, i3 = two_sum(q0, i1)
    p2, q0 = two_sum(i2, i3)
    i1, i2 = two_sum(p2, q1)
    p2, i3 = two_sum(q2, i1)
    q1, q2 = two_sum(i2, i3)
    i1, i2 = two_sum(p3, p4)
    p3, i3 = two_sum(p5, i1)
    p4, p5 = two_sum(i2, i3)
    s0, t0 = two_sum(p2, p3)
    s1, t1 = two_sum(q1, p4)
    s2 = q2 + p5
    s1, t0 = two_sum(s1, t0)
    s2 = s2 + (t0 + t1)
    q0, q3 = two_sum(q0, q3)
    q4, q5 = two_sum(q4, q5)
    t0, t1 = two_sum(q0, q4)
    t1 = t1 + (q3 + q5)
    t0, t1 = two_sum(q3, s1)
    return p0, p1, s0, t0


def tw_mul(a, b):
    return tw_renormalize(*_tw_mul_core(a, b))


def _tw_mul_cleaned_core(a, b):
    """tw_mul body with the dangling error chain folded into the tail."""
    a0, a1, a2 = a
    b0, b1, b2 = b
    p0, q0 = two_prod(a0, b0)
    p1, q1 = two_prod(a0, b1)
    p2, q2 = two_prod(a1, b0)
    p3, q3 = two_prod(a0, b2)
    p4, q4 = two_prod(a1, b1)
    p5, q5 = two_prod(a2, b0)
    i1, i2 = two_sum(p1, p2)
    p1, i3 = two_sum(q0, i1)
    p2, q0 = two_sum(i2, i3)
    i1, i2 = two_sum(p2, q1)
    p2, i3 = two_sum(q2, i1)
    q1, q2 = two_sum(i2, i3)
    i1, i2 = two_sum(p3, p4)
    p3, i3 = two_sum(p5, i1)
    p4, p5 = two_sum(i2, i3)
    s0, t0 = two_sum(p2, p3)
    s1, t1 = two_sum(q1, p4)
    s2 = q2 + p5
    s1, t0 = two_sum(s1, t0)
    s2 = s2 + (t0 + t1)
    q0, q3 = two_sum(q0, q3)
    q4, q5 = two_sum(q4, q5)
    t0, t1 = two_sum(q0, q4)
    t1 = t1 + (q3 + q5)
    t0 = s1 + t0 + t1
    return p0, p1, s0, t0


def tw_mul_cleaned(a, b):
    return tw_renormalize(*_tw_mul_cleaned_core(a, b))


def tw_add_bf(a, b):
    a0, a1, a2 = a
    b0, b1, b2 = b
    a1_, b1_ = two_sum(a0, b0)
    c1, d1 = two_sum(a1, b1)
    e1, f1 = two_sum(a2, b2)
    a2_, c2 = quick_two_sum(a1_, c1)
    b2_ = b1_ + f1
    d2, e2 = two_sum(d1, e1)
    a3, d3 = quick_two_sum(a2_, d2)
    b3, c3 = two_sum(b2_, c2)
    c4 = c3 + e2
    c5, d5 = two_sum(c4, d3)
    b6, c6 = two_sum(b3, c5)
    r0, b7 = quick_two_sum(a3, b6)
    c7 = c6 + d5
    r1, r2 = quick_two_sum(b7, c7)
    return r0, r1, r2


def tw_mul_bf(a, b):
    a0_in, a1_in, a2_in = a
    b0_in, b1_in, b2_in = b
    a0, b0 = two_prod(a0_in, b0_in)
    c0, e0 = two_prod(a0_in, b1_in)
    d0, f0 = two_prod(a1_in, b0_in)
    g0 = a0_in * b2_in
    h0 = a1_in * b1_in
    i0 = a2_in * b0_in
    c1, d1 = two_sum(c0, d0)
    e1 = e0 + f0
    g1 = g0 + i0
    b2, c2 = two_sum(b0, c1)
    g2 = g1 + h0
    a3, b3 = quick_two_sum(a0, b2)
    c3 = c2 + d1
    e3 = e1 + g2
    c4 = c3 + e3
    b5, c5 = quick_two_sum(b3, c4)
    r0, b6 = quick_two_sum(a3, b5)
    r1, r2 = quick_two_sum(b6, c5)
    return r0, r1, r2


# --------------------------------------------------------------------------
# quadruple-word kernels
# --------------------------------------------------------------------------


def _three_sum(a, b, c):
    """a+b+c as (sum, err1, err2)."""
    t1, t2 = two_sum(a, b)
    a, t3 = two_sum(c, t1)
    b, c = two_sum(t2, t3)
    return a, b, c


def _three_sum2(a, b, c):
    """a+b+c as (sum, err); the second-order error is dropped."""
    t1, t2 = two_sum(a, b)
    a, t3 = two_sum(c, t1)
    return a, t2 + t3


def _quick_three_accum(u, v, t):
    """Merge step of conventional quad addition.

    Returns (accumulated_or_None, u, v); the first slot carries a value
    only when both running errors are nonzero.
    """
    s, v = two_sum(v, t)
    s, u = two_sum(u, s)
    za = u != 0.0
    zb = v != 0.0
    if za and zb:
        return s, u, v
    if not zb:
        return None, s, u
    return None, s, v


def qw_add(a, b):
    """Conventional quad-word addition (magnitude-merge formulation).

    Scalar only: control flow depends on component values.
    """
    i = 0
    j = 0
    if abs(a[0]) > abs(b[0]):
        u = a[0]
        i = 1
    else:
        u = b[0]
        j = 1
    if abs(a[i]) > abs(b[j]):
        v = a[i]
        i += 1
    else:
        v = b[j]
        j += 1
    u, v = quick_two_sum(u, v)
    x = [0.0, 0.0, 0.0, 0.0]
    k = 0
    while k < 4:
        if i >= 4 and j >= 4:
            x[k] = u
            if k < 3:
                x[k + 1] = v
            break
        if i >= 4:
            t = b[j]
            j += 1
        elif j >= 4 or abs(a[i]) > abs(b[j]):
            t = a[i]
            i += 1
        else:
            t = b[j]
            j += 1
        s, u, v = _quick_three_accum(u, v, t)
        if s is not None:
            x[k] = s
            k += 1
    for m in range(i, 4):
        x[3] = x[3] + a[m]
    for m in range(j, 4):
        x[3] = x[3] + b[m]
    return qw_renormalize(x[0], x[1], x[2], x[3], 0.0)


def _qw_mul_core(a, b):
    """Branch-free body of conventional quad-word multiplication."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    p0, q0 = two_prod(a0, b0)
    p1, q1 = two_prod(a0, b1)
    p2, q2 = two_prod(a1, b0)
    p3, q3 = two_prod(a0, b2)
    p4, q4 = two_prod(a1, b1)
    p5, q5 = two_prod(a2, b0)
    p1, p2, q0 = _three_sum(p1, p2, q0)
    p2, q1, q2 = _three_sum(p2, q1, q2)
    p3, p4, p5 = _three_sum(p3, p4, p5)
    s0, t0 = two_sum(p2, p3)
    s1, t1 = two_sum(q1, p4)
    s2 = q2 + p5
    s1, t0 = two_sum(s1, t0)
    s2 = s2 + (t0 + t1)
    s1 = s1 + (a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0 + q0 + q3 + q4 + q5)
    return p0, p1, s0, s1, s2


def qw_mul(a, b):
    return qw_renormalize(*_qw_mul_core(a, b))


def qw_add_bf(a, b):
    a0_in, a1_in, a2_in, a3_in = a
    b0_in, b1_in, b2_in, b3_in = b
    a1, b1 = two_sum(a0_in, b0_in)
    c1, d1 = two_sum(a1_in, b1_in)
    e1, f1 = two_sum(a2_in, b2_in)
    g1, h1 = two_sum(a3_in, b3_in)
    a2, c2 = quick_two_sum(a1, c1)
    b2 = b1 + h1
    d2, e2 = two_sum(d1, e1)
    f2, g2 = two_sum(f1, g1)
    b3, g3 = two_sum(b2, g2)
    c3, d3 = quick_two_sum(c2, d2)
    e3, f3 = two_sum(e2, f2)
    a4, c4 = quick_two_sum(a2, c3)
    d4, e4 = quick_two_sum(d3, e3)
    b5, d5 = two_sum(b3, d4)
    e5 = e4 + f3
    b6, c6 = two_sum(b5, c4)
    d6, e6 = two_sum(d5, e5)
    a7, b7 = quick_two_sum(a4, b6)
    c7, d7 = quick_two_sum(c6, d6)
    e8 = e6 + g3
    b8, c8 = quick_two_sum(b7, c7)
    d9 = d7 + e8
    r0, b10 = quick_two_sum(a7, b8)
    c10, d10 = quick_two_sum(c8, d9)
    r1, c11 = quick_two_sum(b10, c10)
    r2, r3 = quick_two_sum(c11, d10)
    return r0, r1, r2, r3


def qw_mul_bf(a, b):
    a0_in, a1_in, a2_in, a3_in = a
    b0_in, b1_in, b2_in, b3_in = b
    a0, b0 = two_prod(a0_in, b0_in)
    c0, e0 = two_prod(a0_in, b1_in)
    d0, f0 = two_prod(a1_in, b0_in)
    g0, j0 = two_prod(a0_in, b2_in)
    h0, k0 = two_prod(a1_in, b1_in)
    i0, l0 = two_prod(a2_in, b0_in)
    m0 = a0_in * b3_in
    n0 = a1_in * b2_in
    o0 = a2_in * b1_in
    p0 = a3_in * b0_in
    c1, d1 = two_sum(c0, d0)
    e1, f1 = two_sum(e0, f0)
    g1, i1 = two_sum(g0, i0)
    j1 = j0 + l0
    m1 = m0 + p0
    n1 = n0 + o0
    b2, c2 = two_sum(b0, c1)
    e2, h2 = two_sum(e1, h0)
    f2 = f1 + j1
    i2 = i1 + k0
    m2 = m1 + n1
    a3, b3 = quick_two_sum(a0, b2)
    c3, d3 = quick_two_sum(c2, d1)
    e3, g3 = two_sum(e2, g1)
    f3 = f2 + m2
    h3 = h2 + i2
    c4, e4 = two_sum(c3, e3)
    d4 = d3 + h3
    f4 = f3 + g3
    d5 = d4 + e4
    c6, d6 = two_sum(c4, d5)
    b7, c7 = two_sum(b3, c6)
    d7 = d6 + f4
    r0, b8 = quick_two_sum(a3, b7)
    c8, d8 = two_sum(c7, d7)
    r1, c9 = two_sum(b8, c8)
    r2, r3 = quick_two_sum(c9, d8)
    return r0, r1, r2, r3


# --------------------------------------------------------------------------
# variant dispatch, negation, subtraction, division
# --------------------------------------------------------------------------

_ADD = {
    (2, Variant.STANDARD): dw_add_accurate,
    (2, Variant.BRANCH_FREE): dw_add_bf,
    (3, Variant.STANDARD): tw_add,
    (3, Variant.BRANCH_FREE): tw_add_bf,
    (4, Variant.STANDARD): qw_add,
    (4, Variant.BRANCH_FREE): qw_add_bf,
}

_MUL = {
    (2, Variant.STANDARD): dw_mul,
    (2, Variant.BRANCH_FREE): dw_mul_bf,
    (3, Variant.STANDARD): tw_mul,
    (3, Variant.BRANCH_FREE): tw_mul_bf,
    (4, Variant.STANDARD): qw_mul,
    (4, Variant.BRANCH_FREE): qw_mul_bf,
}

# Newton reciprocal steps per word count: ceil(log2(K)) + 1
_DIV_ITERS = {2: 2, 3: 3, 4: 3}


def mw_add(a, b, variant: Variant = Variant.STANDARD):
    return _ADD[len(a), variant](a, b)


def mw_mul(a, b, variant: Variant = Variant.STANDARD):
    return _MUL[len(a), variant](a, b)


def mw_neg(a):
    return tuple(-c for c in a)


def mw_sub(a, b, variant: Variant = Variant.STANDARD):
    return _ADD[len(a), variant](a, mw_neg(b))


def _const_like(a, value: float):
    """K-word constant (value, 0, ..., 0) shaped like a."""
    zero = a[0] * 0.0
    return (zero + value,) + (zero,) * (len(a) - 1)


def _newton_div(a, b, add, mul, iters: int):
    """Shared reciprocal refinement; add/mul supply the arithmetic.

    The scalar and lane-batched paths pass their own kernels here, so
    both run the identical operation sequence.
    """
    two = _const_like(b, 2.0)
    x = _const_like(b, 1.0)
    try:
        seed = x[0] / b[0]
    except ZeroDivisionError:
        # IEEE semantics, which Python floats trap: 1/±0 is ±inf; the
        # refinement then turns it into inf/nan in the leading component
        seed = math.copysign(math.inf, b[0] + 0.0)
    x = (seed,) + x[1:]
    for _ in range(iters):
        t = mul(b, x)
        e = add(two, mw_neg(t))
        x = mul(x, e)
    return mul(a, x)


def mw_div(a, b, variant: Variant = Variant.STANDARD):
    """a / b by Newton reciprocal refinement, then one multiplication.

    Division by zero propagates inf/nan through the leading component.
    """
    k = len(a)
    return _newton_div(a, b, _ADD[k, variant], _MUL[k, variant], _DIV_ITERS[k])


# --------------------------------------------------------------------------
# complex arithmetic on (re, im) pairs of K-word tuples
# --------------------------------------------------------------------------


def cadd(a, b, variant: Variant = Variant.STANDARD):
    return mw_add(a[0], b[0], variant), mw_add(a[1], b[1], variant)


def csub(a, b, variant: Variant = Variant.STANDARD):
    return mw_sub(a[0], b[0], variant), mw_sub(a[1], b[1], variant)


def cmul(a, b, variant: Variant = Variant.STANDARD):
    """Karatsuba-style three-multiplication complex product."""
    ar, ai = a
    br, bi = b
    p1 = mw_mul(ar, br, variant)
    p2 = mw_mul(ai, bi, variant)
    p3 = mw_mul(mw_add(ar, ai, variant), mw_add(br, bi, variant), variant)
    re = mw_sub(p1, p2, variant)
    im = mw_sub(mw_sub(p3, p1, variant), p2, variant)
    return re, im


def cdiv(a, b, variant: Variant = Variant.STANDARD):
    """Naive formula (a conj(b)) / |b|^2; extreme exponents out of contract."""
    ar, ai = a
    br, bi = b
    den = mw_add(mw_mul(br, br, variant), mw_mul(bi, bi, variant), variant)
    num_re = mw_add(mw_mul(ar, br, variant), mw_mul(ai, bi, variant), variant)
    num_im = mw_sub(mw_mul(ai, br, variant), mw_mul(ar, bi, variant), variant)
    return mw_div(num_re, den, variant), mw_div(num_im, den, variant)


# --------------------------------------------------------------------------
# normalization helpers
# --------------------------------------------------------------------------


def normalize(comps):
    """Renormalize raw components into the non-overlapping form."""
    k = len(comps)
    if k == 2:
        return quick_two_sum(comps[0], comps[1])
    if k == 3:
        return tw_renormalize(comps[0], comps[1], comps[2], 0.0)
    if k == 4:
        return qw_renormalize(comps[0], comps[1], comps[2], comps[3], 0.0)
    raise ValueError(f"unsupported word count {k}")


def ulp_k(scale: float, k: int) -> float:
    """Spacing of the K-word value grid at magnitude |scale|.

    scale in [2^(e-1), 2^e) maps to 2^(e - 53K).
    """
    if scale == 0.0 or not math.isfinite(scale):
        raise ValueError("ulp needs a finite nonzero scale")
    _, e = math.frexp(abs(scale))
    return math.ldexp(1.0, e - 53 * k)


def is_normalized(comps) -> bool:
    """Component-overlap invariant: |c[i+1]| <= ulp(c[i]) / 2."""
    for hi, lo in zip(comps, comps[1:]):
        if hi == 0.0:
            if lo != 0.0:
                return False
        elif abs(lo) > 0.5 * math.ulp(abs(hi)):
            return False
    return True


# --------------------------------------------------------------------------
# conversions
# --------------------------------------------------------------------------


def from_basefloat(x: float, k: int):
    if k not in BITS:
        raise ValueError(f"unsupported word count {k}")
    return (float(x),) + (0.0,) * (k - 1)


def to_oracle(comps) -> OracleValue:
    """Exact: a multi-word value is a dyadic rational."""
    return OracleValue.from_components(comps)


def from_oracle(value, k: int):
    """Round an oracle value to K words by greedy nearest-double extraction."""
    if k not in BITS:
        raise ValueError(f"unsupported word count {k}")
    if isinstance(value, OracleValue):
        fr = value.as_fraction()
    elif isinstance(value, BigFloat):
        fr = value.to_fraction()
    else:
        fr = Fraction(value)
    out = []
    for _ in range(k):
        c = float(fr)  # correctly rounded nearest double
        out.append(c)
        fr = fr - Fraction(c)
    return tuple(out)


def from_decimal_string(text: str, k: int):
    """Parse a decimal literal into a K-word value (correctly rounded).

    Accepts optional sign, digits with optional '.', optional exponent
    'e±d'.  Raises ValueError on malformed input.
    """
    if k not in BITS:
        raise ValueError(f"unsupported word count {k}")
    s = text.strip()
    if not s:
        raise ValueError("empty decimal string")
    try:
        mant, esep, exp_part = s.lower().partition("e")
        if esep and not exp_part:
            raise ValueError("dangling exponent")
        exp = int(exp_part) if exp_part else 0
        if "." in mant:
            int_part, frac_part = mant.split(".", 1)
            exp -= len(frac_part)
            mant = int_part + frac_part
        digits = int(mant)  # validates sign and digits
    except ValueError as err:
        raise ValueError(f"malformed decimal string {text!r}") from err
    if exp >= 0:
        fr = Fraction(digits * 10**exp)
    else:
        fr = Fraction(digits, 10**-exp)
    return from_oracle(fr, k)


def to_decimal_string(comps, digits: int | None = None) -> str:
    """Scientific-notation decimal string with the given significant digits.

    Output parses back (round-trippable at the default digit counts).
    """
    k = len(comps)
    if digits is None:
        digits = DEFAULT_DIGITS[k]
    fr = Fraction(0)
    for c in comps:
        fr += Fraction(float(c))
    if fr == 0:
        return "0." + "0" * (digits - 1) + "e+0"
    neg = fr < 0
    if neg:
        fr = -fr
    # decimal exponent: 10^d10 <= fr < 10^(d10+1)
    d10 = math.floor(math.log10(float(fr.numerator)) - math.log10(float(fr.denominator)))
    scaled = fr * Fraction(10) ** (digits - 1 - d10)
    n = int(scaled)
    if scaled - n >= Fraction(1, 2):
        n += 1
    if n >= 10**digits:
        n //= 10
        d10 += 1
    elif n < 10 ** (digits - 1):
        n *= 10
        d10 -= 1
        scaled = fr * Fraction(10) ** (digits - 1 - d10)
        n = int(scaled)
        if scaled - n >= Fraction(1, 2):
            n += 1
    text = str(n)
    body = f"{text[0]}.{text[1:]}e{d10:+d}"
    return "-" + body if neg else body


# --------------------------------------------------------------------------
# value class
# --------------------------------------------------------------------------


class MultiWord:
    """Immutable K-word value; thin wrapper over a component tuple.

    Operators use the Standard variant; pass an explicit variant through
    the module-level functions when the branch-free kernels are wanted.
    Components are taken as given (not renormalized); use
    :meth:`normalized` to restore the overlap invariant.
    """

    __slots__ = ("comps",)

    K: int | None = None

    def __init__(self, *parts):
        if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
            parts = tuple(parts[0])
        k = self.K if self.K is not None else len(parts)
        if k not in BITS:
            raise ValueError(f"unsupported word count {k}")
        if len(parts) > k:
            raise ValueError(f"{len(parts)} components for a {k}-word value")
        comps = tuple(float(p) for p in parts) + (0.0,) * (k - len(parts))
        object.__setattr__(self, "comps", comps)

    def __setattr__(self, name, value):
        raise AttributeError("MultiWord values are immutable")

    @property
    def k(self) -> int:
        return len(self.comps)

    @classmethod
    def from_components(cls, comps) -> "MultiWord":
        k = len(comps)
        return _CLASS_BY_K[k](*comps)

    @classmethod
    def from_float(cls, x: float, k: int | None = None) -> "MultiWord":
        kk = cls.K if cls.K is not None else (k if k is not None else 2)
        return _CLASS_BY_K[kk](*from_basefloat(x, kk))

    @classmethod
    def from_decimal(cls, text: str, k: int | None = None) -> "MultiWord":
        kk = cls.K if cls.K is not None else (k if k is not None else 2)
        return _CLASS_BY_K[kk](*from_decimal_string(text, kk))

    def normalized(self) -> "MultiWord":
        return self.from_components(normalize(self.comps))

    def to_float(self) -> float:
        acc = 0.0
        for c in reversed(self.comps):
            acc += c
        return acc

    def to_oracle(self) -> OracleValue:
        return to_oracle(self.comps)

    def to_decimal(self, digits: int | None = None) -> str:
        return to_decimal_string(self.comps, digits)

    def _coerce(self, other):
        if isinstance(other, MultiWord):
            if other.k != self.k:
                raise ValueError("mixed word counts")
            return other.comps
        if isinstance(other, (int, float)):
            return from_basefloat(float(other), self.k)
        return NotImplemented

    def _wrap(self, comps):
        return _CLASS_BY_K[len(comps)](*comps)

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._wrap(mw_add(self.comps, rhs))

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._wrap(mw_sub(self.comps, rhs))

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._wrap(mw_sub(rhs, self.comps))

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._wrap(mw_mul(self.comps, rhs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._wrap(mw_div(self.comps, rhs))

    def __rtruediv__(self, other):
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return self._wrap(mw_div(rhs, self.comps))

    def __neg__(self):
        return self._wrap(mw_neg(self.comps))

    def __abs__(self):
        return -self if self.comps[0] < 0.0 else self

    def __eq__(self, other):
        if isinstance(other, MultiWord):
            if other.k != self.k:
                return False
            diff = Fraction(0)
            for x, y in zip(self.comps, other.comps):
                diff += Fraction(x) - Fraction(y)
            return diff == 0
        if isinstance(other, (int, float)):
            return self == self._wrap(from_basefloat(float(other), self.k))
        return NotImplemented

    def __hash__(self):
        return hash(self.to_oracle().as_fraction())

    def __repr__(self):
        name = type(self).__name__ if self.K is not None else f"MultiWord{self.k}"
        return f"{name}({', '.join(repr(c) for c in self.comps)})"

    def __str__(self):
        return self.to_decimal()


class DD(MultiWord):
    K = 2


class TD(MultiWord):
    K = 3


class QD(MultiWord):
    K = 4


_CLASS_BY_K = {2: DD, 3: TD, 4: QD}
