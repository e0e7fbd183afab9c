"""Transcendental reference functions on big integers.

pi comes from a Machin formula evaluated in scaled integers, sqrt from
exact integer square roots, exp/log/cos/sin from argument-reduced series.
Everything is computed with 32 guard bits and rounded to the target
precision, so results are within 2^-32 ulp of correctly rounded.  Each is
validated in the test suite against 100-digit published constants (see
:mod:`mwfloat.oracle.constants`).  These exist to generate multi-word
constants and to measure accuracy; speed is a non-goal.
"""

from __future__ import annotations

import math

from .values import PREC, BigFloat

__all__ = [
    "oracle_pi",
    "oracle_sqrt",
    "oracle_exp",
    "oracle_log",
    "oracle_cos",
    "oracle_sin",
    "oracle_pow",
    "oracle_ln2",
]

_GUARD = 32


def _atan_inv_scaled(x: int, shift: int) -> int:
    """floor-ish of atan(1/x) * 2^shift via the alternating Taylor series."""
    one = 1 << shift
    term = one // x
    total = term
    x2 = x * x
    k = 1
    sign = -1
    while term:
        term = term // x2
        total += sign * (term // (2 * k + 1))
        sign = -sign
        k += 1
    return total


def oracle_pi(prec: int = PREC) -> BigFloat:
    """pi = 16 atan(1/5) - 4 atan(1/239) (Machin)."""
    shift = prec + _GUARD
    s = 16 * _atan_inv_scaled(5, shift) - 4 * _atan_inv_scaled(239, shift)
    return BigFloat(s, -shift, prec)


def oracle_ln2(prec: int = PREC) -> BigFloat:
    """ln 2 = 2 atanh(1/3) = 2 sum (1/3)^(2k+1) / (2k+1)."""
    shift = prec + _GUARD
    term = (1 << shift) // 3
    total = term
    k = 1
    while term:
        term //= 9
        total += term // (2 * k + 1)
        k += 1
    return BigFloat(2 * total, -shift, prec)


def oracle_sqrt(v: BigFloat, prec: int = PREC) -> BigFloat:
    if v.sign() < 0:
        raise ValueError("sqrt of negative oracle value")
    wide = BigFloat(v.m, v.e, prec + _GUARD, _exact=True)
    r = wide.sqrt()
    return BigFloat(r.m, r.e, prec)


def oracle_exp(v: BigFloat, prec: int = PREC) -> BigFloat:
    """exp via x = k ln2 + r, |r| <= ln2/2, then the Taylor series."""
    wp = prec + _GUARD
    if v.is_zero():
        return BigFloat(1, 0, prec)
    ln2 = oracle_ln2(wp + 16)
    k = int(round(v.to_float() / math.log(2.0)))
    x = BigFloat(v.m, v.e, wp, _exact=True)
    r = x.sub(BigFloat.from_int(k, wp + 16).mul(ln2))
    # series sum r^n / n! in scaled integers, sign tracked separately so
    # floor shifts never stall on small negative terms
    shift = wp + 16
    rf = r.to_fraction()
    r_scaled = int(rf * (1 << shift))  # |r| <= 0.35: exact enough with guard
    neg_r = r_scaled < 0
    rmag = -r_scaled if neg_r else r_scaled
    total = 1 << shift
    term = 1 << shift
    n = 1
    while term:
        term = ((term * rmag) >> shift) // n
        total += -term if (neg_r and n % 2) else term
        n += 1
    return BigFloat(total, -shift + k, prec)


def oracle_log(v: BigFloat, prec: int = PREC) -> BigFloat:
    """Newton iteration y += x e^-y - 1 from a double-precision seed."""
    if v.sign() <= 0:
        raise ValueError("log of non-positive oracle value")
    wp = prec + _GUARD
    y = BigFloat.from_float(math.log(v.to_float()), wp)
    x = BigFloat(v.m, v.e, wp, _exact=True)
    one = BigFloat(1, 0, wp)
    # 53-bit seed doubles per step; 4 steps pass 300 + guard bits
    for _ in range(4):
        ey = oracle_exp(-y, wp)
        y = y.add(x.mul(ey).sub(one))
    return BigFloat(y.m, y.e, prec)


def _sin_cos_reduced(r: BigFloat, wp: int) -> tuple[BigFloat, BigFloat]:
    """(sin r, cos r) for 0 <= r < pi/2, by Taylor series."""
    shift = wp + 16
    rf = r.to_fraction()
    r_scaled = int(rf * (1 << shift))
    r2 = (r_scaled * r_scaled) >> shift
    # sin
    term = r_scaled
    total_s = term
    n = 1
    while term:
        term = (term * r2) >> shift
        term //= (2 * n) * (2 * n + 1)
        total_s += -term if n % 2 else term
        n += 1
    # cos
    term = 1 << shift
    total_c = term
    n = 1
    while term:
        term = (term * r2) >> shift
        term //= (2 * n - 1) * (2 * n)
        total_c += -term if n % 2 else term
        n += 1
    return BigFloat(total_s, -shift, wp), BigFloat(total_c, -shift, wp)


def _reduce_angle(v: BigFloat, wp: int) -> tuple[int, BigFloat]:
    """v = q * (pi/2) + r with 0 <= r < pi/2; returns (q mod 4, r)."""
    pi = oracle_pi(wp + 16)
    half_pi = BigFloat(pi.m, pi.e - 1, wp + 16, _exact=True)
    q = math.floor(v.div(half_pi).to_float())
    r = v.sub(BigFloat.from_int(q, wp + 16).mul(half_pi))
    # guard against edge rounding of the float quotient
    while r.sign() < 0:
        q -= 1
        r = r.add(half_pi)
    while r.compare(half_pi) >= 0:
        q += 1
        r = r.sub(half_pi)
    return q % 4, r


def oracle_sin(v: BigFloat, prec: int = PREC) -> BigFloat:
    wp = prec + _GUARD
    q, r = _reduce_angle(BigFloat(v.m, v.e, wp, _exact=True), wp)
    s, c = _sin_cos_reduced(r, wp)
    out = (s, c, -s, -c)[q]
    return BigFloat(out.m, out.e, prec)


def oracle_cos(v: BigFloat, prec: int = PREC) -> BigFloat:
    wp = prec + _GUARD
    q, r = _reduce_angle(BigFloat(v.m, v.e, wp, _exact=True), wp)
    s, c = _sin_cos_reduced(r, wp)
    out = (c, -s, -c, s)[q]
    return BigFloat(out.m, out.e, prec)


def oracle_pow(v: BigFloat, num: int, den: int, prec: int = PREC) -> BigFloat:
    """v ** (num/den) for positive v, via exp(log(v) * num/den)."""
    if v.sign() <= 0:
        raise ValueError("pow requires a positive base")
    wp = prec + _GUARD
    lg = oracle_log(v, wp)
    arg = lg.mul(BigFloat.from_int(num, wp)).div(BigFloat.from_int(den, wp))
    out = oracle_exp(arg, wp)
    return BigFloat(out.m, out.e, prec)
