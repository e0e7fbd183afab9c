"""Reference kernels and accuracy measurement in oracle arithmetic.

Small-scale matrix multiplication, polynomial evaluation and Durand-Kerner
iteration executed entirely in 300-bit arithmetic, plus the significant
decimal digit metric used throughout the benchmarks: -log10 of the
relative error against the oracle value (for complex data, the minimum
over the real and imaginary parts).
"""

from __future__ import annotations

import math

from .values import BigFloat

__all__ = [
    "significant_digits",
    "significant_digits_complex",
    "oracle_matmul",
    "oracle_cmatmul",
    "oracle_horner",
    "oracle_dk",
    "cadd",
    "csub",
    "cmul",
    "cdiv",
    "cabs2",
]

_LOG10_2 = math.log10(2.0)

MATMUL_LIMIT = 128
DK_LIMIT = 16


def digit_cap(k: int) -> float:
    """Cap reported digits at 2 * K * 16 when the error is exactly zero."""
    return 2.0 * k * 16.0


def significant_digits(approx: BigFloat, exact: BigFloat, k: int = 4) -> float:
    """-log10(|approx - exact| / |exact|); absolute error if exact == 0."""
    diff = approx.sub(exact)
    if diff.is_zero():
        return digit_cap(k)
    if exact.is_zero():
        return min(-diff.log2_magnitude() * _LOG10_2, digit_cap(k))
    rel = diff.log2_magnitude() - exact.log2_magnitude()
    return min(-rel * _LOG10_2, digit_cap(k))


def significant_digits_complex(
    approx_re: BigFloat,
    approx_im: BigFloat,
    exact_re: BigFloat,
    exact_im: BigFloat,
    k: int = 4,
) -> float:
    return min(
        significant_digits(approx_re, exact_re, k),
        significant_digits(approx_im, exact_im, k),
    )


# --- complex helpers on (re, im) BigFloat pairs -------------------------


def cadd(a, b):
    return a[0].add(b[0]), a[1].add(b[1])


def csub(a, b):
    return a[0].sub(b[0]), a[1].sub(b[1])


def cmul(a, b):
    ar, ai = a
    br, bi = b
    return ar.mul(br).sub(ai.mul(bi)), ar.mul(bi).add(ai.mul(br))


def cdiv(a, b):
    ar, ai = a
    br, bi = b
    den = br.mul(br).add(bi.mul(bi))
    re = ar.mul(br).add(ai.mul(bi)).div(den)
    im = ai.mul(br).sub(ar.mul(bi)).div(den)
    return re, im


def cabs2(a):
    return a[0].mul(a[0]).add(a[1].mul(a[1]))


# --- reference kernels ----------------------------------------------------


def oracle_matmul(a, b, n: int, m: int, p: int):
    """Row-major n x m times m x p in oracle precision (n, m, p <= 128)."""
    if max(n, m, p) > MATMUL_LIMIT:
        raise ValueError(f"oracle matmul limited to {MATMUL_LIMIT}")
    zero = BigFloat(0, 0)
    out = [zero] * (n * p)
    for i in range(n):
        arow = a[i * m : (i + 1) * m]
        for j in range(p):
            acc = zero
            for t in range(m):
                acc = acc.add(arow[t].mul(b[t * p + j]))
            out[i * p + j] = acc
    return out


def oracle_cmatmul(a_re, a_im, b_re, b_im, n: int, m: int, p: int):
    """Complex reference product, conventional four real multiplications."""
    if max(n, m, p) > MATMUL_LIMIT:
        raise ValueError(f"oracle matmul limited to {MATMUL_LIMIT}")
    zero = BigFloat(0, 0)
    out_re = [zero] * (n * p)
    out_im = [zero] * (n * p)
    for i in range(n):
        for j in range(p):
            acc_re = zero
            acc_im = zero
            for t in range(m):
                ar = a_re[i * m + t]
                ai = a_im[i * m + t]
                br = b_re[t * p + j]
                bi = b_im[t * p + j]
                acc_re = acc_re.add(ar.mul(br)).sub(ai.mul(bi))
                acc_im = acc_im.add(ar.mul(bi)).add(ai.mul(br))
            out_re[i * p + j] = acc_re
            out_im[i * p + j] = acc_im
    return out_re, out_im


def oracle_horner(coeffs, x: BigFloat) -> BigFloat:
    """Polynomial value at x, coefficients low to high."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc.mul(x).add(c)
    return acc


def oracle_horner_complex(coeffs, z):
    """coeffs are (re, im) pairs, z a (re, im) pair."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = cadd(cmul(acc, z), c)
    return acc


def oracle_dk(monic_coeffs, init, max_iter: int = 200, tol_log2: int = -280):
    """Durand-Kerner in oracle arithmetic for degree <= 16.

    monic_coeffs: list of (re, im) BigFloat pairs c[0..n-1], the monic
    polynomial x^n + sum c_i x^i.  init: starting points as (re, im)
    pairs.  Returns (roots, iterations).
    """
    n = len(monic_coeffs)
    if n > DK_LIMIT:
        raise ValueError(f"oracle DK limited to degree {DK_LIMIT}")
    one = BigFloat(1, 0)
    zero = BigFloat(0, 0)
    coeffs = list(monic_coeffs) + [(one, zero)]
    z = list(init)
    for it in range(1, max_iter + 1):
        new_z = []
        max_step = None
        for i in range(n):
            num = oracle_horner_complex(coeffs, z[i])
            den = (one, zero)
            for j in range(n):
                if j != i:
                    den = cmul(den, csub(z[i], z[j]))
            step = cdiv(num, den)
            new_z.append(csub(z[i], step))
            mag = cabs2(step)
            if not mag.is_zero():
                lg = mag.log2_magnitude() / 2.0
                if max_step is None or lg > max_step:
                    max_step = lg
        z = new_z
        if max_step is None or max_step < tol_log2:
            return z, it
    return z, max_iter
