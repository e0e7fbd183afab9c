"""Error-free transformations on the base binary64 format.

Each primitive returns the rounded result together with its exact rounding
error, using nothing but IEEE additions, subtractions, multiplications and
one fused multiply-add.  They are the building blocks of every multi-word
operation in this package.

The primitives are written against plain operators plus the :func:`fma`
dispatcher below, so the same straight-line code runs on Python floats
(scalar path), on numpy float64 arrays (lane-batched path, elementwise),
and on duck-typed instrumented floats used by the flop-counting tests.
All results are bitwise identical across those paths because every step is
a single correctly rounded IEEE operation.

Assumptions: round-to-nearest-ties-even, no FP contraction or reassociation
(guaranteed in CPython/numpy where each operation is an individual rounded
call), operands finite and normal.  Overflow and subnormal underflow are out
of contract.
"""

from __future__ import annotations

import numpy as np

from . import _fmaext

_fma_scalar = _fmaext.fma
_fma_vec = _fmaext.fma_vec

__all__ = ["fma", "quick_two_sum", "two_sum", "two_prod", "assert_rounding_mode"]


def fma(a, b, c):
    """Correctly rounded a*b + c (single rounding).

    Dispatches on the type of ``a``: Python floats use the scalar C
    wrapper, numpy arrays the elementwise ufunc, numpy scalars the scalar
    wrapper; anything else must provide a ``.fma(b, c)`` method (used by
    instrumented test floats).  Mixed float/array calls must broadcast
    ``a`` to an array first (the batch layer does).
    """
    if type(a) is float:
        return _fma_scalar(a, b, c)
    if isinstance(a, np.ndarray):
        return _fma_vec(a, b, c)
    if isinstance(a, np.floating):
        return _fma_scalar(float(a), float(b), float(c))
    return a.fma(b, c)


def quick_two_sum(a, b):
    """(s, e) with s = fl(a+b) and a + b = s + e exactly.

    Precondition |a| >= |b| (or a == 0); the caller is responsible, nothing
    is checked at runtime.  Violating it silently produces a wrong error
    term.  3 flops, no branches.
    """
    s = a + b
    e = b - (s - a)
    return s, e


def two_sum(a, b):
    """(s, e) with s = fl(a+b) and a + b = s + e exactly, any magnitudes.

    6 flops, no branches.
    """
    s = a + b
    v = s - a
    e = (a - (s - v)) + (b - v)
    return s, e


def two_prod(a, b):
    """(p, e) with p = fl(a*b) and a * b = p + e exactly.

    Requires the product and its error to be representable: no overflow and
    the product exponent above the subnormal-loss threshold.  Outside that
    range e may be inexact.  2 flops (one of them the fma).
    """
    p = a * b
    e = fma(a, b, -p)
    return p, e


def assert_rounding_mode():
    """Verify round-to-nearest-ties-even, the mode every EFT proof assumes.

    Raises RuntimeError if the environment rounds differently.
    """
    # 1 + 2^-53 is halfway between 1 and 1+2^-52: ties-to-even keeps 1.0.
    # 1 + 3*2^-54 must round up to 1+2^-52 under nearest.
    if 1.0 + 2.0**-53 != 1.0 or 1.0 + 3.0 * 2.0**-54 != 1.0 + 2.0**-52:
        raise RuntimeError("FP environment is not round-to-nearest-ties-even")
