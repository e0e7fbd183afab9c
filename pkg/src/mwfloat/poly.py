"""Real-coefficient polynomial evaluation in multi-word arithmetic.

Horner's rule, Estrin's pairwise scheme, a lane-batched Estrin over many
evaluation points, and complex-argument evaluation on top of the 3M
complex kernels.  Estrin is run iteratively over a coefficient array
zero-padded to a power of two; padding with exact zeros cannot change the
value, and the inner loop is straight-line.
"""

from __future__ import annotations

import numpy as np

from .batch import LaneBatch, _BATCH_ADD, _BATCH_MUL
from .multiword import (
    BITS,
    MultiWord,
    Variant,
    cadd,
    cmul,
    from_basefloat,
    from_decimal_string,
    mw_add,
    mw_mul,
    to_decimal_string,
)

__all__ = [
    "MWPolynomial",
    "horner_eval",
    "estrin_eval",
    "estrin_eval_batched",
    "eval_complex",
    "random_polynomial",
    "write_polynomial",
    "read_polynomial",
]


class MWPolynomial:
    """Coefficients a[0..n] (a[i] multiplies x^i), component-planar."""

    __slots__ = ("comps", "degree")

    def __init__(self, comps):
        arrays = tuple(np.ascontiguousarray(c, dtype=np.float64) for c in comps)
        if len(arrays) not in BITS:
            raise ValueError(f"unsupported word count {len(arrays)}")
        n = arrays[0].shape[0]
        for a in arrays:
            if a.ndim != 1 or a.shape[0] != n:
                raise ValueError("coefficient arrays must be equal-length 1-D")
        if n == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        self.comps = arrays
        self.degree = n - 1

    @property
    def k(self) -> int:
        return len(self.comps)

    @classmethod
    def from_coeffs(cls, coeffs, k: int | None = None) -> "MWPolynomial":
        """coeffs: list of MultiWord / component tuples / floats, low to high."""
        rows = []
        for c in coeffs:
            if isinstance(c, MultiWord):
                rows.append(c.comps)
            elif isinstance(c, (tuple, list)):
                rows.append(tuple(c))
            else:
                if k is None:
                    raise ValueError("k required for bare float coefficients")
                rows.append(from_basefloat(float(c), k))
        kk = len(rows[0])
        arrays = tuple(np.array([r[c] for r in rows]) for c in range(kk))
        return cls(arrays)

    def coeff(self, i: int) -> tuple:
        return tuple(float(c[i]) for c in self.comps)

    def coeffs(self) -> list:
        return [self.coeff(i) for i in range(self.degree + 1)]

    def __repr__(self):
        return f"MWPolynomial(k={self.k}, degree={self.degree})"


def horner_eval(p: MWPolynomial, x, variant: Variant = Variant.STANDARD):
    """b := a[n]; b := b*x + a[i] downward.  x is a K-word tuple."""
    if isinstance(x, MultiWord):
        x = x.comps
    acc = p.coeff(p.degree)
    for i in range(p.degree - 1, -1, -1):
        acc = mw_add(mw_mul(acc, x, variant), p.coeff(i), variant)
    return acc


def _padded_length(n_coeffs: int) -> int:
    length = 1
    while length < n_coeffs:
        length *= 2
    return length


def estrin_eval(p: MWPolynomial, x, variant: Variant = Variant.STANDARD):
    """Pairwise combine a[2i] + a[2i+1] * x, square x, repeat."""
    if isinstance(x, MultiWord):
        x = x.comps
    k = p.k
    length = _padded_length(p.degree + 1)
    zero = (0.0,) * k
    level = [p.coeff(i) if i <= p.degree else zero for i in range(length)]
    while length > 1:
        nxt = []
        for i in range(0, length, 2):
            nxt.append(mw_add(level[i], mw_mul(level[i + 1], x, variant), variant))
        level = nxt
        length //= 2
        if length > 1:
            x = mw_mul(x, x, variant)
    return level[0]


def estrin_eval_batched(
    p: MWPolynomial, xs: LaneBatch, variant: Variant = Variant.STANDARD
) -> LaneBatch:
    """Per-lane bitwise equal to estrin_eval at each lane's point."""
    if xs.k != p.k:
        raise ValueError("mixed word counts")
    k = p.k
    w = xs.width
    add = _BATCH_ADD[k, variant]
    mul = _BATCH_MUL[k, variant]
    length = _padded_length(p.degree + 1)
    zero = tuple(np.zeros(w) for _ in range(k))
    level = []
    for i in range(length):
        if i <= p.degree:
            coeff = p.coeff(i)
            level.append(tuple(np.full(w, coeff[c]) for c in range(k)))
        else:
            level.append(zero)
    x = xs.comps
    while length > 1:
        nxt = []
        for i in range(0, length, 2):
            nxt.append(add(level[i], mul(level[i + 1], x)))
        level = nxt
        length //= 2
        if length > 1:
            x = mul(x, x)
    return LaneBatch(level[0], count=xs.count)


def eval_complex(p: MWPolynomial, z, method: str = "horner", variant: Variant = Variant.STANDARD):
    """Evaluate at a complex point z = (re, im) of K-word tuples."""
    zero = (0.0,) * p.k
    coeffs = [(p.coeff(i), zero) for i in range(p.degree + 1)]
    if method == "horner":
        acc = coeffs[-1]
        for i in range(p.degree - 1, -1, -1):
            acc = cadd(cmul(acc, z, variant), coeffs[i], variant)
        return acc
    if method == "estrin":
        length = _padded_length(p.degree + 1)
        czero = (zero, zero)
        level = [coeffs[i] if i <= p.degree else czero for i in range(length)]
        while length > 1:
            nxt = []
            for i in range(0, length, 2):
                nxt.append(cadd(level[i], cmul(level[i + 1], z, variant), variant))
            level = nxt
            length //= 2
            if length > 1:
                z = cmul(z, z, variant)
        return level[0]
    raise ValueError(f"unknown method {method!r}")


def random_polynomial(n: int, seed: int, k: int) -> MWPolynomial:
    """Degree-n polynomial with uniform [-1, 1] base-float coefficients
    promoted exactly to K words; the leading coefficient is resampled
    until nonzero so the degree claim holds."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    rng = np.random.Generator(np.random.PCG64(seed))
    c0 = rng.uniform(-1.0, 1.0, n + 1)
    while c0[n] == 0.0:
        c0[n] = rng.uniform(-1.0, 1.0)
    zeros = np.zeros(n + 1)
    return MWPolynomial((c0,) + (zeros,) * (k - 1))


def write_polynomial(path, p: MWPolynomial, digits: int | None = None):
    """Header "POLY K n", then n+1 coefficients low to high."""
    with open(path, "w") as fh:
        fh.write(f"POLY {p.k} {p.degree}\n")
        for i in range(p.degree + 1):
            fh.write(to_decimal_string(p.coeff(i), digits) + "\n")


def read_polynomial(path) -> MWPolynomial:
    with open(path) as fh:
        head = fh.readline().split()
        if len(head) != 3 or head[0] != "POLY":
            raise ValueError(f"bad polynomial header in {path}")
        k, n = int(head[1]), int(head[2])
        toks = fh.read().split()
    if len(toks) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, found {len(toks)}")
    return MWPolynomial.from_coeffs([from_decimal_string(t, k) for t in toks])
