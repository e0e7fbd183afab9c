"""Exact and 300-bit reference arithmetic on Python big integers.

Two value modes back the verification oracle:

* exact rationals (``fractions.Fraction`` over native big ints) for
  error-free-transformation identities, where every float is a dyadic
  rational and +, -, *, / stay exact;
* :class:`BigFloat`, a fixed-precision binary float (default 300 bits,
  round-to-nearest-ties-even) for transcendental constants and large
  reference computations.

300 bits exceeds quad-word precision (212 bits) by more than 80 guard
bits, so digit measurements taken here are exact to far better than the
reported resolution.  Everything is built from primitive ``int``
operations; no external multiple-precision library is involved, keeping
the verification chain independent of the arithmetic under test.
"""

from __future__ import annotations

import math
from fractions import Fraction

PREC = 300

__all__ = [
    "PREC",
    "BigFloat",
    "OracleValue",
    "exact_add",
    "exact_mul",
    "exact_div",
    "float_pair_sum_exact",
    "float_pair_prod_exact",
]


def _round_mant(m: int, e: int, prec: int) -> tuple[int, int]:
    """Round m * 2^e to at most prec mantissa bits, ties to even."""
    if m == 0:
        return 0, 0
    neg = m < 0
    if neg:
        m = -m
    excess = m.bit_length() - prec
    if excess > 0:
        low = m & ((1 << excess) - 1)
        m >>= excess
        e += excess
        half = 1 << (excess - 1)
        if low > half or (low == half and (m & 1)):
            m += 1
            if m.bit_length() > prec:
                m >>= 1
                e += 1
    return (-m if neg else m), e


class BigFloat:
    """Immutable binary float m * 2^e with a fixed precision in bits.

    The mantissa carries the sign and never exceeds ``prec`` bits; every
    constructor and operation rounds to nearest, ties to even.
    """

    __slots__ = ("m", "e", "prec")

    def __init__(self, m: int, e: int, prec: int = PREC, _exact: bool = False):
        if not _exact:
            m, e = _round_mant(m, e, prec)
        if m == 0:
            e = 0
        self.m = m
        self.e = e
        self.prec = prec

    # --- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int, prec: int = PREC) -> "BigFloat":
        return cls(n, 0, prec)

    @classmethod
    def from_float(cls, x: float, prec: int = PREC) -> "BigFloat":
        """Exact conversion; every finite binary64 fits in 53 bits."""
        if math.isnan(x) or math.isinf(x):
            raise ValueError("non-finite float has no oracle value")
        num, den = x.as_integer_ratio()
        return cls(num, -(den.bit_length() - 1), prec)

    @classmethod
    def from_components(cls, comps, prec: int = PREC) -> "BigFloat":
        """Exact sum of binary64 components (a multi-word value)."""
        pairs = []
        for c in comps:
            if c != 0.0:
                num, den = float(c).as_integer_ratio()
                pairs.append((num, -(den.bit_length() - 1)))
        if not pairs:
            return cls(0, 0, prec)
        emin = min(e for _, e in pairs)
        m = 0
        for num, e in pairs:
            m += num << (e - emin)
        return cls(m, emin, prec)

    @classmethod
    def from_fraction(cls, fr: Fraction, prec: int = PREC) -> "BigFloat":
        if fr == 0:
            return cls(0, 0, prec)
        num, den = fr.numerator, fr.denominator
        shift = prec + 8 + max(0, den.bit_length() - num.bit_length())
        q, r = divmod(abs(num) << shift, den)
        if r:
            q |= 1
        if num < 0:
            q = -q
        return cls(q, -shift, prec)

    # --- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.m == 0

    def sign(self) -> int:
        return (self.m > 0) - (self.m < 0)

    def to_fraction(self) -> Fraction:
        if self.e >= 0:
            return Fraction(self.m << self.e)
        return Fraction(self.m, 1 << -self.e)

    def to_float(self) -> float:
        """Nearest binary64 (ties to even)."""
        if self.m == 0:
            return 0.0
        m, e = _round_mant(self.m, self.e, 53)
        return math.ldexp(m, e)

    def log2_magnitude(self) -> float:
        """log2 |value| accurate to ~1e-15, for digit accounting."""
        if self.m == 0:
            raise ZeroDivisionError("log2 of zero")
        m = abs(self.m)
        bl = m.bit_length()
        top = m >> (bl - 53) if bl > 53 else m << (53 - bl)
        return (bl - 53 + self.e) + math.log2(top)

    # --- arithmetic -----------------------------------------------------

    def __neg__(self) -> "BigFloat":
        return BigFloat(-self.m, self.e, self.prec, _exact=True)

    def __abs__(self) -> "BigFloat":
        return BigFloat(abs(self.m), self.e, self.prec, _exact=True)

    def add(self, other: "BigFloat") -> "BigFloat":
        prec = self.prec
        if self.m == 0:
            return BigFloat(other.m, other.e, prec)
        if other.m == 0:
            return BigFloat(self.m, self.e, prec)
        top_self = self.m.bit_length() + self.e
        top_other = other.m.bit_length() + other.e
        if top_self >= top_other:
            hi, lo = self, other
            sep = top_self - top_other
        else:
            hi, lo = other, self
            sep = top_other - top_self
        if sep > prec + 8:
            # lo is far below hi's rounding boundary: fold it into a
            # sticky bit placed well under the kept mantissa
            g = max(8, prec + 16 - hi.m.bit_length())
            return BigFloat((hi.m << g) + lo.sign(), hi.e - g, prec)
        sh = hi.e - lo.e
        if sh >= 0:
            return BigFloat((hi.m << sh) + lo.m, lo.e, prec)
        return BigFloat(hi.m + (lo.m << -sh), hi.e, prec)

    def sub(self, other: "BigFloat") -> "BigFloat":
        return self.add(-other)

    def mul(self, other: "BigFloat") -> "BigFloat":
        return BigFloat(self.m * other.m, self.e + other.e, self.prec)

    def div(self, other: "BigFloat") -> "BigFloat":
        if other.m == 0:
            raise ZeroDivisionError("oracle division by zero")
        if self.m == 0:
            return BigFloat(0, 0, self.prec)
        shift = self.prec + 8 + max(0, other.m.bit_length() - self.m.bit_length())
        q, r = divmod(abs(self.m) << shift, abs(other.m))
        if r:
            q |= 1
        if (self.m < 0) != (other.m < 0):
            q = -q
        return BigFloat(q, self.e - other.e - shift, self.prec)

    def sqrt(self) -> "BigFloat":
        if self.m < 0:
            raise ValueError("oracle sqrt of negative value")
        if self.m == 0:
            return BigFloat(0, 0, self.prec)
        m, e = self.m, self.e
        k = max(0, 2 * self.prec + 4 - m.bit_length())
        if (e - k) % 2:
            k += 1
        M = m << k
        r = math.isqrt(M)
        if r * r != M:
            # place a sticky bit one position below the floor root
            r = (r << 1) | 1
            return BigFloat(r, (e - k) // 2 - 1, self.prec)
        return BigFloat(r, (e - k) // 2, self.prec)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __truediv__ = div

    # --- comparison -----------------------------------------------------

    def compare(self, other: "BigFloat") -> int:
        d = self.sub(other)
        return d.sign()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigFloat):
            return NotImplemented
        return self.to_fraction() == other.to_fraction()

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __hash__(self):
        return hash(self.to_fraction())

    def __repr__(self) -> str:
        return f"BigFloat({self.m}, {self.e})"


class OracleValue:
    """Mode-tagged reference number: exact rational or 300-bit float.

    Rational mode stays exact under +, -, *, /; any operation that mixes
    in a float-mode operand (or a transcendental result) demotes to the
    fixed 300-bit mode.
    """

    __slots__ = ("mode", "val")

    def __init__(self, val, mode: str | None = None):
        if mode is None:
            mode = "float" if isinstance(val, BigFloat) else "rational"
        if mode == "rational" and not isinstance(val, Fraction):
            val = Fraction(val)
        self.mode = mode
        self.val = val

    @classmethod
    def from_float(cls, x: float) -> "OracleValue":
        return cls(Fraction(x), "rational")

    @classmethod
    def from_components(cls, comps) -> "OracleValue":
        total = Fraction(0)
        for c in comps:
            total += Fraction(float(c))
        return cls(total, "rational")

    def as_bigfloat(self, prec: int = PREC) -> BigFloat:
        if self.mode == "float":
            return self.val
        return BigFloat.from_fraction(self.val, prec)

    def as_fraction(self) -> Fraction:
        if self.mode == "rational":
            return self.val
        return self.val.to_fraction()

    def is_zero(self) -> bool:
        return self.val == 0 if self.mode == "rational" else self.val.is_zero()

    def _binop(self, other: "OracleValue", ratop, bfop) -> "OracleValue":
        if self.mode == "rational" and other.mode == "rational":
            return OracleValue(ratop(self.val, other.val), "rational")
        return OracleValue(bfop(self.as_bigfloat(), other.as_bigfloat()), "float")

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b, BigFloat.add)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b, BigFloat.sub)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b, BigFloat.mul)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("oracle division by zero")
        return self._binop(other, lambda a, b: a / b, BigFloat.div)

    def __neg__(self):
        if self.mode == "rational":
            return OracleValue(-self.val, "rational")
        return OracleValue(-self.val, "float")

    def __eq__(self, other):
        if not isinstance(other, OracleValue):
            return NotImplemented
        return self.as_fraction() == other.as_fraction()

    def __hash__(self):
        return hash(self.as_fraction())

    def __repr__(self):
        return f"OracleValue({self.val!r}, mode={self.mode!r})"


def exact_add(a: OracleValue, b: OracleValue) -> OracleValue:
    return a + b


def exact_mul(a: OracleValue, b: OracleValue) -> OracleValue:
    return a * b


def exact_div(a: OracleValue, b: OracleValue) -> OracleValue:
    return a / b


def _dyadic(x: float) -> tuple[int, int]:
    num, den = x.as_integer_ratio()
    return num, -(den.bit_length() - 1)


def float_pair_sum_exact(a: float, b: float, s: float, e: float) -> bool:
    """Whether a + b == s + e holds exactly (pure integer check)."""
    parts = [_dyadic(v) for v in (a, b)]
    parts += [(-n, ex) for n, ex in (_dyadic(s), _dyadic(e))]
    emin = min(ex for _, ex in parts)
    acc = 0
    for n, ex in parts:
        acc += n << (ex - emin)
    return acc == 0


def float_pair_prod_exact(a: float, b: float, p: float, e: float) -> bool:
    """Whether a * b == p + e holds exactly (pure integer check)."""
    na, ea = _dyadic(a)
    nb, eb = _dyadic(b)
    npr, epr = na * nb, ea + eb
    ns, es = _dyadic(p)
    ne, ee = _dyadic(e)
    emin = min(epr, es, ee)
    return (npr << (epr - emin)) == (ns << (es - emin)) + (ne << (ee - emin))
