"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import random

import numpy as np
import pytest

from mwfloat import _fmaext


class CountingFloat:
    """Duck-typed float that tallies executed FP operations.

    ``arith`` counts add/sub/mul/fma; ``cmp`` counts magnitude tests and
    comparisons (they run on FP units and are what conditional branches
    feed on).  Flows through every scalar kernel via the eft.fma duck
    hook.
    """

    __slots__ = ("v",)

    arith = 0
    cmp = 0

    def __init__(self, v):
        self.v = float(v)

    @classmethod
    def reset(cls):
        cls.arith = 0
        cls.cmp = 0

    @classmethod
    def total(cls):
        return cls.arith + cls.cmp

    def _lift(self, other):
        return other.v if isinstance(other, CountingFloat) else float(other)

    def __add__(self, other):
        type(self).arith += 1
        return CountingFloat(self.v + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        type(self).arith += 1
        return CountingFloat(self.v - self._lift(other))

    def __rsub__(self, other):
        type(self).arith += 1
        return CountingFloat(self._lift(other) - self.v)

    def __mul__(self, other):
        type(self).arith += 1
        return CountingFloat(self.v * self._lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        type(self).arith += 1
        return CountingFloat(self.v / self._lift(other))

    def __rtruediv__(self, other):
        type(self).arith += 1
        return CountingFloat(self._lift(other) / self.v)

    def __neg__(self):
        return CountingFloat(-self.v)

    def __abs__(self):
        type(self).cmp += 1
        return CountingFloat(abs(self.v))

    def __gt__(self, other):
        type(self).cmp += 1
        return self.v > self._lift(other)

    def __lt__(self, other):
        type(self).cmp += 1
        return self.v < self._lift(other)

    def __ge__(self, other):
        type(self).cmp += 1
        return self.v >= self._lift(other)

    def __le__(self, other):
        type(self).cmp += 1
        return self.v <= self._lift(other)

    def __eq__(self, other):
        type(self).cmp += 1
        return self.v == self._lift(other)

    def __ne__(self, other):
        type(self).cmp += 1
        return self.v != self._lift(other)

    def __hash__(self):
        return hash(self.v)

    def __float__(self):
        return self.v

    def fma(self, b, c):
        type(self).arith += 1
        return CountingFloat(
            _fmaext.fma(self.v, self._lift(b), self._lift(c))
        )


def rand_multiword(rng: random.Random, k: int, e_lo: int = -100, e_hi: int = 100):
    """Random normalized-ish K-word value."""
    c0 = rng.uniform(1.0, 2.0) * 2.0 ** rng.randint(e_lo, e_hi)
    if rng.random() < 0.5:
        c0 = -c0
    comps = [c0]
    for _ in range(1, k):
        comps.append(comps[-1] * 2.0**-53 * rng.uniform(-0.49, 0.49))
    return tuple(comps)


def rand_multiword_arrays(rng: np.random.Generator, k: int, w: int, e_lo=-100, e_hi=100):
    c0 = rng.uniform(1.0, 2.0, w) * np.exp2(rng.integers(e_lo, e_hi + 1, w))
    c0 *= np.where(rng.random(w) < 0.5, -1.0, 1.0)
    comps = [c0]
    for _ in range(1, k):
        comps.append(comps[-1] * 2.0**-53 * rng.uniform(-0.49, 0.49, w))
    return tuple(comps)


@pytest.fixture
def rng():
    return random.Random(20240809)


@pytest.fixture
def nprng():
    return np.random.default_rng(20240809)
