"""Durand-Kerner simultaneous root finding over complex multi-word values.

All n root approximations are updated together (Jacobi style: each sweep
reads only the previous state), with starting points on a circle around
the coefficient centroid whose radius comes from a coefficient-magnitude
bound.  Updates run lane-batched across the n roots.  Transcendental
constants for the initialization (pi, cos, sin, fractional powers) are
computed once in the oracle and rounded; the multi-word arithmetic itself
needs no elementary functions.

The test-problem generator builds the even-coefficient integration
polynomial family with exact rational coefficients; the garbled summation
weight in the printed source is pluggable (see ``chebyshev_coeffs``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .batch import _BATCH_ADD, _BATCH_MUL
from .multiword import (
    _DIV_ITERS,
    _newton_div,
    BITS,
    MultiWord,
    Variant,
    from_basefloat,
    from_oracle,
    mw_div,
    mw_neg,
)
from .oracle import (
    BigFloat,
    oracle_cos,
    oracle_horner_complex,
    oracle_pi,
    oracle_pow,
    oracle_sin,
)
from .poly import MWPolynomial

__all__ = [
    "MonicPoly",
    "RootState",
    "CollisionError",
    "NoConvergence",
    "aberth_init",
    "radius_estimate",
    "dk_iterate",
    "dk_solve",
    "chebyshev_coeffs",
    "residual_check",
    "default_tolerance",
]


class CollisionError(ValueError):
    """Two root approximations coincided; the update is undefined."""


class NoConvergence(RuntimeError):
    """Iteration budget exhausted; carries the best state reached."""

    def __init__(self, message, state):
        super().__init__(message)
        self.state = state


class MonicPoly:
    """q(x) = x^n + sum c_i x^i with K-word coefficients c[0..n-1]."""

    __slots__ = ("comps", "n")

    def __init__(self, comps):
        arrays = tuple(np.ascontiguousarray(c, dtype=np.float64) for c in comps)
        if len(arrays) not in BITS:
            raise ValueError(f"unsupported word count {len(arrays)}")
        n = arrays[0].shape[0]
        for a in arrays:
            if a.ndim != 1 or a.shape[0] != n:
                raise ValueError("coefficient arrays must be equal-length 1-D")
        if n < 1:
            raise ValueError("monic polynomial needs degree >= 1")
        self.comps = arrays
        self.n = n

    @property
    def k(self) -> int:
        return len(self.comps)

    @classmethod
    def from_polynomial(cls, p: MWPolynomial, variant: Variant = Variant.STANDARD) -> "MonicPoly":
        """Divide through by the leading coefficient."""
        an = p.coeff(p.degree)
        if all(c == 0.0 for c in an):
            raise ValueError("leading coefficient is zero")
        rows = [mw_div(p.coeff(i), an, variant) for i in range(p.degree)]
        k = p.k
        return cls(tuple(np.array([r[c] for r in rows]) for c in range(k)))

    @classmethod
    def from_coeffs(cls, coeffs, k: int | None = None) -> "MonicPoly":
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
        return cls(tuple(np.array([r[c] for r in rows]) for c in range(kk)))

    def coeff(self, i: int) -> tuple:
        return tuple(float(c[i]) for c in self.comps)

    def oracle_coeffs(self):
        """Exact (re, im) BigFloat pairs of c[0..n-1]."""
        zero = BigFloat(0, 0)
        return [
            (BigFloat.from_components(self.coeff(i)), zero) for i in range(self.n)
        ]

    def __repr__(self):
        return f"MonicPoly(k={self.k}, n={self.n})"


@dataclass
class RootState:
    """Simultaneous approximations: component-planar (re, im) lane arrays."""

    re: tuple
    im: tuple
    iteration: int = 0
    converged: bool = False
    last_max_update: float = math.inf

    @property
    def n(self) -> int:
        return self.re[0].shape[0]

    @property
    def k(self) -> int:
        return len(self.re)

    def root(self, i: int):
        return (
            tuple(float(c[i]) for c in self.re),
            tuple(float(c[i]) for c in self.im),
        )

    def roots(self) -> list:
        return [self.root(i) for i in range(self.n)]


def default_tolerance(k: int) -> float:
    """Relative step threshold 2^(-bits + 10)."""
    return math.ldexp(1.0, -BITS[k] + 10)


def radius_estimate(q: MonicPoly, variant: Variant = Variant.STANDARD):
    """r = max over nonzero c_i of |n_nz c_i|^(1/(n-i)), K words.

    n_nz counts the nonzero coefficients among c_0..c_{n-1} plus the
    leading one.  All coefficients zero gives r = 1.
    """
    n = q.n
    nz = [i for i in range(n) if any(c != 0.0 for c in q.coeff(i))]
    if not nz:
        return from_basefloat(1.0, q.k)
    n_nz = len(nz) + 1
    best = None
    nnz_bf = BigFloat.from_int(n_nz)
    for i in nz:
        mag = abs(BigFloat.from_components(q.coeff(i)))
        r_i = oracle_pow(nnz_bf.mul(mag), 1, n - i)
        if best is None or r_i.compare(best) > 0:
            best = r_i
    return from_oracle(best, q.k)


def aberth_init(q: MonicPoly, variant: Variant = Variant.STANDARD) -> RootState:
    """Points -c_{n-1}/n + r exp(i (2(j-1)pi/n + 3/(2n))), j = 1..n.

    Angles and the radius are evaluated in the oracle and rounded to K
    words; the centroid shift runs in K-word arithmetic.
    """
    n = q.n
    k = q.k
    add = _BATCH_ADD[k, variant]
    mul = _BATCH_MUL[k, variant]

    center = mw_neg(mw_div(q.coeff(n - 1), from_basefloat(float(n), k), variant))
    radius = radius_estimate(q, variant)

    pi = oracle_pi()
    two_over_n = BigFloat.from_fraction(Fraction(2, n))
    offset = BigFloat.from_fraction(Fraction(3, 2 * n))
    re = tuple(np.zeros(n) for _ in range(k))
    im = tuple(np.zeros(n) for _ in range(k))
    for j in range(1, n + 1):
        theta = BigFloat.from_int(j - 1).mul(two_over_n).mul(pi).add(offset)
        cosv = from_oracle(oracle_cos(theta), k)
        sinv = from_oracle(oracle_sin(theta), k)
        for c in range(k):
            re[c][j - 1] = cosv[c]
            im[c][j - 1] = sinv[c]
    rad = tuple(np.full(n, radius[c]) for c in range(k))
    cen_re = tuple(np.full(n, center[c]) for c in range(k))
    zre = add(cen_re, mul(rad, re))
    zim = mul(rad, im)

    state = RootState(re=zre, im=zim)
    _check_distinct(state)
    return state


def _check_distinct(state: RootState):
    zre = state.re[0]
    zim = state.im[0]
    n = state.n
    for i in range(n):
        d2 = (zre - zre[i]) ** 2 + (zim - zim[i]) ** 2
        d2[i] = np.inf
        j = int(np.argmin(d2))
        if d2[j] == 0.0 and state.root(i) == state.root(j):
            raise CollisionError(f"approximations {i} and {j} coincide")


def _broadcast_roots(coeff, n):
    return tuple(np.full(n, c) for c in coeff)


def dk_iterate(q: MonicPoly, state: RootState, variant: Variant = Variant.STANDARD) -> RootState:
    """One simultaneous sweep of the second-order recurrence.

    z_i <- z_i - q(z_i) / prod_{j != i} (z_i - z_j), all i updated from the
    frozen previous state.  A zero denominator factor raises
    CollisionError.
    """
    n = q.n
    k = q.k
    add = _BATCH_ADD[k, variant]
    mul = _BATCH_MUL[k, variant]

    def c_add(a, b):
        return (add(a[0], b[0]), add(a[1], b[1]))

    def c_sub(a, b):
        return (add(a[0], tuple(-x for x in b[0])), add(a[1], tuple(-x for x in b[1])))

    def c_mul(a, b):
        ar, ai = a
        br, bi = b
        p1 = mul(ar, br)
        p2 = mul(ai, bi)
        p3 = mul(add(ar, ai), add(br, bi))
        return (
            add(p1, tuple(-x for x in p2)),
            add(add(p3, tuple(-x for x in p1)), tuple(-x for x in p2)),
        )

    z = (state.re, state.im)

    # numerator: monic Horner q(z_i) across all lanes
    acc = (_broadcast_roots((1.0,) + (0.0,) * (k - 1), n), _broadcast_roots((0.0,) * k, n))
    for i in range(n - 1, -1, -1):
        acc = c_mul(acc, z)
        ci = (_broadcast_roots(q.coeff(i), n), _broadcast_roots((0.0,) * k, n))
        acc = c_add(acc, ci)

    # denominator: prod over j of (z_i - z_j), the j == i factor pinned to 1
    den = (_broadcast_roots((1.0,) + (0.0,) * (k - 1), n), _broadcast_roots((0.0,) * k, n))
    for j in range(n):
        zj = (
            _broadcast_roots(tuple(float(c[j]) for c in state.re), n),
            _broadcast_roots(tuple(float(c[j]) for c in state.im), n),
        )
        factor = c_sub(z, zj)
        for c in range(k):
            factor[0][c][j] = 1.0 if c == 0 else 0.0
            factor[1][c][j] = 0.0
        lead = np.abs(factor[0][0]) + np.abs(factor[1][0])
        if np.any(lead == 0.0):
            bad = int(np.argmin(lead))
            raise CollisionError(f"z_{bad} equals z_{j}; denominator vanishes")
        den = c_mul(den, factor)

    # step = q(z)/den: complex division via conj(den)/|den|^2 with the
    # shared Newton reciprocal in lane arithmetic
    with np.errstate(divide="ignore", invalid="ignore"):
        dr, di = den
        mag = add(mul(dr, dr), mul(di, di))
        num_re = add(mul(acc[0], dr), mul(acc[1], di))
        num_im = add(mul(acc[1], dr), tuple(-x for x in mul(acc[0], di)))
        step_re = _newton_div(num_re, mag, add, mul, _DIV_ITERS[k])
        step_im = _newton_div(num_im, mag, add, mul, _DIV_ITERS[k])

    new_re = add(z[0], tuple(-x for x in step_re))
    new_im = add(z[1], tuple(-x for x in step_im))

    step_mag = np.hypot(step_re[0], step_im[0])
    return RootState(
        re=new_re,
        im=new_im,
        iteration=state.iteration + 1,
        converged=False,
        last_max_update=float(np.max(step_mag)),
    )


def dk_solve(
    q: MonicPoly,
    variant: Variant = Variant.STANDARD,
    tol: float | None = None,
    max_iter: int = 200,
    state: RootState | None = None,
):
    """Iterate from Aberth starting points until the largest update falls
    below tol * max |z| or the budget runs out (NoConvergence, carrying the
    best state).  Returns (state, iterations)."""
    if tol is None:
        tol = default_tolerance(q.k)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if state is None:
        state = aberth_init(q, variant)
    for _ in range(max_iter):
        state = dk_iterate(q, state, variant)
        zmag = float(np.max(np.hypot(state.re[0], state.im[0])))
        if state.last_max_update <= tol * max(zmag, 1e-300):
            state.converged = True
            return state, state.iteration
    raise NoConvergence(f"no convergence in {max_iter} sweeps", state)


def chebyshev_coeffs(n: int, k: int, weight=None) -> MonicPoly:
    """Even-coefficient integration test polynomial of degree n.

    a_n = 1, odd-from-top coefficients zero, and
    a_{n-2m} = -sum_{j=1..m} weight(j) * a_{n-2(m-j)} with the default
    weight 1/(2j+1).  Coefficients are computed as exact rationals and
    rounded per-coefficient to K words.  The weight is pluggable because
    the printed recurrence is ambiguous; solver-level validity is checked
    through residuals, which do not depend on the reading chosen.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if weight is None:
        weight = lambda j: Fraction(1, 2 * j + 1)
    b = [Fraction(1)]
    for m in range(1, n // 2 + 1):
        b.append(-sum(weight(j) * b[m - j] for j in range(1, m + 1)))
    coeffs = []
    for i in range(n):  # c_0 .. c_{n-1}
        d = n - i
        if d % 2 == 0:
            coeffs.append(from_oracle(b[d // 2], k))
        else:
            coeffs.append((0.0,) * k)
    return MonicPoly.from_coeffs(coeffs)


def residual_check(q: MonicPoly, roots) -> float:
    """max_i |q(z_i)| evaluated in 300-bit oracle arithmetic.

    roots: iterable of (re, im) K-word component pairs (RootState.roots()).
    """
    one = BigFloat(1, 0)
    zero = BigFloat(0, 0)
    coeffs = q.oracle_coeffs() + [(one, zero)]
    worst = 0.0
    for zre, zim in roots:
        z = (BigFloat.from_components(zre), BigFloat.from_components(zim))
        val = oracle_horner_complex(coeffs, z)
        mag2 = val[0].mul(val[0]).add(val[1].mul(val[1]))
        if not mag2.is_zero():
            worst = max(worst, 2.0 ** (mag2.log2_magnitude() / 2.0))
    return worst
