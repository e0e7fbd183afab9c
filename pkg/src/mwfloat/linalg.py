"""Dense real and complex multi-word matrix multiplication.

Matrices are stored component-planar: K float64 arrays of shape
(rows, cols), so whole rows feed the lane-batched kernels directly.
Three schemes are provided: the naive triple loop, a cache-blocked loop
with the identical per-entry summation order (bitwise equal to naive),
and recursive Strassen with a configurable cutoff that falls back to the
blocked kernel.  Odd Strassen dimensions are dynamically peeled: the last
row/column strips are multiplied separately and the even part recurses.

Complex products use three real multiplications (Karatsuba-style):
Re C = P1 - P2, Im C = P3 - P1 - P2 with P1 = Re A Re B, P2 = Im A Im B,
P3 = (Re A + Im A)(Re B + Im B).

Parallelism is task-per-row-block for naive/blocked and task-per-
subproduct for the top Strassen levels; every task writes a disjoint
output region and combination order is fixed, so results are bitwise
identical for any thread count.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .multiword import (
    BITS,
    MultiWord,
    Variant,
    from_decimal_string,
    from_oracle,
    mw_add,
    mw_mul,
    to_decimal_string,
)
from . import batch as _batch
from .oracle import BigFloat, oracle_sqrt

__all__ = [
    "MWMatrix",
    "CMWMatrix",
    "Scheme",
    "MatMulPlan",
    "gen_test_matrices",
    "gen_complex_test_matrices",
    "matmul",
    "cmatmul",
    "strassen_pad_policy",
    "write_matrix",
    "read_matrix",
    "write_cmatrix",
    "read_cmatrix",
]


class Scheme(enum.Enum):
    NAIVE = "naive"
    BLOCKED = "blocked"
    STRASSEN = "strassen"

    @classmethod
    def parse(cls, name) -> "Scheme":
        if isinstance(name, cls):
            return name
        key = str(name).lower()
        for s in cls:
            if s.value == key or s.name.lower() == key:
                return s
        raise ValueError(f"unknown scheme {name!r}")


@dataclass(frozen=True)
class MatMulPlan:
    scheme: Scheme = Scheme.STRASSEN
    variant: Variant = Variant.STANDARD
    simd: bool = True
    threads: int = 1
    strassen_cutoff: int = 32

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme.parse(self.scheme))
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        if self.strassen_cutoff < 2:
            raise ValueError("strassen_cutoff must be >= 2")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


class MWMatrix:
    """Dense rows x cols matrix of K-word values, component-planar."""

    __slots__ = ("rows", "cols", "comps")

    def __init__(self, comps, rows: int | None = None, cols: int | None = None):
        arrays = tuple(np.ascontiguousarray(c, dtype=np.float64) for c in comps)
        if len(arrays) not in BITS:
            raise ValueError(f"unsupported word count {len(arrays)}")
        shape = arrays[0].shape
        if len(shape) != 2:
            raise ValueError("component arrays must be 2-D")
        for a in arrays:
            if a.shape != shape:
                raise ValueError("component arrays must share one shape")
        self.comps = arrays
        self.rows, self.cols = shape
        if rows is not None and (rows, cols) != shape:
            raise ValueError("shape mismatch")

    @property
    def k(self) -> int:
        return len(self.comps)

    @classmethod
    def zeros(cls, rows: int, cols: int, k: int) -> "MWMatrix":
        return cls(tuple(np.zeros((rows, cols)) for _ in range(k)))

    @classmethod
    def identity(cls, n: int, k: int) -> "MWMatrix":
        comps = [np.eye(n)] + [np.zeros((n, n)) for _ in range(k - 1)]
        return cls(tuple(comps))

    @classmethod
    def from_entries(cls, entries, rows: int, cols: int, k: int) -> "MWMatrix":
        """entries: row-major iterable of component tuples / MultiWord."""
        comps = tuple(np.zeros((rows, cols)) for _ in range(k))
        it = iter(entries)
        for i in range(rows):
            for j in range(cols):
                v = next(it)
                parts = v.comps if isinstance(v, MultiWord) else tuple(v)
                for c in range(k):
                    comps[c][i, j] = parts[c]
        return cls(comps)

    def get(self, i: int, j: int) -> MultiWord:
        return MultiWord.from_components(tuple(float(c[i, j]) for c in self.comps))

    def entry_components(self, i: int, j: int) -> tuple:
        return tuple(float(c[i, j]) for c in self.comps)

    def to_oracle_entries(self) -> list:
        """Exact BigFloat of every entry, row-major."""
        out = []
        for i in range(self.rows):
            for j in range(self.cols):
                out.append(BigFloat.from_components(self.entry_components(i, j)))
        return out

    def bitwise_equal(self, other: "MWMatrix") -> bool:
        return self.k == other.k and all(
            np.array_equal(a, b) for a, b in zip(self.comps, other.comps)
        )

    def __repr__(self):
        return f"MWMatrix(k={self.k}, rows={self.rows}, cols={self.cols})"


class CMWMatrix:
    """Complex matrix as a (re, im) pair of equally shaped MWMatrix."""

    __slots__ = ("re", "im")

    def __init__(self, re: MWMatrix, im: MWMatrix):
        if (re.rows, re.cols, re.k) != (im.rows, im.cols, im.k):
            raise ValueError("re/im shape mismatch")
        self.re = re
        self.im = im

    @property
    def rows(self):
        return self.re.rows

    @property
    def cols(self):
        return self.re.cols

    @property
    def k(self):
        return self.re.k

    def bitwise_equal(self, other: "CMWMatrix") -> bool:
        return self.re.bitwise_equal(other.re) and self.im.bitwise_equal(other.im)

    def __repr__(self):
        return f"CMWMatrix(k={self.k}, rows={self.rows}, cols={self.cols})"


# --------------------------------------------------------------------------
# elementwise helpers on planar component tuples
# --------------------------------------------------------------------------


def _ew_add(a, b, variant):
    return _batch._BATCH_ADD[len(a), variant](a, b)


def _ew_sub(a, b, variant):
    return _batch._BATCH_ADD[len(a), variant](a, tuple(-c for c in b))


def _ew_mul(a, b, variant):
    return _batch._BATCH_MUL[len(a), variant](a, b)


def _bcast(entry, shape, k):
    return tuple(np.full(shape, entry[c]) for c in range(k))


# --------------------------------------------------------------------------
# test matrix generators
# --------------------------------------------------------------------------


def sqrt_constant(value: int, k: int) -> tuple:
    """K-word rounding of an oracle square root (for the sqrt(5)/sqrt(3)
    matrix entries)."""
    return from_oracle(oracle_sqrt(BigFloat.from_int(value)), k)


def gen_test_matrices(n: int, k: int):
    """The deterministic accuracy-benchmark pair:
    a_ij = sqrt(5) (i+j-1), b_ij = sqrt(3) (n-i+1), 1-based indices.

    Entries are K-word products of the oracle-rounded constant with the
    exact integer factor (Standard variant), identical for every scheme
    and variant under test.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s5 = sqrt_constant(5, k)
    s3 = sqrt_constant(3, k)
    i_idx = np.arange(1, n + 1).reshape(n, 1)
    j_idx = np.arange(1, n + 1).reshape(1, n)
    fac_a = (i_idx + j_idx - 1).astype(np.float64)  # exact up to 2^53
    fac_b = np.broadcast_to((n - i_idx + 1).astype(np.float64), (n, n)).copy()
    zeros = np.zeros((n, n))
    a_fac = (fac_a,) + (zeros,) * (k - 1)
    b_fac = (fac_b,) + (zeros,) * (k - 1)
    a = _ew_mul(_bcast(s5, (n, n), k), a_fac, Variant.STANDARD)
    b = _ew_mul(_bcast(s3, (n, n), k), b_fac, Variant.STANDARD)
    return MWMatrix(a), MWMatrix(b)


def gen_complex_test_matrices(n: int, seed: int, k: int):
    """Random complex pair with entries exp(r_n) (r_u - 1/2) on each part.

    Randomness: numpy PCG64 seeded with ``seed``; per matrix, draw order
    is u1, u2 (n^2 each) for the Box-Muller normals
    r_n = sqrt(-2 ln u1) cos(2 pi u2) (real part) and sin (imag part),
    then the two uniform factors for re and im.  Entries are base floats
    promoted exactly to K words, so every draw occurs afresh per
    occurrence and runs are reproducible for a fixed seed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))

    def one_matrix():
        u1 = rng.random((n, n))
        u2 = rng.random((n, n))
        radial = np.sqrt(-2.0 * np.log1p(-u1))  # u1 in [0,1): 1-u1 in (0,1]
        rn_re = radial * np.cos(2.0 * np.pi * u2)
        rn_im = radial * np.sin(2.0 * np.pi * u2)
        ure = rng.random((n, n))
        uim = rng.random((n, n))
        re0 = np.exp(rn_re) * (ure - 0.5)
        im0 = np.exp(rn_im) * (uim - 0.5)
        zeros = np.zeros((n, n))
        re = MWMatrix((re0,) + (zeros,) * (k - 1))
        im = MWMatrix((im0,) + (zeros,) * (k - 1))
        return CMWMatrix(re, im)

    return one_matrix(), one_matrix()


# --------------------------------------------------------------------------
# multiplication kernels
# --------------------------------------------------------------------------


def _rows_kernel_simd(a, b, variant, i_lo, i_hi, out):
    """Accumulate rows [i_lo, i_hi) of a @ b with whole-row lanes,
    inner index ascending."""
    k = len(a)
    m = a[0].shape[1]
    cols = b[0].shape[1]
    for i in range(i_lo, i_hi):
        acc = tuple(np.zeros(cols) for _ in range(k))
        for t in range(m):
            entry = tuple(a[c][i, t] for c in range(k))
            prod = _ew_mul(_bcast(entry, cols, k), tuple(b[c][t] for c in range(k)), variant)
            acc = _ew_add(acc, prod, variant)
        for c in range(k):
            out[c][i] = acc[c]


def _rows_kernel_scalar(a, b, variant, i_lo, i_hi, out):
    """Per-entry scalar triple loop; same summation order as the lane
    kernel, hence bitwise identical results."""
    k = len(a)
    m = a[0].shape[1]
    cols = b[0].shape[1]
    for i in range(i_lo, i_hi):
        arow = [tuple(float(a[c][i, t]) for c in range(k)) for t in range(m)]
        for j in range(cols):
            acc = (0.0,) * k
            for t in range(m):
                bt = tuple(float(b[c][t, j]) for c in range(k))
                acc = mw_add(acc, mw_mul(arow[t], bt, variant), variant)
            for c in range(k):
                out[c][i, j] = acc[c]


def _blocked_rows(a, b, variant, simd, block, i_lo, i_hi, out):
    """Cache-blocked loops over (i, k-block, j-block); per-entry inner
    summation order is ascending k exactly as in the naive kernel."""
    k = len(a)
    m = a[0].shape[1]
    cols = b[0].shape[1]
    for i in range(i_lo, i_hi):
        if simd:
            acc = tuple(np.zeros(cols) for _ in range(k))
            for t0 in range(0, m, block):
                t1 = min(t0 + block, m)
                for j0 in range(0, cols, block):
                    j1 = min(j0 + block, cols)
                    sub = tuple(acc[c][j0:j1] for c in range(k))
                    for t in range(t0, t1):
                        entry = tuple(a[c][i, t] for c in range(k))
                        brow = tuple(b[c][t, j0:j1] for c in range(k))
                        sub = _ew_add(sub, _ew_mul(_bcast(entry, j1 - j0, k), brow, variant), variant)
                    for c in range(k):
                        acc[c][j0:j1] = sub[c]
            for c in range(k):
                out[c][i] = acc[c]
        else:
            for j0 in range(0, cols, block):
                j1 = min(j0 + block, cols)
                for j in range(j0, j1):
                    acc = (0.0,) * k
                    for t in range(m):
                        at = tuple(float(a[c][i, t]) for c in range(k))
                        bt = tuple(float(b[c][t, j]) for c in range(k))
                        acc = mw_add(acc, mw_mul(at, bt, variant), variant)
                    for c in range(k):
                        out[c][i, j] = acc[c]


def _run_rows(kernel, a, b, variant, threads, out, *extra):
    n = a[0].shape[0]
    if threads <= 1 or n < 2:
        kernel(a, b, variant, *extra, 0, n, out)
        return
    chunk = (n + threads - 1) // threads
    spans = [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(kernel, a, b, variant, *extra, lo, hi, out)
            for lo, hi in spans
        ]
        for f in futures:
            f.result()


def _naive_mm(a, b, variant, simd, threads):
    k = len(a)
    n = a[0].shape[0]
    cols = b[0].shape[1]
    out = tuple(np.zeros((n, cols)) for _ in range(k))
    kernel = _rows_kernel_simd if simd else _rows_kernel_scalar
    _run_rows(kernel, a, b, variant, threads, out)
    return out


def _blocked_mm(a, b, variant, simd, threads, block):
    k = len(a)
    n = a[0].shape[0]
    cols = b[0].shape[1]
    out = tuple(np.zeros((n, cols)) for _ in range(k))
    _run_rows(_blocked_rows, a, b, variant, threads, out, simd, block)
    return out


# --- Strassen --------------------------------------------------------------


def strassen_pad_policy(n: int, cutoff: int = 32) -> list:
    """Decomposition steps Strassen will take for size n.

    Returns a list of ("blocked", size) / ("peel", size) / ("split", size)
    records from the top of the recursion down.
    """
    steps = []
    while True:
        if n <= cutoff:
            steps.append(("blocked", n))
            return steps
        if n % 2:
            steps.append(("peel", n))
            n -= 1
        else:
            steps.append(("split", n))
            n //= 2


def _quad(comps, half, qi, qj):
    sl_i = slice(qi * half, (qi + 1) * half)
    sl_j = slice(qj * half, (qj + 1) * half)
    return tuple(np.ascontiguousarray(c[sl_i, sl_j]) for c in comps)


def _strassen_products(a, b, variant, simd, cutoff):
    """The seven recursive subproducts of one Strassen split."""
    half = a[0].shape[0] // 2
    a11 = _quad(a, half, 0, 0)
    a12 = _quad(a, half, 0, 1)
    a21 = _quad(a, half, 1, 0)
    a22 = _quad(a, half, 1, 1)
    b11 = _quad(b, half, 0, 0)
    b12 = _quad(b, half, 0, 1)
    b21 = _quad(b, half, 1, 0)
    b22 = _quad(b, half, 1, 1)
    return [
        (_ew_add(a11, a22, variant), _ew_add(b11, b22, variant)),
        (_ew_add(a21, a22, variant), b11),
        (a11, _ew_sub(b12, b22, variant)),
        (a22, _ew_sub(b21, b11, variant)),
        (_ew_add(a11, a12, variant), b22),
        (_ew_sub(a21, a11, variant), _ew_add(b11, b12, variant)),
        (_ew_sub(a12, a22, variant), _ew_add(b21, b22, variant)),
    ]


def _strassen_combine(ms, variant, k, n):
    m1, m2, m3, m4, m5, m6, m7 = ms
    c11 = _ew_add(_ew_sub(_ew_add(m1, m4, variant), m5, variant), m7, variant)
    c12 = _ew_add(m3, m5, variant)
    c21 = _ew_add(m2, m4, variant)
    c22 = _ew_add(_ew_add(_ew_sub(m1, m2, variant), m3, variant), m6, variant)
    half = n // 2
    out = tuple(np.zeros((n, n)) for _ in range(k))
    for c in range(k):
        out[c][:half, :half] = c11[c]
        out[c][:half, half:] = c12[c]
        out[c][half:, :half] = c21[c]
        out[c][half:, half:] = c22[c]
    return out


def _strassen_peel(a, b, variant, simd, cutoff):
    """Odd size: peel the last row/column, recurse on the even core."""
    k = len(a)
    n = a[0].shape[0]
    e = n - 1
    a_core = tuple(np.ascontiguousarray(c[:e, :e]) for c in a)
    b_core = tuple(np.ascontiguousarray(c[:e, :e]) for c in b)
    core = _strassen_rec(a_core, b_core, variant, simd, cutoff)

    a_col = tuple(c[:e, e] for c in a)  # (e,)
    a_row = tuple(c[e, :e] for c in a)
    a_cor = tuple(float(c[e, e]) for c in a)
    b_col = tuple(c[:e, e] for c in b)
    b_row = tuple(c[e, :e] for c in b)
    b_cor = tuple(float(c[e, e]) for c in b)

    out = tuple(np.zeros((n, n)) for _ in range(k))
    # C00 = core + a_col (outer) b_row
    for i in range(e):
        entry = tuple(a_col[c][i] for c in range(k))
        prod = _ew_mul(_bcast(entry, e, k), b_row, variant)
        row = _ew_add(tuple(core[c][i] for c in range(k)), prod, variant)
        for c in range(k):
            out[c][i, :e] = row[c]
    # C01 = A_core b_col + a_col * b_cor  (vectorized over rows)
    acc = _ew_mul(a_col, _bcast(b_cor, e, k), variant)
    for t in range(e):
        entry = tuple(float(b_col[c][t]) for c in range(k))
        col_t = tuple(a[c][:e, t] for c in range(k))
        acc = _ew_add(acc, _ew_mul(col_t, _bcast(entry, e, k), variant), variant)
    for c in range(k):
        out[c][:e, e] = acc[c]
    # C10 = a_row B_core + a_cor * b_row  (vectorized over cols)
    acc = _ew_mul(_bcast(a_cor, e, k), b_row, variant)
    for t in range(e):
        entry = tuple(float(a_row[c][t]) for c in range(k))
        row_t = tuple(b[c][t, :e] for c in range(k))
        acc = _ew_add(acc, _ew_mul(_bcast(entry, e, k), row_t, variant), variant)
    for c in range(k):
        out[c][e, :e] = acc[c]
    # C11 = a_row . b_col + a_cor b_cor
    dot = mw_mul(a_cor, b_cor, variant)
    for t in range(e):
        at = tuple(float(a_row[c][t]) for c in range(k))
        bt = tuple(float(b_col[c][t]) for c in range(k))
        dot = mw_add(dot, mw_mul(at, bt, variant), variant)
    for c in range(k):
        out[c][e, e] = dot[c]
    return out


def _strassen_rec(a, b, variant, simd, cutoff):
    n = a[0].shape[0]
    if n <= cutoff:
        return _blocked_mm(a, b, variant, simd, 1, cutoff)
    if n % 2:
        return _strassen_peel(a, b, variant, simd, cutoff)
    sub = _strassen_products(a, b, variant, simd, cutoff)
    ms = [_strassen_rec(x, y, variant, simd, cutoff) for x, y in sub]
    return _strassen_combine(ms, variant, len(a), n)


def _strassen_mm(a, b, variant, simd, threads, cutoff):
    n = a[0].shape[0]
    if threads <= 1 or n <= cutoff or n % 2:
        return _strassen_rec(a, b, variant, simd, cutoff)
    # expand the top levels into leaf tasks executed on one flat pool;
    # combination order is fixed, results are thread-count invariant
    level0 = _strassen_products(a, b, variant, simd, cutoff)
    half = n // 2
    tasks = []  # (level0 index, level1 index or None, operands)
    for i0, (x, y) in enumerate(level0):
        if half > cutoff and half % 2 == 0:
            for i1, (u, v) in enumerate(_strassen_products(x, y, variant, simd, cutoff)):
                tasks.append((i0, i1, u, v))
        else:
            tasks.append((i0, None, x, y))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_strassen_rec, u, v, variant, simd, cutoff)
            for (_, _, u, v) in tasks
        ]
        results = [f.result() for f in futures]
    level1_parts: dict = {}
    for (i0, i1, _, _), res in zip(tasks, results):
        level1_parts.setdefault(i0, {})[i1] = res
    ms = []
    for i0 in range(7):
        parts = level1_parts[i0]
        if None in parts:
            ms.append(parts[None])
        else:
            ms.append(_strassen_combine([parts[i] for i in range(7)], variant, len(a), half))
    return _strassen_combine(ms, variant, len(a), n)


def matmul(a: MWMatrix, b: MWMatrix, plan: MatMulPlan | None = None) -> MWMatrix:
    """Real multi-word product a @ b under the given plan."""
    if plan is None:
        plan = MatMulPlan()
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    if a.k != b.k:
        raise ValueError("mixed word counts")
    if plan.scheme is Scheme.NAIVE:
        out = _naive_mm(a.comps, b.comps, plan.variant, plan.simd, plan.threads)
    elif plan.scheme is Scheme.BLOCKED:
        out = _blocked_mm(
            a.comps, b.comps, plan.variant, plan.simd, plan.threads, plan.strassen_cutoff
        )
    else:
        if a.rows != a.cols or b.rows != b.cols:
            raise ValueError("strassen scheme requires square matrices")
        out = _strassen_mm(
            a.comps, b.comps, plan.variant, plan.simd, plan.threads, plan.strassen_cutoff
        )
    return MWMatrix(out)


def cmatmul(a: CMWMatrix, b: CMWMatrix, plan: MatMulPlan | None = None) -> CMWMatrix:
    """Complex product via three real multiplications.

    P1 = Re(a) Re(b), P2 = Im(a) Im(b), P3 = (Re+Im)(a) (Re+Im)(b);
    Re = P1 - P2, Im = (P3 - P1) - P2, elementwise in that order.
    """
    if plan is None:
        plan = MatMulPlan()
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    v = plan.variant
    sum_a = MWMatrix(_ew_add(a.re.comps, a.im.comps, v))
    sum_b = MWMatrix(_ew_add(b.re.comps, b.im.comps, v))
    p1 = matmul(a.re, b.re, plan)
    p2 = matmul(a.im, b.im, plan)
    p3 = matmul(sum_a, sum_b, plan)
    re = _ew_sub(p1.comps, p2.comps, v)
    im = _ew_sub(_ew_sub(p3.comps, p1.comps, v), p2.comps, v)
    return CMWMatrix(MWMatrix(re), MWMatrix(im))


# --------------------------------------------------------------------------
# matrix files
# --------------------------------------------------------------------------


def write_matrix(path, m: MWMatrix, digits: int | None = None):
    """Header "MW K rows cols", then row-major entries as decimal strings."""
    with open(path, "w") as fh:
        fh.write(f"MW {m.k} {m.rows} {m.cols}\n")
        for i in range(m.rows):
            row = [
                to_decimal_string(m.entry_components(i, j), digits)
                for j in range(m.cols)
            ]
            fh.write(" ".join(row) + "\n")


def read_matrix(path) -> MWMatrix:
    with open(path) as fh:
        head = fh.readline().split()
        if len(head) != 4 or head[0] != "MW":
            raise ValueError(f"bad matrix header in {path}")
        k, rows, cols = int(head[1]), int(head[2]), int(head[3])
        toks = fh.read().split()
    if len(toks) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(toks)}")
    entries = (from_decimal_string(t, k) for t in toks)
    return MWMatrix.from_entries(entries, rows, cols, k)


def write_cmatrix(path, m: CMWMatrix, digits: int | None = None):
    """Complex variant: "CMW K rows cols" with re/im interleaved."""
    with open(path, "w") as fh:
        fh.write(f"CMW {m.k} {m.rows} {m.cols}\n")
        for i in range(m.rows):
            row = []
            for j in range(m.cols):
                row.append(to_decimal_string(m.re.entry_components(i, j), digits))
                row.append(to_decimal_string(m.im.entry_components(i, j), digits))
            fh.write(" ".join(row) + "\n")


def read_cmatrix(path) -> CMWMatrix:
    with open(path) as fh:
        head = fh.readline().split()
        if len(head) != 4 or head[0] != "CMW":
            raise ValueError(f"bad complex matrix header in {path}")
        k, rows, cols = int(head[1]), int(head[2]), int(head[3])
        toks = fh.read().split()
    if len(toks) != 2 * rows * cols:
        raise ValueError(f"expected {2 * rows * cols} entries, found {len(toks)}")
    re = MWMatrix.from_entries(
        (from_decimal_string(t, k) for t in toks[0::2]), rows, cols, k
    )
    im = MWMatrix.from_entries(
        (from_decimal_string(t, k) for t in toks[1::2]), rows, cols, k
    )
    return CMWMatrix(re, im)
