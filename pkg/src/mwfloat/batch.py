"""Lane-batched (structure-of-arrays) multi-word arithmetic.

A :class:`LaneBatch` keeps W values of a K-word type as K contiguous
float64 arrays, one per component.  Branch-free kernels run unchanged on
those arrays, one elementwise numpy operation per algorithm step, so each
lane is bitwise identical to the scalar kernel applied to that lane's
operands.  The conventional (Standard) triple/quad variants vectorize the
straight-line body and fall back to a per-lane scalar loop for the branchy
renormalization; the conventional quad addition is branchy throughout and
runs entirely per lane.  That split mirrors why branch elimination is the
prerequisite for vectorizing the higher precisions.
"""

from __future__ import annotations

import numpy as np

from .multiword import (
    _DIV_ITERS,
    _newton_div,
    _qw_mul_core,
    _tw_add_core,
    _tw_mul_core,
    BITS,
    MultiWord,
    Variant,
    dw_add_accurate,
    dw_add_bf,
    dw_mul,
    dw_mul_bf,
    qw_add,
    qw_add_bf,
    qw_mul_bf,
    qw_renormalize,
    tw_add_bf,
    tw_mul_bf,
    tw_renormalize,
)

__all__ = [
    "LaneBatch",
    "pack",
    "unpack",
    "batch_add",
    "batch_mul",
    "batch_div",
    "default_lane_width",
    "LANE_WIDTHS",
]

LANE_WIDTHS = (2, 4, 8)


def default_lane_width() -> int:
    """Default W.  Four binary64 lanes, the width of a 256-bit vector
    register; numpy dispatches to whatever the host actually has, so this
    is a packing granularity rather than a hardware probe."""
    return 4


class LaneBatch:
    """W multi-word values in component-planar layout.

    ``comps[c][lane]`` is component c of lane ``lane``; ``count`` is how
    many leading lanes carry packed values (the rest are zero padding).
    """

    __slots__ = ("comps", "count")

    def __init__(self, comps, count: int | None = None):
        arrays = tuple(np.ascontiguousarray(c, dtype=np.float64) for c in comps)
        if len(arrays) not in BITS:
            raise ValueError(f"unsupported word count {len(arrays)}")
        w = arrays[0].shape[0]
        for arr in arrays:
            if arr.ndim != 1 or arr.shape[0] != w:
                raise ValueError("component arrays must be equal-length 1-D")
        self.comps = arrays
        self.count = w if count is None else count

    @property
    def k(self) -> int:
        return len(self.comps)

    @property
    def width(self) -> int:
        return self.comps[0].shape[0]

    def lane(self, i: int) -> tuple:
        return tuple(float(c[i]) for c in self.comps)

    def __repr__(self):
        return f"LaneBatch(k={self.k}, width={self.width}, count={self.count})"


def pack(values, width: int | None = None) -> LaneBatch:
    """Pack multi-word values into a batch; tail lanes are zero padded."""
    vals = [v.comps if isinstance(v, MultiWord) else tuple(v) for v in values]
    if not vals:
        raise ValueError("cannot pack an empty value list")
    k = len(vals[0])
    for v in vals:
        if len(v) != k:
            raise ValueError("mixed word counts in pack")
    w = width if width is not None else len(vals)
    if w < len(vals):
        raise ValueError(f"width {w} below value count {len(vals)}")
    comps = tuple(np.zeros(w) for _ in range(k))
    for i, v in enumerate(vals):
        for c in range(k):
            comps[c][i] = v[c]
    return LaneBatch(comps, count=len(vals))


def unpack(batch: LaneBatch) -> list:
    """Inverse of pack: the first ``count`` lanes as MultiWord values."""
    return [
        MultiWord.from_components(batch.lane(i)) for i in range(batch.count)
    ]


# --- lane loops for the branchy conventional steps ------------------------


def _lanewise_tw_renorm(s0, s1, s2, t0):
    shape = np.shape(s0)
    f0, f1, f2, ft = (np.ravel(x) for x in (s0, s1, s2, t0))
    w = f0.shape[0]
    r0 = np.empty(w)
    r1 = np.empty(w)
    r2 = np.empty(w)
    for i in range(w):
        a, b, c = tw_renormalize(f0[i], f1[i], f2[i], ft[i])
        r0[i] = a
        r1[i] = b
        r2[i] = c
    return r0.reshape(shape), r1.reshape(shape), r2.reshape(shape)


def _lanewise_qw_renorm(p0, p1, s0, s1, s2):
    shape = np.shape(p0)
    flat = [np.ravel(x) for x in (p0, p1, s0, s1, s2)]
    w = flat[0].shape[0]
    out = tuple(np.empty(w) for _ in range(4))
    for i in range(w):
        r = qw_renormalize(*(f[i] for f in flat))
        for c in range(4):
            out[c][i] = r[c]
    return tuple(o.reshape(shape) for o in out)


def _tw_add_std(a, b):
    return _lanewise_tw_renorm(*_tw_add_core(a, b))


def _tw_mul_std(a, b):
    return _lanewise_tw_renorm(*_tw_mul_core(a, b))


def _qw_mul_std(a, b):
    return _lanewise_qw_renorm(*_qw_mul_core(a, b))


def _qw_add_std(a, b):
    # value-dependent control flow: no vectorizable body at all
    shape = np.shape(a[0])
    fa = [np.ravel(x) for x in a]
    fb = [np.ravel(x) for x in b]
    w = fa[0].shape[0]
    out = tuple(np.empty(w) for _ in range(4))
    for i in range(w):
        r = qw_add(tuple(c[i] for c in fa), tuple(c[i] for c in fb))
        for c in range(4):
            out[c][i] = r[c]
    return tuple(o.reshape(shape) for o in out)


_BATCH_ADD = {
    (2, Variant.STANDARD): dw_add_accurate,
    (2, Variant.BRANCH_FREE): dw_add_bf,
    (3, Variant.STANDARD): _tw_add_std,
    (3, Variant.BRANCH_FREE): tw_add_bf,
    (4, Variant.STANDARD): _qw_add_std,
    (4, Variant.BRANCH_FREE): qw_add_bf,
}

_BATCH_MUL = {
    (2, Variant.STANDARD): dw_mul,
    (2, Variant.BRANCH_FREE): dw_mul_bf,
    (3, Variant.STANDARD): _tw_mul_std,
    (3, Variant.BRANCH_FREE): tw_mul_bf,
    (4, Variant.STANDARD): _qw_mul_std,
    (4, Variant.BRANCH_FREE): qw_mul_bf,
}


def _check_pair(a: LaneBatch, b: LaneBatch):
    if a.k != b.k:
        raise ValueError("mixed word counts")
    if a.width != b.width:
        raise ValueError("mixed lane widths")


def batch_add(a: LaneBatch, b: LaneBatch, variant: Variant = Variant.STANDARD) -> LaneBatch:
    _check_pair(a, b)
    out = _BATCH_ADD[a.k, variant](a.comps, b.comps)
    return LaneBatch(out, count=max(a.count, b.count))


def batch_mul(a: LaneBatch, b: LaneBatch, variant: Variant = Variant.STANDARD) -> LaneBatch:
    _check_pair(a, b)
    out = _BATCH_MUL[a.k, variant](a.comps, b.comps)
    return LaneBatch(out, count=max(a.count, b.count))


def batch_div(a: LaneBatch, b: LaneBatch, variant: Variant = Variant.STANDARD) -> LaneBatch:
    """Per-lane a / b; zero lanes in b propagate inf/nan, padding included.

    Uses the shared Newton reciprocal sequence over the batch kernels, so
    lanes match the scalar division bitwise.
    """
    _check_pair(a, b)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = _newton_div(
            a.comps,
            b.comps,
            _BATCH_ADD[a.k, variant],
            _BATCH_MUL[a.k, variant],
            _DIV_ITERS[a.k],
        )
    return LaneBatch(out, count=max(a.count, b.count))
