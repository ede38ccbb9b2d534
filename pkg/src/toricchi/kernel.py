"""Kernel selection: compiled box scan when available, pure Python otherwise.

The compiled kernel works in int64; before dispatching, the worst-case dot
product over the requested box and the worst-case accumulated total are
bounded with exact Python ints, and anything that could overflow falls back
to the pure kernel (which uses unbounded ints). Set TORIC_PURE_PYTHON=1 to
force the pure kernel.
"""

from __future__ import annotations

import os

from . import _scan_py

_impl = None
if os.environ.get("TORIC_PURE_PYTHON") != "1":
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = None


def backend() -> str:
    return "compiled" if _impl is not None else "pure"


_LIMIT = 1 << 62  # headroom below int64 max


def _fits_int64(lo, hi, rays, bounds, table) -> bool:
    worst_dot = 0
    for u, b in zip(rays, bounds):
        s = sum(max(abs(l), abs(h)) * abs(c) for l, h, c in zip(lo, hi, u))
        worst_dot = max(worst_dot, s + abs(b))
    npoints = 1
    for l, h in zip(lo, hi):
        npoints *= max(0, h - l + 1)
    worst_entry = max((abs(t) for t in table), default=0)
    return worst_dot < _LIMIT and npoints * worst_entry < _LIMIT


def box_sum(lo, hi, rays, bounds, table) -> int:
    """Σ over integer m in [lo, hi] of table[mask], bit k of mask set iff
    ⟨m, rays[k]⟩ < bounds[k]."""
    if _impl is not None and _fits_int64(lo, hi, rays, bounds, table):
        return _impl.box_sum(
            [int(x) for x in lo],
            [int(x) for x in hi],
            [[int(c) for c in u] for u in rays],
            [int(b) for b in bounds],
            [int(t) for t in table],
        )
    return _scan_py.box_sum(lo, hi, rays, bounds, table)
