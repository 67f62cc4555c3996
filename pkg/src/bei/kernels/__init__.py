"""Kernel backend selection.

BEI_KERNEL=numba forces the JIT path (graphs must fit in 64-bit masks),
BEI_KERNEL=python forces the pure-Python fallback, anything else (default
"auto") uses numba when it imports and the graph fits, falling back
otherwise.
"""

from __future__ import annotations

import os

from . import bitset

_numba_mod = None
_numba_failed = False


def _accel():
    global _numba_mod, _numba_failed
    if _numba_mod is None and not _numba_failed:
        try:
            from . import accel
            accel.warmup()
            _numba_mod = accel
        except Exception:
            _numba_failed = True
    return _numba_mod


def backend_name() -> str:
    mode = os.environ.get("BEI_KERNEL", "auto").lower()
    if mode not in ("auto", "numba", "python"):
        raise ValueError(f"BEI_KERNEL must be auto|numba|python, got {mode!r}")
    return mode


def enumerate_cutset_masks(nbr: list[int], full: int,
                           cand: list[int]) -> list[tuple[int, int]]:
    """Dispatch to the selected backend; same contract as kernels.bitset."""
    mode = backend_name()
    n = len(nbr)
    if mode != "python" and n <= 64:
        accel = _accel()
        if accel is not None:
            import numpy as np
            masks, counts = accel.enumerate_cutset_masks(
                np.array(nbr, dtype=np.uint64), np.uint64(full),
                np.array(cand, dtype=np.int64))
            return [(int(m), int(c)) for m, c in zip(masks, counts)]
        if mode == "numba":
            raise RuntimeError("BEI_KERNEL=numba but numba is unavailable")
    elif mode == "numba":
        raise RuntimeError("BEI_KERNEL=numba requires <= 64 vertices")
    return bitset.enumerate_cutset_masks(nbr, full, cand)
