"""Numba kernels for the hot subset-enumeration loop (graphs with <= 64
vertices).  Mirrors kernels.bitset exactly; selected via BEI_KERNEL."""

from __future__ import annotations

import numba as nb
import numpy as np


@nb.njit(cache=True)
def _components(nbr, alive, comps_out):
    """Fill comps_out with component masks of the `alive` positions; return
    the component count."""
    ncomp = 0
    rest = alive
    while rest:
        seed = rest & (~rest + np.uint64(1))
        comp = seed
        frontier = seed
        while frontier:
            nxt = np.uint64(0)
            f = frontier
            while f:
                b = f & (~f + np.uint64(1))
                f ^= b
                i = 0
                bb = b
                while bb > np.uint64(1):
                    bb >>= np.uint64(1)
                    i += 1
                nxt |= nbr[i]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps_out[ncomp] = comp
        ncomp += 1
        rest &= ~comp
    return ncomp


@nb.njit(cache=True)
def enumerate_cutset_masks(nbr, full, cand):
    """All cutset masks within one connected piece, plus component counts.

    nbr: uint64[n] neighbor masks, full: uint64 piece mask,
    cand: int64[k] candidate bit positions.  Returns (uint64[], int64[]).
    """
    k = cand.shape[0]
    total = 1 << k
    cap = 1024
    masks = np.empty(cap, dtype=np.uint64)
    counts = np.empty(cap, dtype=np.int64)
    comps = np.empty(64, dtype=np.uint64)
    nout = 0
    for sub in range(total):
        t = np.uint64(0)
        for j in range(k):
            if sub >> j & 1:
                t |= np.uint64(1) << np.uint64(cand[j])
        alive = full & ~t
        ncomp = _components(nbr, alive, comps)
        ok = True
        tt = t
        while tt:
            b = tt & (~tt + np.uint64(1))
            tt ^= b
            i = 0
            bb = b
            while bb > np.uint64(1):
                bb >>= np.uint64(1)
                i += 1
            nbm = nbr[i] & alive
            touched = 0
            for c in range(ncomp):
                if nbm & comps[c]:
                    touched += 1
                    if touched == 2:
                        break
            if touched < 2:
                ok = False
                break
        if ok:
            if nout == cap:
                cap *= 2
                masks2 = np.empty(cap, dtype=np.uint64)
                counts2 = np.empty(cap, dtype=np.int64)
                masks2[:nout] = masks
                counts2[:nout] = counts
                masks = masks2
                counts = counts2
            masks[nout] = t
            counts[nout] = ncomp
            nout += 1
    return masks[:nout], counts[:nout]


def warmup() -> None:
    """Trigger JIT compilation on a toy input."""
    nbr = np.array([2, 5, 2], dtype=np.uint64)  # path 0-1-2
    enumerate_cutset_masks(nbr, np.uint64(7), np.array([1], dtype=np.int64))
