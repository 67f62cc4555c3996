"""Pure-Python bitset kernels (fallback path; no vertex-count limit).

Masks are Python ints, so graphs with more than 64 vertices are fine here.
"""

from __future__ import annotations


def enumerate_cutset_masks(nbr: list[int], full: int,
                           cand: list[int]) -> list[tuple[int, int]]:
    """All cutset masks T within one connected piece `full`, with component
    counts of full\\T.

    `cand` are the bit positions allowed in T (the non-free vertices of the
    piece).  A set T qualifies when every t in T has neighbors in at least
    two distinct components of the piece minus T.  The empty set is included
    with the component count of the untouched piece (always 1 for a
    connected piece).
    """
    k = len(cand)
    out = []
    for sub in range(1 << k):
        t = 0
        s = sub
        while s:
            b = s & -s
            s ^= b
            t |= 1 << cand[b.bit_length() - 1]
        alive = full & ~t
        # component masks of the piece minus T
        comps = []
        rest = alive
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= nbr[b.bit_length() - 1]
                frontier = nxt & alive & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        ok = True
        tt = t
        while tt:
            b = tt & -tt
            tt ^= b
            nb = nbr[b.bit_length() - 1] & alive
            touched = 0
            for comp in comps:
                if nb & comp:
                    touched += 1
                    if touched == 2:
                        break
            if touched < 2:
                ok = False
                break
        if ok:
            out.append((t, len(comps)))
    return out
