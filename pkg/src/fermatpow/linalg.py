"""Exact dense row reduction over an arbitrary exact field.

Entries only need +, -, *, / and truthiness, so the same routines serve
rational and cyclotomic matrices.  No floating point, ever: a single wrong
rank would falsify a least-degree claim.
"""

from __future__ import annotations


def row_rank(rows) -> int:
    """Rank by forward elimination, consuming ``rows`` (list of lists).

    Pivot rows are chosen sparsest-first to slow coefficient growth.
    """
    active = [r for r in rows if any(r)]
    if not active:
        return 0
    ncols = len(active[0])
    rank = 0
    for col in range(ncols):
        best = -1
        best_n = None
        for idx, r in enumerate(active):
            if r[col]:
                n = sum(1 for v in r if v)
                if best_n is None or n < best_n:
                    best, best_n = idx, n
        if best < 0:
            continue
        piv = active.pop(best)
        pc = piv[col]
        rank += 1
        nxt = []
        for r in active:
            v = r[col]
            if v:
                f = v / pc
                r = [a - f * b if b else a for a, b in zip(r, piv)]
                if any(r):
                    nxt.append(r)
            else:
                nxt.append(r)
        active = nxt
        if not active:
            break
    return rank


def kernel_dimension(rows, ncols: int) -> int:
    """Dimension of the right kernel of the matrix given by ``rows``."""
    return ncols - row_rank(rows)


def rref(rows):
    """Reduced row echelon form (canonical) of ``rows``.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    ``rows`` is consumed.
    """
    active = [list(r) for r in rows if any(r)]
    if not active:
        return [], []
    ncols = len(active[0])
    done: list[list] = []
    pivots: list[int] = []
    for col in range(ncols):
        hit = -1
        for idx, r in enumerate(active):
            if r[col]:
                hit = idx
                break
        if hit < 0:
            continue
        piv = active.pop(hit)
        pc = piv[col]
        if pc != 1:
            piv = [v / pc for v in piv]
        nxt = []
        for r in active:
            v = r[col]
            if v:
                r = [a - v * b if b else a for a, b in zip(r, piv)]
                if any(r):
                    nxt.append(r)
            else:
                nxt.append(r)
        active = nxt
        for i, r in enumerate(done):
            v = r[col]
            if v:
                done[i] = [a - v * b if b else a for a, b in zip(r, piv)]
        done.append(piv)
        pivots.append(col)
        if not active:
            break
    return done, pivots
