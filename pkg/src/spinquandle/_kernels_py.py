"""Pure-Python kernels; reference twin of ``_ckernels.pyx``.

Both modules expose the same four functions with identical results, so the
rest of the package never needs to know which one was loaded.
"""
from __future__ import annotations

import numpy as np


def blade_sign(a: int, b: int) -> int:
    """Sign of the blade product ``e_a * e_b`` when every generator squares to +1.

    Counts, for each generator in ``b``, the generators of ``a`` with a
    larger index that it must be moved past.
    """
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def gp_float(am, ac, bm, bc, dim: int) -> np.ndarray:
    """Dense float geometric product of two sparse operands."""
    out = np.zeros(dim)
    for i in range(len(am)):
        ma = int(am[i])
        ca = float(ac[i])
        for j in range(len(bm)):
            mb = int(bm[j])
            out[ma ^ mb] += blade_sign(ma, mb) * ca * float(bc[j])
    return out


def quandle_witness(table) -> tuple:
    """First axiom violation of a finite operation table.

    Returns ``(code, x, y, z)`` with code 0 for no violation, 1 for Q1
    (``x▷x != x``), 2 for Q2 (column ``y`` repeats value at row ``x``), 3 for
    Q3 on the triple ``(x, y, z)``.
    """
    t = [list(map(int, row)) for row in table]
    k = len(t)
    for x in range(k):
        if t[x][x] != x:
            return (1, x, x, -1)
    for y in range(k):
        seen = [False] * k
        for x in range(k):
            v = t[x][y]
            if v < 0 or v >= k or seen[v]:
                return (2, x, y, -1)
            seen[v] = True
    for x in range(k):
        tx = t[x]
        for y in range(k):
            xy = tx[y]
            ty = t[y]
            for z in range(k):
                if t[xy][z] != t[tx[z]][ty[z]]:
                    return (3, x, y, z)
    return (0, -1, -1, -1)


def find_isomorphism(t1, t2, labels1, labels2) -> tuple:
    """Backtracking search for a bijection ``phi`` with ``phi(x▷y) = phi(x)▷phi(y)``.

    Elements are assigned in index order; ``phi(v)`` may only take values with
    the same label.  Every newly fixed value is checked against all products
    whose three participants are already assigned.  Returns
    ``(found, mapping, nodes)`` where ``nodes`` counts partial assignments
    tried; with ``found`` false the search space was exhausted.
    """
    a = [list(map(int, row)) for row in t1]
    b = [list(map(int, row)) for row in t2]
    k = len(a)
    if len(b) != k:
        return (False, [], 0)
    l1 = [int(v) for v in labels1]
    l2 = [int(v) for v in labels2]
    # ainv[v][y] = x with x▷y = v
    ainv = [[0] * k for _ in range(k)]
    for x in range(k):
        for y in range(k):
            ainv[a[x][y]][y] = x
    phi = [-1] * k
    used = [-1] * k  # used[w] = preimage of w
    nodes = 0

    def consistent(v: int) -> bool:
        w = phi[v]
        for u in range(v + 1):
            pu = phi[u]
            for c, target in ((a[v][u], b[w][pu]), (a[u][v], b[pu][w])):
                pc = phi[c]
                if pc >= 0:
                    if pc != target:
                        return False
                elif used[target] >= 0:
                    return False
            # preimage: (x, u) with x▷u = v
            x = ainv[v][u]
            if phi[x] >= 0 and b[phi[x]][pu] != w:
                return False
        return True

    def extend(v: int) -> bool:
        nonlocal nodes
        if v == k:
            return True
        for w in range(k):
            if used[w] >= 0 or l2[w] != l1[v]:
                continue
            nodes += 1
            phi[v] = w
            used[w] = v
            if consistent(v) and extend(v + 1):
                return True
            phi[v] = -1
            used[w] = -1
        return False

    found = extend(0)
    return (found, list(phi) if found else [], nodes)
