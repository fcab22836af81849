# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(unsigned long long x) nogil:
    return __builtin_popcountll(x)


cdef inline int _sign(unsigned long long a, unsigned long long b) nogil:
    cdef int swaps = 0
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if (swaps & 1) else 1


def blade_sign(unsigned long long a, unsigned long long b):
    return _sign(a, b)


def gp_float(am, ac, bm, bc, Py_ssize_t dim):
    cdef cnp.int64_t[:] am_v = np.ascontiguousarray(am, dtype=np.int64)
    cdef double[:] ac_v = np.ascontiguousarray(ac, dtype=np.float64)
    cdef cnp.int64_t[:] bm_v = np.ascontiguousarray(bm, dtype=np.int64)
    cdef double[:] bc_v = np.ascontiguousarray(bc, dtype=np.float64)
    out = np.zeros(dim, dtype=np.float64)
    cdef double[:] o = out
    cdef Py_ssize_t i, j, na = am_v.shape[0], nb = bm_v.shape[0]
    cdef unsigned long long ma, mb
    cdef double ca
    with nogil:
        for i in range(na):
            ma = <unsigned long long>am_v[i]
            ca = ac_v[i]
            if ca == 0.0:
                continue
            for j in range(nb):
                mb = <unsigned long long>bm_v[j]
                o[ma ^ mb] += _sign(ma, mb) * ca * bc_v[j]
    return out


def quandle_witness(table):
    cdef cnp.int64_t[:, :] t = np.ascontiguousarray(table, dtype=np.int64)
    cdef Py_ssize_t k = t.shape[0]
    cdef Py_ssize_t x, y, z
    cdef cnp.int64_t v, xy
    if t.shape[1] != k:
        return (2, 0, 0, -1)
    for x in range(k):
        if t[x, x] != x:
            return (1, x, x, -1)
    seen = np.zeros(k, dtype=np.uint8)
    cdef unsigned char[:] s = seen
    for y in range(k):
        s[:] = 0
        for x in range(k):
            v = t[x, y]
            if v < 0 or v >= k or s[v]:
                return (2, x, y, -1)
            s[v] = 1
    for x in range(k):
        for y in range(k):
            xy = t[x, y]
            for z in range(k):
                if t[xy, z] != t[t[x, z], t[y, z]]:
                    return (3, x, y, z)
    return (0, -1, -1, -1)


cdef struct _Search:
    Py_ssize_t k
    cnp.int64_t *a
    cnp.int64_t *b
    cnp.int64_t *ainv
    cnp.int64_t *l1
    cnp.int64_t *l2
    cnp.int64_t *phi
    cnp.int64_t *used
    long long nodes


cdef bint _consistent(_Search *S, Py_ssize_t v) nogil:
    cdef Py_ssize_t k = S.k, u
    cdef cnp.int64_t w = S.phi[v], pu, c, target, pc, x
    for u in range(v + 1):
        pu = S.phi[u]
        c = S.a[v * k + u]
        target = S.b[w * k + pu]
        pc = S.phi[c]
        if pc >= 0:
            if pc != target:
                return False
        elif S.used[target] >= 0:
            return False
        c = S.a[u * k + v]
        target = S.b[pu * k + w]
        pc = S.phi[c]
        if pc >= 0:
            if pc != target:
                return False
        elif S.used[target] >= 0:
            return False
        x = S.ainv[v * k + u]
        if S.phi[x] >= 0 and S.b[S.phi[x] * k + pu] != w:
            return False
    return True


cdef bint _extend(_Search *S, Py_ssize_t v) nogil:
    cdef Py_ssize_t w
    if v == S.k:
        return True
    for w in range(S.k):
        if S.used[w] >= 0 or S.l2[w] != S.l1[v]:
            continue
        S.nodes += 1
        S.phi[v] = w
        S.used[w] = v
        if _consistent(S, v) and _extend(S, v + 1):
            return True
        S.phi[v] = -1
        S.used[w] = -1
    return False


def find_isomorphism(t1, t2, labels1, labels2):
    a = np.ascontiguousarray(t1, dtype=np.int64)
    b = np.ascontiguousarray(t2, dtype=np.int64)
    cdef Py_ssize_t k = a.shape[0]
    if b.shape[0] != k:
        return (False, [], 0)
    l1 = np.ascontiguousarray(labels1, dtype=np.int64)
    l2 = np.ascontiguousarray(labels2, dtype=np.int64)
    ainv = np.zeros((k, k), dtype=np.int64)
    cdef Py_ssize_t x, y
    for x in range(k):
        for y in range(k):
            ainv[a[x, y], y] = x
    phi = np.full(k, -1, dtype=np.int64)
    used = np.full(k, -1, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] av = a
    cdef cnp.int64_t[:, ::1] bv = b
    cdef cnp.int64_t[:, ::1] iv = ainv
    cdef cnp.int64_t[::1] l1v = l1
    cdef cnp.int64_t[::1] l2v = l2
    cdef cnp.int64_t[::1] pv = phi
    cdef cnp.int64_t[::1] uv = used
    cdef _Search S
    cdef bint found
    S.k = k
    S.nodes = 0
    if k == 0:
        return (True, [], 0)
    S.a = &av[0, 0]
    S.b = &bv[0, 0]
    S.ainv = &iv[0, 0]
    S.l1 = &l1v[0]
    S.l2 = &l2v[0]
    S.phi = &pv[0]
    S.used = &uv[0]
    with nogil:
        found = _extend(&S, 0)
    return (bool(found), [int(p) for p in phi] if found else [], int(S.nodes))
