# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled spanning-subgraph kernel; mirrors ``_pykernels.forest_histogram``."""

from libc.stdlib cimport malloc, free
from libcpp.unordered_map cimport unordered_map
from cython.operator cimport dereference as deref, preincrement as inc

ctypedef long long i64


cdef struct State:
    int E
    int *eu
    int *ev
    int *parent
    int *size
    i64 *W
    i64 *binom      # (E+1) x (E+1) table, row c holds C(c, j)
    unordered_map[i64, i64] *hist


cdef inline int _find(int *parent, int x) noexcept nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef void _rec(State *st, int i, i64 code, int ne, int c) noexcept nogil:
    cdef int ru = 0, rv = 0, a, b, j, t
    cdef int E = st.E
    cdef i64 key
    while i < E:
        ru = _find(st.parent, st.eu[i])
        rv = _find(st.parent, st.ev[i])
        if ru != rv:
            break
        c += 1
        i += 1
    if i == E:
        key = code * (E + 1) + ne
        for j in range(c + 1):
            st.hist[0][key + j] += st.binom[c * (E + 1) + j]
        return
    _rec(st, i + 1, code, ne, c)
    if st.size[ru] < st.size[rv]:
        t = ru
        ru = rv
        rv = t
    a = st.size[ru]
    b = st.size[rv]
    st.parent[rv] = ru
    st.size[ru] = a + b
    _rec(st, i + 1, code - st.W[a] - st.W[b] + st.W[a + b], ne + 1, c)
    st.parent[rv] = rv
    st.size[ru] = a


def forest_histogram(int n, eu, ev, radix_w, int start, parent, size,
                     i64 code0, int ne0, int c0):
    """Same contract as the pure-Python kernel; the walk runs without the GIL."""
    cdef int E = len(eu)
    cdef State st
    cdef unordered_map[i64, i64] hist
    cdef unordered_map[i64, i64].iterator it
    cdef int i, j
    cdef i64 key
    st.E = E
    st.eu = <int *> malloc(max(E, 1) * sizeof(int))
    st.ev = <int *> malloc(max(E, 1) * sizeof(int))
    st.parent = <int *> malloc(max(n, 1) * sizeof(int))
    st.size = <int *> malloc(max(n, 1) * sizeof(int))
    st.W = <i64 *> malloc((n + 2) * sizeof(i64))
    st.binom = <i64 *> malloc((E + 1) * (E + 1) * sizeof(i64))
    st.hist = &hist
    if not (st.eu and st.ev and st.parent and st.size and st.W and st.binom):
        free(st.eu); free(st.ev); free(st.parent); free(st.size); free(st.W); free(st.binom)
        raise MemoryError()
    try:
        for i in range(E):
            st.eu[i] = eu[i]
            st.ev[i] = ev[i]
        for i in range(n):
            st.parent[i] = parent[i]
            st.size[i] = size[i]
        for i in range(n + 2):
            st.W[i] = radix_w[i] if i < len(radix_w) else 0
        for i in range(E + 1):
            for j in range(E + 1):
                if j == 0 or j == i:
                    st.binom[i * (E + 1) + j] = 1
                elif j > i:
                    st.binom[i * (E + 1) + j] = 0
                else:
                    st.binom[i * (E + 1) + j] = (st.binom[(i - 1) * (E + 1) + j - 1]
                                                 + st.binom[(i - 1) * (E + 1) + j])
        with nogil:
            _rec(&st, start, code0, ne0, c0)
        out = {}
        it = hist.begin()
        while it != hist.end():
            key = deref(it).first
            out[(key // (E + 1), key % (E + 1))] = deref(it).second
            inc(it)
        return out
    finally:
        free(st.eu); free(st.ev); free(st.parent); free(st.size); free(st.W); free(st.binom)
