# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free reduced row echelon kernel.

Same Bareiss/Montante Gauss-Jordan as the pure-Python fallback; the entries
stay arbitrary-precision Python ints, the loop bookkeeping is compiled.
"""


def rref_int(rows, Py_ssize_t ncols):
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef list pivots = []
    cdef Py_ssize_t pr = 0, c, r, j, pi
    cdef list mr, prow
    prev = 1
    for c in range(ncols):
        pi = -1
        for r in range(pr, nrows):
            if (<list>m[r])[c] != 0:
                pi = r
                break
        if pi < 0:
            continue
        if pi != pr:
            m[pr], m[pi] = m[pi], m[pr]
        prow = <list>m[pr]
        p = prow[c]
        for r in range(nrows):
            if r == pr:
                continue
            mr = <list>m[r]
            mc = mr[c]
            if mc == 0:
                if prev != 1:
                    for j in range(ncols):
                        mr[j] = (p * mr[j]) // prev
                elif p != 1:
                    for j in range(ncols):
                        mr[j] = p * mr[j]
            else:
                for j in range(ncols):
                    mr[j] = (p * mr[j] - mc * prow[j]) // prev
        prev = p
        pivots.append(c)
        pr += 1
    return m, pivots
