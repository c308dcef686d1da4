# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contract as ``_pykernels``."""

from array import array

from libc.stdlib cimport calloc, free

BACKEND = "cython"


cdef inline bint _edge_ok(long* colors, const long[:] flat, Py_ssize_t base,
                          int m, int k, bint poly, long long* seen, long long stamp) noexcept:
    cdef int j, c, distinct = 0
    if poly:
        for j in range(m):
            c = colors[flat[base + j] - 1]
            if seen[c] != stamp:
                seen[c] = stamp
                distinct += 1
        return distinct == k
    c = colors[flat[base] - 1]
    for j in range(1, m):
        if colors[flat[base + j] - 1] != c:
            return True
    return False


def exhaustive(int n, int k, int m, flat_in, bint polychromatic):
    cdef const long[:] flat = array("l", flat_in)
    cdef Py_ssize_t t = len(flat) // m if m > 0 else 0
    cdef long* colors = <long*>calloc(n, sizeof(long))
    cdef long long* seen = <long long*>calloc(k + 1, sizeof(long long))
    cdef long long nodes = 0
    cdef Py_ssize_t e, i
    cdef long long stamp = 0
    cdef bint ok
    if colors == NULL or seen == NULL:
        free(colors)
        free(seen)
        raise MemoryError()
    try:
        for i in range(n):
            colors[i] = 1
        while True:
            nodes += 1
            ok = True
            for e in range(t):
                stamp += 1
                if not _edge_ok(colors, flat, e * m, m, k, polychromatic, seen, stamp):
                    ok = False
                    break
            if ok:
                return tuple([colors[i] for i in range(n)]), nodes
            # odometer, last vertex fastest
            i = n - 1
            while i >= 0 and colors[i] == k:
                colors[i] = 1
                i -= 1
            if i < 0:
                return None, nodes
            colors[i] += 1
    finally:
        free(colors)
        free(seen)


def backtrack(int n, int k, int m, flat_in, bint polychromatic, first_colors=None):
    cdef const long[:] flat = array("l", flat_in)
    cdef Py_ssize_t t = len(flat) // m if m > 0 else 0
    cdef const long[:] choices = array(
        "l", list(first_colors) if first_colors is not None else range(1, k + 1))
    cdef Py_ssize_t nchoices = len(choices)
    cdef Py_ssize_t e, j, v, c, pos = 0, ei
    cdef long long nodes = 0
    cdef bint ok

    # CSR incidence lists
    cdef long* deg = <long*>calloc(n + 2, sizeof(long))
    cdef long* ptr = <long*>calloc(n + 2, sizeof(long))
    cdef long* inc = <long*>calloc(t * m + 1, sizeof(long))
    cdef long* fill = <long*>calloc(n + 2, sizeof(long))
    cdef long* counts = <long*>calloc(t * (k + 1) + 1, sizeof(long))
    cdef long* assigned = <long*>calloc(t + 1, sizeof(long))
    cdef long* distinct = <long*>calloc(t + 1, sizeof(long))
    cdef long* colors = <long*>calloc(n + 2, sizeof(long))
    try:
        if (deg == NULL or ptr == NULL or inc == NULL or fill == NULL or counts == NULL
                or assigned == NULL or distinct == NULL or colors == NULL):
            raise MemoryError()
        for e in range(t):
            for j in range(m):
                deg[flat[e * m + j]] += 1
        for v in range(1, n + 1):
            ptr[v + 1] = ptr[v] + deg[v]
        for e in range(t):
            for j in range(m):
                v = flat[e * m + j]
                inc[ptr[v] + fill[v]] = e
                fill[v] += 1

        v = 1
        while True:
            if v == 0:
                return None, nodes
            if v > n:
                return tuple([colors[i] for i in range(1, n + 1)]), nodes
            c = colors[v]
            if c:
                for ei in range(ptr[v], ptr[v + 1]):
                    e = inc[ei]
                    counts[e * (k + 1) + c] -= 1
                    if counts[e * (k + 1) + c] == 0:
                        distinct[e] -= 1
                    assigned[e] -= 1
            if v == 1:
                if pos >= nchoices:
                    colors[1] = 0
                    v = 0
                    continue
                c = choices[pos]
                pos += 1
            else:
                c += 1
                if c > k:
                    colors[v] = 0
                    v -= 1
                    continue
            colors[v] = c
            nodes += 1
            ok = True
            for ei in range(ptr[v], ptr[v + 1]):
                e = inc[ei]
                if counts[e * (k + 1) + c] == 0:
                    distinct[e] += 1
                counts[e * (k + 1) + c] += 1
                assigned[e] += 1
                if polychromatic:
                    if m - assigned[e] < k - distinct[e]:
                        ok = False
                elif assigned[e] == m and counts[e * (k + 1) + c] == m:
                    ok = False
            if ok:
                v += 1
                if v <= n:
                    colors[v] = 0
    finally:
        free(deg)
        free(ptr)
        free(inc)
        free(fill)
        free(counts)
        free(assigned)
        free(distinct)
        free(colors)
