# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled monomial kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, free


def mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = <long>a[i] + <long>b[i]
    return tuple(out)


def mono_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


def mono_quotient(tuple b, tuple a):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = <long>b[i] - <long>a[i]
    return tuple(out)


def mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        out[i] = x if x > y else y
    return tuple(out)


def matrix_key(tuple rows, tuple m):
    # entries may be large weights: keep Python ints for the accumulation
    cdef Py_ssize_t i, n = len(m)
    out = []
    for row in rows:
        acc = 0
        for i in range(n):
            acc += row[i] * m[i]
        out.append(acc)
    return tuple(out)


def first_divisor(tuple m, lms):
    cdef Py_ssize_t k = 0, i, n = len(m)
    cdef bint ok
    for a in lms:
        ok = True
        for i in range(n):
            if <long>a[i] > <long>m[i]:
                ok = False
                break
        if ok:
            return k
        k += 1
    return -1


def lcm_degree_profile(gens, long max_degree=-1):
    cdef Py_ssize_t n = len(gens)
    if n == 0:
        return {0: 1}
    cdef Py_ssize_t t = len(gens[0])
    cdef Py_ssize_t i, k, depth
    cdef long *g = <long *> malloc(n * t * sizeof(long))
    # lcm stack: row ``depth`` holds the lcm of the chosen prefix
    cdef long *lc = <long *> malloc((n + 1) * t * sizeof(long))
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc((n + 1) * sizeof(Py_ssize_t))
    if g == NULL or lc == NULL or idx == NULL:
        free(g); free(lc); free(idx)
        raise MemoryError()
    cdef long x, y, d, maxd = 0
    for k in range(n):
        row = gens[k]
        for i in range(t):
            g[k * t + i] = row[i]
    for i in range(t):
        lc[i] = 0
    # counts indexed by degree; sized after a quick bound on lcm degree
    for i in range(t):
        x = 0
        for k in range(n):
            if g[k * t + i] > x:
                x = g[k * t + i]
        maxd += x
    cdef long *counts = <long *> malloc((maxd + 1) * sizeof(long))
    if counts == NULL:
        free(g); free(lc); free(idx)
        raise MemoryError()
    for i in range(maxd + 1):
        counts[i] = 0
    counts[0] = 1
    # enumerate subsets in lexicographic order of index sequences
    depth = 0
    idx[0] = 0
    try:
        while True:
            if idx[depth] < n:
                k = idx[depth]
                d = 0
                for i in range(t):
                    x = lc[depth * t + i]
                    y = g[k * t + i]
                    if y > x:
                        x = y
                    lc[(depth + 1) * t + i] = x
                    d += x
                idx[depth] += 1
                if max_degree >= 0 and d > max_degree:
                    continue
                # subset size is depth + 1
                if depth % 2 == 0:
                    counts[d] -= 1
                else:
                    counts[d] += 1
                depth += 1
                idx[depth] = k + 1
            else:
                if depth == 0:
                    break
                depth -= 1
        out = {}
        for i in range(maxd + 1):
            if counts[i] != 0:
                out[i] = counts[i]
        return out
    finally:
        free(g); free(lc); free(idx); free(counts)
