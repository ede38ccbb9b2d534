# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box-scan kernel.

box_sum mirrors _scan_py.box_sum exactly; kernel.py guards the int64 range
before dispatching here, so plain C arithmetic is safe.
"""

from libc.stdlib cimport free, malloc


def box_sum(lo, hi, rays, bounds, table):
    """Sum table[mask(m)] over the integer box; bit k of mask(m) is
    ⟨m, rays[k]⟩ < bounds[k]. See _scan_py.box_sum for the reference."""
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t r = len(rays)
    cdef Py_ssize_t tsize = len(table)
    cdef Py_ssize_t i, k, axis
    cdef long long total = 0
    cdef unsigned long long mask
    cdef long long s

    for i in range(n):
        if lo[i] > hi[i]:
            return 0
    if n == 0:
        return int(table[0])

    cdef long long *clo = <long long *> malloc(n * sizeof(long long))
    cdef long long *chi_ = <long long *> malloc(n * sizeof(long long))
    cdef long long *cm = <long long *> malloc(n * sizeof(long long))
    cdef long long *cray = <long long *> malloc(r * n * sizeof(long long))
    cdef long long *cb = <long long *> malloc(r * sizeof(long long))
    cdef long long *ct = <long long *> malloc(tsize * sizeof(long long))
    if not (clo and chi_ and cm and cray and cb and ct):
        free(clo); free(chi_); free(cm); free(cray); free(cb); free(ct)
        raise MemoryError()
    try:
        for i in range(n):
            clo[i] = lo[i]
            chi_[i] = hi[i]
            cm[i] = clo[i]
        for k in range(r):
            row = rays[k]
            for i in range(n):
                cray[k * n + i] = row[i]
            cb[k] = bounds[k]
        for i in range(tsize):
            ct[i] = table[i]

        while True:
            mask = 0
            for k in range(r):
                s = 0
                for i in range(n):
                    s += cray[k * n + i] * cm[i]
                if s < cb[k]:
                    mask |= 1ULL << k
            total += ct[mask]
            axis = n - 1
            while axis >= 0:
                cm[axis] += 1
                if cm[axis] <= chi_[axis]:
                    break
                cm[axis] = clo[axis]
                axis -= 1
            if axis < 0:
                break
    finally:
        free(clo); free(chi_); free(cm); free(cray); free(cb); free(ct)
    return int(total)
