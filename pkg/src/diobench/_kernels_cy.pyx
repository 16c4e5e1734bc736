# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the integer search kernels (see _kernels_py for docs)."""

from libc.stdlib cimport calloc, free
from libc.math cimport sqrt

BACKEND = "cython"


cdef long long _isqrt(long long n):
    cdef long long r = <long long>sqrt(<double>n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


def four_squares_raw(n):
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= (1 << 62):
        # stay within long long; the caller falls back to pure Python
        from diobench._kernels_py import four_squares_raw as py
        return py(n)
    cdef long long nn = n, x1, x2, x3, x4, r1, r2, r3
    for x1 in range(_isqrt(nn), -1, -1):
        r1 = nn - x1 * x1
        if r1 > 3 * x1 * x1:
            break
        for x2 in range(min(x1, _isqrt(r1)), -1, -1):
            r2 = r1 - x2 * x2
            if r2 > 2 * x2 * x2:
                break
            for x3 in range(min(x2, _isqrt(r2)), -1, -1):
                r3 = r2 - x3 * x3
                if r3 > x3 * x3:
                    break
                x4 = _isqrt(r3)
                if x4 * x4 == r3:
                    return (int(x1), int(x2), int(x3), int(x4))
    raise AssertionError("four-square decomposition not found")


def mod_scan_soluble(a, b, m, p):
    cdef long long mm = m
    cdef long long aa = a % mm, bb = b % mm
    if aa < 0:
        aa += mm
    if bb < 0:
        bb += mm
    cdef unsigned char *squares = <unsigned char *>calloc(mm, 1)
    cdef unsigned char *byy = NULL
    cdef long long x, y, z
    cdef int found = 0
    if squares == NULL:
        raise MemoryError()
    try:
        for z in range(mm // 2 + 1):
            squares[z * z % mm] = 1
        for y in range(mm):
            if squares[(aa + bb * y % mm * y) % mm]:
                found = 1
                break
        if not found:
            for x in range(mm):
                if squares[(bb + aa * x % mm * x) % mm]:
                    found = 1
                    break
        if not found:
            byy = <unsigned char *>calloc(mm, 1)
            if byy == NULL:
                raise MemoryError()
            for y in range(mm):
                byy[bb * y % mm * y % mm] = 1
            for x in range(mm):
                if byy[(1 - aa * x % mm * x % mm + mm) % mm]:
                    found = 1
                    break
    finally:
        free(squares)
        if byy != NULL:
            free(byy)
    return 1 if found else -1
