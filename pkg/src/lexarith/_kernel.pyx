# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-arithmetic kernel.

Mirrors :mod:`lexarith._kernel_py` function for function; see that module
for the shared data layout.  Numerators and denominators stay Python ints
(coefficients can outgrow machine words under repeated products), so the
speedup comes from typed loops and inlined rational arithmetic rather than
C integer math.
"""

from math import gcd

BACKEND = "compiled"


def rat(num, den=1):
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if den < 0:
        num = -num
        den = -den
    g = gcd(num, den)
    if g > 1:
        return (num // g, den // g)
    return (num, den)


cdef inline tuple _rat_add(tuple a, tuple b):
    cdef object an = a[0], ad = a[1], bn = b[0], bd = b[1]
    cdef object num, den, g
    if ad == bd:
        num = an + bn
        den = ad
    else:
        num = an * bd + bn * ad
        den = ad * bd
    g = gcd(num, den)
    if g > 1:
        return (num // g, den // g)
    return (num, den)


cdef inline tuple _rat_mul(tuple a, tuple b):
    cdef object num = a[0] * b[0]
    cdef object den = a[1] * b[1]
    cdef object g = gcd(num, den)
    if g > 1:
        return (num // g, den // g)
    return (num, den)


cdef inline int _rat_cmp(tuple a, tuple b) except? -2:
    cdef object v = a[0] * b[1] - b[0] * a[1]
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cdef inline int _exp_cmp(tuple e, tuple f) except? -2:
    cdef Py_ssize_t i, n = len(e)
    cdef int c
    for i in range(n):
        c = _rat_cmp(<tuple>e[i], <tuple>f[i])
        if c:
            return c
    return 0


def rat_add(a, b):
    return _rat_add(a, b)


def rat_sub(a, b):
    return _rat_add(a, (-b[0], b[1]))


def rat_mul(a, b):
    return _rat_mul(a, b)


def rat_div(a, b):
    if b[0] == 0:
        raise ZeroDivisionError("rational division by zero")
    bn = b[0]
    bd = b[1]
    if bn < 0:
        bn = -bn
        bd = -bd
    return _rat_mul(a, (bd, bn))


def rat_neg(a):
    return (-a[0], a[1])


def rat_cmp(a, b):
    return _rat_cmp(a, b)


def exp_cmp(e, f):
    return _exp_cmp(e, f)


def exp_add(e, f):
    cdef Py_ssize_t i, n = len(e)
    return tuple(_rat_add(<tuple>e[i], <tuple>f[i]) for i in range(n))


def exp_sub(e, f):
    cdef Py_ssize_t i, n = len(e)
    cdef tuple fi
    cdef list out = []
    for i in range(n):
        fi = <tuple>f[i]
        out.append(_rat_add(<tuple>e[i], (-fi[0], fi[1])))
    return tuple(out)


def exp_scale(e, r):
    cdef Py_ssize_t i, n = len(e)
    return tuple(_rat_mul(<tuple>e[i], r) for i in range(n))


def exp_is_zero(e):
    cdef Py_ssize_t i, n = len(e)
    for i in range(n):
        if (<tuple>e[i])[0] != 0:
            return False
    return True


def terms_neg(A):
    cdef list out = []
    cdef tuple t, c
    for t in A:
        c = <tuple>t[1]
        out.append((t[0], (-c[0], c[1])))
    return tuple(out)


def terms_add(A, B):
    cdef tuple ta = tuple(A)
    cdef tuple tb = tuple(B)
    if not ta:
        return tb
    if not tb:
        return ta
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, la = len(ta), lb = len(tb)
    cdef tuple a, b, s
    cdef int c
    while i < la and j < lb:
        a = <tuple>ta[i]
        b = <tuple>tb[j]
        c = _exp_cmp(<tuple>a[0], <tuple>b[0])
        if c > 0:
            out.append(a)
            i += 1
        elif c < 0:
            out.append(b)
            j += 1
        else:
            s = _rat_add(<tuple>a[1], <tuple>b[1])
            if s[0] != 0:
                out.append((a[0], s))
            i += 1
            j += 1
    while i < la:
        out.append(ta[i])
        i += 1
    while j < lb:
        out.append(tb[j])
        j += 1
    return tuple(out)


def terms_sub(A, B):
    return terms_add(A, terms_neg(B))


def terms_scale(A, r):
    if r[0] == 0:
        return ()
    cdef list out = []
    cdef tuple t
    for t in A:
        out.append((t[0], _rat_mul(<tuple>t[1], r)))
    return tuple(out)


def terms_mul(A, B):
    cdef tuple ta = tuple(A)
    cdef tuple tb = tuple(B)
    if not ta or not tb:
        return ()
    cdef dict acc = {}
    cdef tuple a, b, k
    cdef object v
    cdef Py_ssize_t i, j, la = len(ta), lb = len(tb)
    for i in range(la):
        a = <tuple>ta[i]
        for j in range(lb):
            b = <tuple>tb[j]
            k = exp_add(<tuple>a[0], <tuple>b[0])
            v = acc.get(k)
            if v is None:
                acc[k] = _rat_mul(<tuple>a[1], <tuple>b[1])
            else:
                acc[k] = _rat_add(<tuple>v, _rat_mul(<tuple>a[1], <tuple>b[1]))
    cdef list out = []
    cdef Py_ssize_t lo, hi, mid
    for k, v in acc.items():
        if (<tuple>v)[0] == 0:
            continue
        lo = 0
        hi = len(out)
        while lo < hi:
            mid = (lo + hi) // 2
            if _exp_cmp(<tuple>k, <tuple>(<tuple>out[mid])[0]) > 0:
                hi = mid
            else:
                lo = mid + 1
        out.insert(lo, (k, v))
    return tuple(out)


def terms_cmp(A, B):
    cdef tuple ta = tuple(A)
    cdef tuple tb = tuple(B)
    cdef Py_ssize_t i = 0, j = 0, la = len(ta), lb = len(tb)
    cdef tuple a, b
    cdef int c, d
    while i < la and j < lb:
        a = <tuple>ta[i]
        b = <tuple>tb[j]
        c = _exp_cmp(<tuple>a[0], <tuple>b[0])
        if c > 0:
            return 1 if (<tuple>a[1])[0] > 0 else -1
        if c < 0:
            return -1 if (<tuple>b[1])[0] > 0 else 1
        d = _rat_cmp(<tuple>a[1], <tuple>b[1])
        if d:
            return d
        i += 1
        j += 1
    if i < la:
        return 1 if (<tuple>(<tuple>ta[i])[1])[0] > 0 else -1
    if j < lb:
        return -1 if (<tuple>(<tuple>tb[j])[1])[0] > 0 else 1
    return 0


def terms_sign(A):
    cdef tuple ta = tuple(A)
    if not ta:
        return 0
    return 1 if (<tuple>(<tuple>ta[0])[1])[0] > 0 else -1
