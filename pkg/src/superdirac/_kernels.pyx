# distutils: language = c++
"""Compiled kernels for sparse Laurent polynomials and truncated series.

Same interface and results as ``_kernels_py``.  Exponent tuples of length
at most 4 with small entries are packed into 16-bit fields of a uint64 (the
field order keeps lexicographic order), and coefficients are held as int64
with overflow detection.  Anything outside those limits is delegated to the
pure-Python implementation, so results never depend on the backend.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
cimport cython
from cython.operator cimport dereference as deref, preincrement as inc

from . import _kernels_py as _py

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow"(int64_t a, int64_t b, int64_t *res) nogil
    bint add_overflow "__builtin_add_overflow"(int64_t a, int64_t b, int64_t *res) nogil
    bint sub_overflow "__builtin_sub_overflow"(int64_t a, int64_t b, int64_t *res) nogil

cdef int MAX_FIELDS = 4
cdef uint64_t MASK = 0xFFFF
cdef int64_t BIAS = 1 << 15
cdef int64_t LIMIT = 1 << 14
cdef int64_t COEF_LIMIT = (<int64_t>1) << 62


class _Overflow(Exception):
    pass


cdef inline uint64_t _pack(tuple key, int n, int64_t bias):
    cdef uint64_t out = 0
    cdef int i
    for i in range(n):
        out = (out << 16) | <uint64_t>(<int64_t>key[i] + bias)
    return out


cdef inline tuple _unpack(uint64_t k, int n, int64_t bias):
    cdef list out = [0] * n
    cdef int i
    for i in range(n - 1, -1, -1):
        out[i] = <int64_t>(k & MASK) - bias
        k >>= 16
    return tuple(out)


cdef inline int64_t _field(uint64_t k, int i, int n) noexcept nogil:
    return <int64_t>((k >> (16 * (n - 1 - i))) & MASK)


cdef uint64_t _bias_word(int n, int64_t bias):
    cdef uint64_t out = 0
    cdef int i
    for i in range(n):
        out = (out << 16) | <uint64_t>bias
    return out


cdef bint _small_keys(dict d, int n, int64_t lo, int64_t hi):
    for k in d:
        if len(k) != n:
            return False
        for x in k:
            if x < lo or x >= hi:
                return False
    return True


cdef bint _small_coefs(dict d):
    for c in d.values():
        if c >= COEF_LIMIT or c <= -COEF_LIMIT:
            return False
    return True


def laurent_mul(dict a, dict b):
    if not a or not b:
        return {}
    cdef int n = len(next(iter(a)))
    if n < 1 or n > MAX_FIELDS or not _small_keys(a, n, -LIMIT, LIMIT) or not _small_keys(b, n, -LIMIT, LIMIT):
        return _py.laurent_mul(a, b)
    if not _small_coefs(a) or not _small_coefs(b):
        return _py.laurent_mul(a, b)
    try:
        return _laurent_mul_packed(a, b, n)
    except _Overflow:
        return _py.laurent_mul(a, b)


cdef dict _laurent_mul_packed(dict a, dict b, int n):
    cdef vector[uint64_t] ka, kb
    cdef vector[int64_t] ca, cb
    for k, c in a.items():
        ka.push_back(_pack(k, n, BIAS))
        ca.push_back(c)
    for k, c in b.items():
        kb.push_back(_pack(k, n, BIAS))
        cb.push_back(c)
    cdef uint64_t bw = _bias_word(n, BIAS)
    cdef unordered_map[uint64_t, int64_t] acc
    acc.reserve(ka.size() * kb.size())
    cdef size_t i, j
    cdef int64_t prod, tot
    cdef uint64_t key
    cdef bint overflow = False
    with nogil:
        for i in range(ka.size()):
            for j in range(kb.size()):
                if mul_overflow(ca[i], cb[j], &prod):
                    overflow = True
                    break
                key = ka[i] + kb[j] - bw
                if add_overflow(acc[key], prod, &tot):
                    overflow = True
                    break
                acc[key] = tot
            if overflow:
                break
    if overflow:
        raise _Overflow()
    return _to_dict(acc, n, BIAS)


cdef dict _to_dict(unordered_map[uint64_t, int64_t]& acc, int n, int64_t bias):
    cdef dict out = {}
    cdef unordered_map[uint64_t, int64_t].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out[_unpack(deref(it).first, n, bias)] = deref(it).second
        inc(it)
    return out


def laurent_divide(dict f, dict g):
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return {}, {}
    cdef int n = len(next(iter(f)))
    if n < 1 or n > MAX_FIELDS or not _small_keys(f, n, -LIMIT, LIMIT) or not _small_keys(g, n, -LIMIT, LIMIT):
        return _py.laurent_divide(f, g)
    if not _small_coefs(f) or not _small_coefs(g):
        return _py.laurent_divide(f, g)
    try:
        return _laurent_divide_packed(f, g, n)
    except _Overflow:
        return _py.laurent_divide(f, g)


@cython.cdivision(True)
cdef tuple _laurent_divide_packed(dict f, dict g, int n):
    cdef vector[uint64_t] gk
    cdef vector[int64_t] gc
    cdef unordered_map[uint64_t, int64_t] rem
    cdef priority_queue[uint64_t] heap
    cdef uint64_t k, glead = 0, gmin = 0, fmin = 0, lead, qk, key
    cdef int64_t lo[4]
    cdef int64_t hi[4]
    cdef int64_t c, qc, prod, newc, gcoef
    cdef int i
    cdef size_t j
    cdef bint first = True
    for i in range(n):
        lo[i] = 0
        hi[i] = 0
    for kt, cv in g.items():
        k = _pack(kt, n, BIAS)
        gk.push_back(k)
        gc.push_back(cv)
        if first or k > glead:
            glead = k
        if first or k < gmin:
            gmin = k
        first = False
    first = True
    for kt, cv in f.items():
        k = _pack(kt, n, BIAS)
        rem[k] = cv
        heap.push(k)
        if first or k < fmin:
            fmin = k
        first = False
    # coordinatewise Newton box for quotient terms (biased fields)
    lo_t, hi_t = _py._box(f, g)
    for i in range(n):
        lo[i] = lo_t[i] + BIAS
        hi[i] = hi_t[i] + BIAS
        if lo[i] > hi[i]:
            return {}, dict(f)
    gcoef = g[_unpack(glead, n, BIAS)]
    cdef uint64_t bw = _bias_word(n, BIAS)
    cdef uint64_t floor = fmin - gmin + bw
    cdef unordered_map[uint64_t, int64_t] quot
    cdef bint failed = False
    cdef bint overflow = False
    with nogil:
        while not heap.empty():
            lead = heap.top()
            heap.pop()
            if rem.count(lead) == 0:
                continue
            c = rem[lead]
            if c == 0:
                rem.erase(lead)
                continue
            qk = lead - glead + bw
            if c % gcoef != 0 or qk < floor:
                failed = True
                break
            for i in range(n):
                if _field(qk, i, n) < lo[i] or _field(qk, i, n) > hi[i]:
                    failed = True
                    break
            if failed:
                break
            qc = c // gcoef
            quot[qk] = qc
            for j in range(gk.size()):
                key = qk + gk[j] - bw
                if mul_overflow(qc, gc[j], &prod):
                    overflow = True
                    break
                if rem.count(key) == 0:
                    rem[key] = -prod
                    heap.push(key)
                else:
                    if sub_overflow(rem[key], prod, &newc):
                        overflow = True
                        break
                    if newc == 0:
                        rem.erase(key)
                    else:
                        rem[key] = newc
            if overflow:
                break
    if overflow:
        raise _Overflow()
    return _to_dict(quot, n, BIAS), _to_dict(rem, n, BIAS)


def series_mul(dict a, dict b, long order):
    if not a or not b:
        return {}
    cdef int n = len(next(iter(a)))
    if n < 1 or n > MAX_FIELDS or order >= LIMIT or order < 0:
        return _py.series_mul(a, b, order)
    a2 = {k: c for k, c in a.items() if sum(k) <= order}
    b2 = {k: c for k, c in b.items() if sum(k) <= order}
    if not a2 or not b2:
        return {}
    if not _small_keys(a2, n, 0, LIMIT) or not _small_keys(b2, n, 0, LIMIT):
        return _py.series_mul(a, b, order)
    if not _small_coefs(a2) or not _small_coefs(b2):
        return _py.series_mul(a, b, order)
    try:
        return _series_mul_packed(a2, b2, n, order)
    except _Overflow:
        return _py.series_mul(a, b, order)


cdef dict _series_mul_packed(dict a, dict b, int n, long order):
    cdef vector[uint64_t] ka, kb
    cdef vector[int64_t] ca, cb
    cdef vector[long] da, db
    for k, c in a.items():
        ka.push_back(_pack(k, n, 0))
        ca.push_back(c)
        da.push_back(sum(k))
    for k, c in b.items():
        kb.push_back(_pack(k, n, 0))
        cb.push_back(c)
        db.push_back(sum(k))
    cdef unordered_map[uint64_t, int64_t] acc
    cdef size_t i, j
    cdef int64_t prod, tot
    cdef uint64_t key
    cdef bint overflow = False
    with nogil:
        for i in range(ka.size()):
            for j in range(kb.size()):
                if da[i] + db[j] > order:
                    continue
                if mul_overflow(ca[i], cb[j], &prod):
                    overflow = True
                    break
                key = ka[i] + kb[j]
                if add_overflow(acc[key], prod, &tot):
                    overflow = True
                    break
                acc[key] = tot
            if overflow:
                break
    if overflow:
        raise _Overflow()
    return _to_dict(acc, n, 0)
