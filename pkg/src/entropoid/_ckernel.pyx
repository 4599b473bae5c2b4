# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot loops with the same interface as ``_pykernel``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

from . import _pykernel
from .errors import TooLarge

BACKEND_NAME = "native"


cdef extern from "csrc/star_kernel.h":
    enum: SK_MAX_LIMBS
    ctypedef struct sk_ctx:
        int n
    ctypedef struct sk_elem:
        uint64_t v[2][SK_MAX_LIMBS]
    void sk_init(sk_ctx *c, int n, const uint64_t *p, const uint64_t *r2,
                 const uint64_t *a3, const uint64_t *a8, const uint64_t *k1, const uint64_t *c1,
                 const uint64_t *b2, const uint64_t *b7, const uint64_t *k2, const uint64_t *c2)
    void sk_to_mont(const sk_ctx *c, sk_elem *e)
    void sk_from_mont(const sk_ctx *c, sk_elem *e)
    void sk_star(const sk_ctx *c, sk_elem *r, const sk_elem *x, const sk_elem *y)
    void sk_representative(const sk_ctx *c, sk_elem *r, const sk_elem *x, long a, long m)
    long sk_pow_index(const sk_ctx *c, sk_elem *r, const sk_elem *x,
                      const long *digits, const long *pattern, long k, long base)
    long sk_span_small(uint64_t p, const uint64_t *consts, uint64_t x1, uint64_t x2,
                       long limit, uint64_t *out1, uint64_t *out2)


MAX_BITS = 64 * SK_MAX_LIMBS
SMALL_SPAN_LIMIT = 1 << 13


cdef void _load(uint64_t *dst, object value, int n):
    cdef bytes raw = int(value).to_bytes(8 * n, "little")
    memcpy(dst, <const char *>raw, 8 * n)


cdef object _store(const uint64_t *src, int n):
    return int.from_bytes((<const char *>src)[:8 * n], "little")


cdef class StarContext:
    cdef sk_ctx ctx
    cdef int n
    cdef readonly object p
    cdef object small_consts

    def __init__(self, p, a3, a8, b2, b7, c1, k1, c2, k2):
        if p % 2 == 0 or p.bit_length() > MAX_BITS:
            raise ValueError("modulus must be odd and below 2^%d" % MAX_BITS)
        cdef int n = (p.bit_length() + 63) // 64
        cdef uint64_t buf[10][SK_MAX_LIMBS]
        memset(buf, 0, sizeof(buf))
        r2 = pow(2, 128 * n, p)
        for i, v in enumerate((p, r2, a3, a8, k1, c1, b2, b7, k2, c2)):
            _load(buf[i], v, n)
        sk_init(&self.ctx, n, buf[0], buf[1], buf[2], buf[3], buf[4], buf[5],
                buf[6], buf[7], buf[8], buf[9])
        self.n = n
        self.p = p
        self.small_consts = (a3, a8, k1, c1, b2, b7, k2, c2)

    cdef void _in(self, sk_elem *e, object x):
        memset(e, 0, sizeof(sk_elem))
        _load(e.v[0], x[0] % self.p, self.n)
        _load(e.v[1], x[1] % self.p, self.n)
        sk_to_mont(&self.ctx, e)

    cdef tuple _out(self, sk_elem *e):
        sk_from_mont(&self.ctx, e)
        return (_store(e.v[0], self.n), _store(e.v[1], self.n))

    def star(self, x, y):
        cdef sk_elem a, b, r
        self._in(&a, x)
        self._in(&b, y)
        sk_star(&self.ctx, &r, &a, &b)
        return self._out(&r)

    def representative(self, x, long a, long m):
        cdef sk_elem e, r
        self._in(&e, x)
        sk_representative(&self.ctx, &r, &e, a, m)
        return self._out(&r)

    def pow_index(self, x, digits, pattern, long base):
        cdef long k = len(digits)
        cdef long *d = <long *>malloc(sizeof(long) * k)
        cdef long *pt = <long *>malloc(sizeof(long) * k)
        cdef sk_elem e, r
        cdef long ops
        if d == NULL or pt == NULL:
            free(d)
            free(pt)
            raise MemoryError()
        try:
            for i in range(k):
                d[i] = digits[i]
                pt[i] = pattern[i]
            self._in(&e, x)
            ops = sk_pow_index(&self.ctx, &r, &e, d, pt, k, base)
        finally:
            free(d)
            free(pt)
        return self._out(&r), ops

    def span(self, x, long limit):
        if self.p >= SMALL_SPAN_LIMIT:
            # the bitmap would be too large; the hash-set closure still works
            return _pykernel.StarContext.span(self, x, limit)
        cdef uint64_t consts[8]
        for i, v in enumerate(self.small_consts):
            consts[i] = v
        cdef uint64_t *o1 = <uint64_t *>malloc(sizeof(uint64_t) * limit)
        cdef uint64_t *o2 = <uint64_t *>malloc(sizeof(uint64_t) * limit)
        cdef long count
        if o1 == NULL or o2 == NULL:
            free(o1)
            free(o2)
            raise MemoryError()
        try:
            count = sk_span_small(self.p, consts, x[0] % self.p, x[1] % self.p,
                                  limit, o1, o2)
            if count == -1:
                raise TooLarge("closure exceeds %d elements" % limit)
            if count < 0:
                raise MemoryError()
            return [(o1[i], o2[i]) for i in range(count)]
        finally:
            free(o1)
            free(o2)
