#include <stdlib.h>
#include <string.h>

#include "star_kernel.h"

typedef unsigned __int128 u128;

static int geq(const uint64_t *a, const uint64_t *b, int n)
{
    for (int i = n - 1; i >= 0; i--) {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return 1;
}

static void sub_in_place(uint64_t *a, const uint64_t *b, int n)
{
    uint64_t borrow = 0;
    for (int i = 0; i < n; i++) {
        u128 d = (u128)a[i] - b[i] - borrow;
        a[i] = (uint64_t)d;
        borrow = (uint64_t)(d >> 64) ? 1 : 0;
    }
}

static void mod_add(const sk_ctx *c, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    int n = c->n;
    uint64_t carry = 0;
    for (int i = 0; i < n; i++) {
        u128 s = (u128)a[i] + b[i] + carry;
        r[i] = (uint64_t)s;
        carry = (uint64_t)(s >> 64);
    }
    if (carry || geq(r, c->p, n))
        sub_in_place(r, c->p, n);
}

/* CIOS Montgomery product, inputs < p, output < p. r may alias a or b. */
static void mont_mul(const sk_ctx *c, uint64_t *r, const uint64_t *a, const uint64_t *b)
{
    int n = c->n;
    uint64_t t[SK_MAX_LIMBS + 2];
    memset(t, 0, sizeof(uint64_t) * (n + 2));
    for (int i = 0; i < n; i++) {
        u128 cur;
        uint64_t carry = 0;
        for (int j = 0; j < n; j++) {
            cur = (u128)a[j] * b[i] + t[j] + carry;
            t[j] = (uint64_t)cur;
            carry = (uint64_t)(cur >> 64);
        }
        cur = (u128)t[n] + carry;
        t[n] = (uint64_t)cur;
        t[n + 1] = (uint64_t)(cur >> 64);

        uint64_t m = t[0] * c->pinv;
        cur = (u128)m * c->p[0] + t[0];
        carry = (uint64_t)(cur >> 64);
        for (int j = 1; j < n; j++) {
            cur = (u128)m * c->p[j] + t[j] + carry;
            t[j - 1] = (uint64_t)cur;
            carry = (uint64_t)(cur >> 64);
        }
        cur = (u128)t[n] + carry;
        t[n - 1] = (uint64_t)cur;
        t[n] = t[n + 1] + (uint64_t)(cur >> 64);
    }
    if (t[n] || geq(t, c->p, n))
        sub_in_place(t, c->p, n);
    memcpy(r, t, sizeof(uint64_t) * n);
}

static void to_mont(const sk_ctx *c, uint64_t *v)
{
    mont_mul(c, v, v, c->r2);
}

static void from_mont(const sk_ctx *c, uint64_t *v)
{
    uint64_t one[SK_MAX_LIMBS] = {0};
    one[0] = 1;
    mont_mul(c, v, v, one);
}

void sk_init(sk_ctx *c, int n, const uint64_t *p, const uint64_t *r2,
             const uint64_t *a3, const uint64_t *a8, const uint64_t *k1, const uint64_t *c1,
             const uint64_t *b2, const uint64_t *b7, const uint64_t *k2, const uint64_t *c2)
{
    memset(c, 0, sizeof(*c));
    c->n = n;
    memcpy(c->p, p, sizeof(uint64_t) * n);
    memcpy(c->r2, r2, sizeof(uint64_t) * n);

    /* Newton iteration for p^-1 mod 2^64 */
    uint64_t inv = 1;
    for (int i = 0; i < 7; i++)
        inv *= 2 - p[0] * inv;
    c->pinv = (uint64_t)0 - inv;

    const uint64_t *src[8] = {a3, a8, k1, c1, b2, b7, k2, c2};
    uint64_t *dst[8] = {c->a3, c->a8, c->k1, c->c1, c->b2, c->b7, c->k2, c->c2};
    for (int i = 0; i < 8; i++) {
        memcpy(dst[i], src[i], sizeof(uint64_t) * n);
        to_mont(c, dst[i]);
    }
}

void sk_to_mont(const sk_ctx *c, sk_elem *e)
{
    to_mont(c, e->v[0]);
    to_mont(c, e->v[1]);
}

void sk_from_mont(const sk_ctx *c, sk_elem *e)
{
    from_mont(c, e->v[0]);
    from_mont(c, e->v[1]);
}

/* single-limb versions; same results as mont_mul/mod_add with n == 1 */
static inline uint64_t mont_mul1(const sk_ctx *c, uint64_t a, uint64_t b)
{
    u128 t = (u128)a * b;
    uint64_t m = (uint64_t)t * c->pinv;
    u128 s = (t >> 64) + (((u128)m * c->p[0] + (uint64_t)t) >> 64);
    return s >= c->p[0] ? (uint64_t)(s - c->p[0]) : (uint64_t)s;
}

static inline uint64_t mod_add1(const sk_ctx *c, uint64_t a, uint64_t b)
{
    u128 s = (u128)a + b;
    return s >= c->p[0] ? (uint64_t)(s - c->p[0]) : (uint64_t)s;
}

static void star1(const sk_ctx *c, sk_elem *r, const sk_elem *x, const sk_elem *y)
{
    uint64_t y1 = y->v[0][0], y2 = y->v[1][0];
    uint64_t v1 = mod_add1(c, mont_mul1(c, x->v[1][0], mod_add1(c, mont_mul1(c, c->a8[0], y1), c->a3[0])),
                           mod_add1(c, mont_mul1(c, c->k1[0], y1), c->c1[0]));
    uint64_t v2 = mod_add1(c, mont_mul1(c, x->v[0][0], mod_add1(c, mont_mul1(c, c->b7[0], y2), c->b2[0])),
                           mod_add1(c, mont_mul1(c, c->k2[0], y2), c->c2[0]));
    r->v[0][0] = v1;
    r->v[1][0] = v2;
}

void sk_star(const sk_ctx *c, sk_elem *r, const sk_elem *x, const sk_elem *y)
{
    uint64_t t[SK_MAX_LIMBS], u[SK_MAX_LIMBS], out1[SK_MAX_LIMBS];

    if (c->n == 1) {
        star1(c, r, x, y);
        return;
    }

    mont_mul(c, t, c->a8, y->v[0]);
    mod_add(c, t, t, c->a3);
    mont_mul(c, t, t, x->v[1]);
    mont_mul(c, u, c->k1, y->v[0]);
    mod_add(c, t, t, u);
    mod_add(c, out1, t, c->c1);

    mont_mul(c, t, c->b7, y->v[1]);
    mod_add(c, t, t, c->b2);
    mont_mul(c, t, t, x->v[0]);
    mont_mul(c, u, c->k2, y->v[1]);
    mod_add(c, t, t, u);
    mod_add(c, r->v[1], t, c->c2);

    memcpy(r->v[0], out1, sizeof(uint64_t) * c->n);
}

void sk_representative(const sk_ctx *c, sk_elem *r, const sk_elem *x, long a, long m)
{
    sk_elem t = *x;
    if (m == 0) {
        for (long i = 0; i < a - 1; i++)
            sk_star(c, &t, x, &t);
    } else {
        for (long i = 0; i < m; i++)
            sk_star(c, &t, x, &t);
        sk_star(c, &t, &t, x);
        for (long i = 0; i < a - 2 - m; i++)
            sk_star(c, &t, x, &t);
    }
    *r = t;
}

long sk_pow_index(const sk_ctx *c, sk_elem *r, const sk_elem *x,
                  const long *digits, const long *pattern, long k, long base)
{
    sk_elem w = *x, acc, t;
    int started = 0;
    long ops = 0, prev = 0;
    for (long i = 0; i < k; i++) {
        if (i) {
            sk_representative(c, &w, &w, base, pattern[i]);
            ops += base - 1;
        }
        long ai = digits[i];
        if (ai) {
            if (ai == 1) {
                t = w;
            } else {
                sk_representative(c, &t, &w, ai, pattern[i] % (ai - 1));
                ops += ai - 1;
            }
            if (!started) {
                acc = t;
                started = 1;
            } else {
                if (prev % 2 == 0)
                    sk_star(c, &acc, &t, &acc);
                else
                    sk_star(c, &acc, &acc, &t);
                ops++;
            }
        }
        prev = pattern[i];
    }
    *r = acc;
    return ops;
}

long sk_span_small(uint64_t p, const uint64_t *k, uint64_t x1, uint64_t x2,
                   long limit, uint64_t *out1, uint64_t *out2)
{
    /* k = a3, a8, k1, c1, b2, b7, k2, c2 as plain residues */
    uint64_t cells = p * p;
    unsigned char *seen = calloc((cells + 7) / 8, 1);
    if (!seen)
        return -2;
    long count = 0;
    if (limit < 1) {
        free(seen);
        return -1;
    }
    out1[0] = x1;
    out2[0] = x2;
    seen[(x1 * p + x2) >> 3] |= (unsigned char)(1u << ((x1 * p + x2) & 7));
    count = 1;
    for (long n = 0; n < count; n++) {
        uint64_t z1 = out1[n], z2 = out2[n];
        for (long j = 0; j <= n; j++) {
            uint64_t u1 = out1[j], u2 = out2[j];
            for (int side = 0; side < 2; side++) {
                uint64_t a1, a2, b1, b2;
                if (side == 0) {
                    a1 = z1; a2 = z2; b1 = u1; b2 = u2;
                } else {
                    a1 = u1; a2 = u2; b1 = z1; b2 = z2;
                }
                uint64_t v1 = (a2 * ((k[0] + k[1] * b1) % p) % p + k[2] * b1 % p + k[3]) % p;
                uint64_t v2 = (a1 * ((k[4] + k[5] * b2) % p) % p + k[6] * b2 % p + k[7]) % p;
                uint64_t cell = v1 * p + v2;
                if (!(seen[cell >> 3] & (1u << (cell & 7)))) {
                    if (count >= limit) {
                        free(seen);
                        return -1;
                    }
                    seen[cell >> 3] |= (unsigned char)(1u << (cell & 7));
                    out1[count] = v1;
                    out2[count] = v2;
                    count++;
                }
            }
        }
    }
    free(seen);
    return count;
}
