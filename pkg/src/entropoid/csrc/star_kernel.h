#ifndef STAR_KERNEL_H
#define STAR_KERNEL_H

#include <stdint.h>

#define SK_MAX_LIMBS 8

typedef struct {
    int n;                       /* limbs in use */
    uint64_t p[SK_MAX_LIMBS];
    uint64_t pinv;               /* -p^-1 mod 2^64 */
    uint64_t r2[SK_MAX_LIMBS];   /* R^2 mod p */
    /* product constants, Montgomery form */
    uint64_t a3[SK_MAX_LIMBS], a8[SK_MAX_LIMBS], k1[SK_MAX_LIMBS], c1[SK_MAX_LIMBS];
    uint64_t b2[SK_MAX_LIMBS], b7[SK_MAX_LIMBS], k2[SK_MAX_LIMBS], c2[SK_MAX_LIMBS];
} sk_ctx;

typedef struct {
    uint64_t v[2][SK_MAX_LIMBS];
} sk_elem;

/* Fill ctx from plain residues (each n limbs, little-endian). */
void sk_init(sk_ctx *c, int n, const uint64_t *p, const uint64_t *r2,
             const uint64_t *a3, const uint64_t *a8, const uint64_t *k1, const uint64_t *c1,
             const uint64_t *b2, const uint64_t *b7, const uint64_t *k2, const uint64_t *c2);

void sk_to_mont(const sk_ctx *c, sk_elem *e);
void sk_from_mont(const sk_ctx *c, sk_elem *e);

void sk_star(const sk_ctx *c, sk_elem *r, const sk_elem *x, const sk_elem *y);
void sk_representative(const sk_ctx *c, sk_elem *r, const sk_elem *x, long a, long m);

/* Ladder over little-endian digits; returns number of products. */
long sk_pow_index(const sk_ctx *c, sk_elem *r, const sk_elem *x,
                  const long *digits, const long *pattern, long k, long base);

/* Closure of {(x1,x2)} for p < 2^32 with plain arithmetic.
   Writes up to `limit` elements to out1/out2; returns count or -1 on overflow. */
long sk_span_small(uint64_t p, const uint64_t *consts, uint64_t x1, uint64_t x2,
                   long limit, uint64_t *out1, uint64_t *out2);

#endif
