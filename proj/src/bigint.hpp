#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zplat {

// Exact arbitrary-precision integer. Every quantity in this library is an
// exact integer; there is no floating point anywhere.
using Int = mpz_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Returns e >= 0 with v = p^e, or -1 if v is not a power of p.  v must be
// positive.
inline long p_adic_log(const Int& v, unsigned long p) {
    Int x = v;
    long e = 0;
    while (x > 1) {
        if (!mpz_divisible_ui_p(x.get_mpz_t(), p)) return -1;
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        ++e;
    }
    return x == 1 ? e : -1;
}

inline bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Deterministic splitmix64 generator.  Used for every seeded choice in the
// library so that reports are byte-identical across platforms (the standard
// <random> distributions are not portable).
struct Rng64 {
    std::uint64_t state;

    explicit Rng64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n).  n must be nonzero.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps this exactly uniform
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }
};

}  // namespace zplat
