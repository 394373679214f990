#pragma once

#include "abelian.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zplat {

// 3 |G| |P|^2 (rk + s_f): the rank bound for the non-projective part of the
// unit lattice in a general Galois extension.
Int thm_a_bound(const Int& order_g, const Int& order_p, long rk_cl, long s_f);

// Number of conjugacy classes of Aut(A) consisting of elements whose order
// divides `order_divides`, by brute force over the endomorphism matrices.
// Caps: |A| <= p^4 and a fixed enumeration budget; beyond them the call is
// refused with CapExceededError.
long conjugacy_classes_of_bounded_order(const AbelianPGroup& A, const Int& order_divides,
                                        std::uint64_t endo_budget = 1ULL << 27);

// Slow reference: enumerates the whole automorphism group and conjugates
// each representative by every element.  Used to cross-check the orbit
// partition on small groups.
long conjugacy_classes_reference(const AbelianPGroup& A, const Int& order_divides,
                                 std::uint64_t aut_budget = 1ULL << 20);

// The diagram-counting sum: over all tuples (J_1..J_n) of abelian p-groups
// with rk_p(J_i) <= d_i and e(J_i) <= p^i, the product of the bounded-order
// class counts c_i(J_i) times min{e(J_i), e(J_{i+1})}^(2 rk rk').
Int diagram_counting_bound(unsigned long p, long n, const std::vector<long>& d);

// The refined counting product: binomials for the module structures times
// the two per-level map-count factors.
struct CountingRefInput {
    std::vector<Int> N;       // level bounds on the summand counts, length n
    std::vector<Int> s;       // designated indecomposable counts, length n
    std::vector<Int> fixed;   // |H^1(level i)^{level i+1}|, length n-1
    std::vector<Int> torsion; // |H^1(level i+1)[p^i]|, length n-1
    std::vector<Int> gamma;   // minimal generator counts, length n
};
Int counting_ref_bound(const CountingRefInput& in);

struct ClampedBound {
    long value;    // max(raw, 0)
    long raw;      // the formula value, possibly negative
    bool clamped;  // true when raw < 0
};

// r * i * (2+n-i) + delta * i * (n-i+1) - i*n + i^2 for 1 <= i <= n-1,
// clamped at zero (it bounds a nonnegative quantity).
ClampedBound fixedpart_bound(long i, long n, long r, long delta);

// degree * (r + delta_base); degree must be a p-power >= 1.
long rosen_bound(long degree, long r, long delta_base);

// the two exponents p(5r+2d)(6r+4d) and p(2r+d)(4r+3d)
struct ResCores3Exponents {
    Int restriction;
    Int corestriction;
};
ResCores3Exponents res_cores3_bounds(unsigned long p, long r, long delta);

// p^(p(6r+4d)^2) * binom(6r+4d+p, p)^2
Int adhoc_n2_bound(unsigned long p, long r, long delta);

// p^(16 r^2 + 22 r d + 9 d^2)
Int thm_b1_bound(unsigned long p, long r, long delta);

// the exact proof-level product for degree p^3: the combination term times
// the two restriction/corestriction factors
Int thm_b2_proof_bound(unsigned long p, long r, long delta);

// the unsimplified degree-p^2 product that the closed form rounds up from
Int thm_b1_presimplification(unsigned long p, long r, long delta);

struct InequalityReport {
    std::uint64_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Exhaustively checks binom(a,b) <= 2^a for a <= a_max, c+d <= d^c for
// 2 <= c <= cd_max, 3 <= d <= cd_max, and the two derived binomial chains
// from the degree p^2 and p^3 counting proofs for r+delta >= 1.
InequalityReport verify_binomial_inequalities(long a_max = 64, long cd_max = 20,
                                              long r_delta_max = 6);

}  // namespace zplat
