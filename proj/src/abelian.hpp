#pragma once

#include "intmatrix.hpp"

#include <string>
#include <vector>

namespace zplat {

// Finite abelian p-group in canonical form: p odd prime, exponents sorted
// nonincreasing with no zero entries, meaning the direct sum of Z/p^{e_j}.
struct AbelianPGroup {
    unsigned long p = 3;
    std::vector<long> exponents;  // e_1 >= e_2 >= ... >= e_m >= 1

    AbelianPGroup() = default;
    AbelianPGroup(unsigned long p_, std::vector<long> exps);

    long rank_p() const { return static_cast<long>(exponents.size()); }
    long v_p() const;  // sum of exponents = log_p of the order
    long exponent_log() const { return exponents.empty() ? 0 : exponents.front(); }
    Int order() const { return pow_int(p, static_cast<unsigned long>(v_p())); }
    Int exponent() const { return pow_int(p, static_cast<unsigned long>(exponent_log())); }
    bool trivial() const { return exponents.empty(); }

    bool operator==(const AbelianPGroup& o) const {
        return p == o.p && exponents == o.exponents;
    }
    bool operator!=(const AbelianPGroup& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. "(2,1)" meaning Z/p^2 + Z/p
};

// Finite p-power quotient amb-lattice / sub-lattice together with the
// coordinate data needed to express any element of the ambient lattice in
// the fixed SNF-adapted quotient coordinates.  These coordinates are the
// canonical coordinate system used by every finite module in the library.
class FiniteQuotient {
public:
    AbelianPGroup group;

    long ambient_dim() const { return amb_.rows(); }

    // Quotient coordinates of an ambient-space vector v (length = ambient
    // dim).  v must lie in the ambient lattice.  Result has one entry per
    // canonical generator, reduced into [0, p^{e_j}).
    std::vector<Int> coords(const std::vector<Int>& v) const;

    // Ambient-space vector representing canonical generator j.
    std::vector<Int> generator(long j) const;

    friend FiniteQuotient quotient_invariants(const IntMatrix& sub, const IntMatrix& amb,
                                              unsigned long p);

private:
    IntMatrix amb_;                 // ambient lattice basis (independent columns)
    SmithDecomposition amb_snf_;    // of amb_
    SmithDecomposition rel_snf_;    // of X where amb * X = sub
    std::vector<long> retained_;    // diagonal indices with d > 1, exponent-nonincreasing
};

// Abelian invariants of amb/sub plus transition data.  Throws:
//   ValidationError  if sub is not contained in amb (containment violation)
//   InconsistentError if the quotient has a prime factor other than p
//   BadArgumentError  if the quotient is infinite (ranks differ) or the
//                     ambient columns are dependent
FiniteQuotient quotient_invariants(const IntMatrix& sub, const IntMatrix& amb, unsigned long p);

}  // namespace zplat
