#pragma once

#include "abelian.hpp"
#include "intmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zplat {

// A lattice over the group ring of a cyclic group of order p^n, given by the
// exact integer action matrix of the fixed generator.  The construction
// checks action^(p^n) = identity.
struct Lattice {
    unsigned long p;
    long n;             // group order p^n
    long rank;
    IntMatrix action;   // rank x rank
    std::string label;

    Lattice(unsigned long p_, long n_, IntMatrix action_, std::string label_ = {});

    // action of sigma_i = sigma^(p^(n-i)), the generator of the subgroup of
    // order p^i; requires 0 <= i <= n
    IntMatrix subgroup_generator(long i) const;
    // norm element of the subgroup of order p^i as a matrix
    IntMatrix norm_matrix(long i) const;
    // relative norm from level i to i+1: sum of sigma_{i+1}^l, l < p
    IntMatrix relative_norm_matrix(long i) const;
};

// Multiplicities of the rational irreducible characters: entry k is the
// multiplicity of the irreducible with kernel of order p^k, k = 0..n.  The
// faithful character contributes to entry 0; the trivial one to entry n.
struct CharacterProfile {
    unsigned long p;
    long n;
    std::vector<long> m;  // length n+1

    bool operator==(const CharacterProfile& o) const {
        return p == o.p && n == o.n && m == o.m;
    }
    std::string to_string() const;
};

long euler_phi_p_power(unsigned long p, long k);  // phi(p^k), phi(1) = 1

// --- catalog -------------------------------------------------------------

// Z_p[G/G_i]: rank p^(n-i) permutation lattice, 0 <= i <= n
Lattice permutation_lattice(unsigned long p, long n, long i);

// Z_p[zeta_{p^i}] viewed at level n: the companion matrix of the p^i-th
// cyclotomic polynomial, rank phi(p^i); requires 1 <= i <= n
Lattice cyclotomic_lattice(unsigned long p, long n, long i);

// kernel of the augmentation map on the group ring, rank p^n - 1
Lattice augmentation_ideal(unsigned long p, long n);

Lattice direct_sum(const Lattice& M, const Lattice& N);
Lattice conjugate(const Lattice& M, const IntMatrix& U);  // action -> U A U^-1

// Seeded random direct sum of catalog lattices conjugated by a random
// unimodular matrix; the recipe keeps the ground-truth decomposition.
struct LatticeRecipe {
    unsigned long p;
    long n;
    std::vector<long> perm_mult;   // multiplicity of Z_p[G/G_i], i = 0..n
    std::vector<long> cyclo_mult;  // multiplicity of Z_p[zeta_{p^i}], i = 1..n

    long total_rank() const;
    // total Z_p-rank of the non-projective summands as lattices over the
    // subgroup of order p^i
    long nonprojective_rank(long i) const;
    // free multiplicity over the subgroup of order p^i
    long free_multiplicity(long i) const;
    CharacterProfile profile() const;
};

struct RandomLattice {
    Lattice lattice;
    LatticeRecipe recipe;
};

RandomLattice random_lattice(unsigned long p, long n, std::uint64_t seed, long max_rank = 12);

// --- invariants ----------------------------------------------------------

// saturated basis of the fixed sublattice under the subgroup of order p^i
IntMatrix fixed_sublattice(const Lattice& M, long i);

CharacterProfile character_profile(const Lattice& M);

struct FreeRankResult {
    long m;  // multiplicity of the maximal free direct summand
    bool witness_found;
    std::vector<std::vector<Int>> witnesses;  // m elements when found
};

// m = rk_p H^0 - rk_p Hhat^0 over the subgroup of order p^i, with a bounded
// search for witnesses whose trace classes are independent mod p
FreeRankResult max_free_rank(const Lattice& M, long i, bool want_witness = true);

// rank(M) - p^i * max_free_rank: the total rank of the non-projective part
// of M as a lattice over the subgroup of order p^i
long c_value(const Lattice& M, long i);

void check_level(const Lattice& M, long i, long lo);  // throws BadLevelError

}  // namespace zplat
