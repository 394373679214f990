#pragma once

#include "fmodule.hpp"

#include <cstdint>
#include <vector>

namespace zplat {

// Jordan block multiplicities of an exponent-p module over (Z/p)[C_q]:
// entry k-1 is the multiplicity of the block of dimension k, k = 1..q.
struct JordanPartition {
    unsigned long p;
    unsigned long q;
    std::vector<long> mult;  // length q

    long block_count() const;
    long dimension() const;
    bool operator==(const JordanPartition& o) const {
        return p == o.p && q == o.q && mult == o.mult;
    }
};

// Block multiplicities via ranks of (action - 1)^k.  Requires exponent p
// (coefficient level 1); otherwise throws BadArgumentError.
JordanPartition jordan_partition(const FModule& M);

// Number of indecomposable direct summands of an exponent-p module over a
// cyclic p-group: the dimension of the fixed subspace.
long kappa(const FModule& M);

// Minimal number of generators as a module over the group ring, computed
// from the coinvariants reduced mod p.
long min_gens(const FModule& M);

// Decides module isomorphism.  Prefilters by abelian invariants (and the
// Jordan type when the exponent is p, where the type is complete); otherwise
// runs a bounded search over equivariant bijections.  Throws
// CapExceededError instead of guessing beyond the cap.
bool is_isomorphic(const FModule& M, const FModule& N, const Int& cap);

// The indecomposable (Z/p)[C_q]-module of dimension i (Jordan block), viewed
// with coefficient level a.
FModule jordan_module(unsigned long p, unsigned long q, long i, long a = 1);

// |Hom over (Z/p)[C_p] between Jordan blocks of sizes i and j| as a p-power
// exponent, computed by the closed form p^min(i,j) AND by explicit kernel
// computation; the two must agree.
long hom_order_modp_exp(long i, long j, unsigned long p);
Int hom_order_modp(long i, long j, unsigned long p);

// dim Ext^1 over (Z/p)[C_p] between Jordan blocks, by the closed form
// min(p-i, j) - max(j-i, 0) AND by the two-step projective resolution of the
// source; the two must agree.
long ext1_modp(long i, long j, unsigned long p);

// Full Ext^1 over (Z/p^2)[C_p] from an explicit projective presentation
// (free cover, kernel, free cover of the kernel), Hom into the target and
// homology.  The result is elementary abelian.
AbelianPGroup ext1_modp2(long i, long j, unsigned long p);

// Number of non-isomorphic indecomposables over (Z/p)[C_q]; verified
// exhaustively for q <= 9.
long indecomposable_count_modp(unsigned long p, unsigned long q);

// Seeded random exponent-p module over (Z/p)[C_q] together with its known
// Jordan type (a random type conjugated by a random invertible matrix).
struct RandomFModule {
    FModule mod;
    JordanPartition type;
};
RandomFModule random_fmodule(unsigned long p, unsigned long q, std::uint64_t seed, long max_dim = 8);

}  // namespace zplat
