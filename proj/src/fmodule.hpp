#pragma once

#include "abelian.hpp"
#include "fpmat.hpp"

#include <string>
#include <vector>

namespace zplat {

// Finite module over (Z/p^a)[C_q]: an abelian p-group in canonical
// coordinates together with the generator action matrix.  Entry (i,j) of the
// action is stored reduced into [0, p^{e_i}).
struct FModule {
    unsigned long p = 3;
    long a = 1;          // coefficient ring Z/p^a
    unsigned long q = 1; // order of the acting cyclic group (a power of p)
    AbelianPGroup group;
    IntMatrix action;    // m x m in canonical coordinates

    FModule() = default;
    FModule(unsigned long p_, long a_, unsigned long q_, AbelianPGroup group_, IntMatrix action_);

    long gens() const { return group.rank_p(); }
    Int row_modulus(long i) const {
        return pow_int(p, static_cast<unsigned long>(group.exponents[static_cast<std::size_t>(i)]));
    }

    static FModule trivial(unsigned long p, long a, unsigned long q) {
        return FModule(p, a, q, AbelianPGroup(p, {}), IntMatrix(0, 0));
    }

    // action on M/pM as an F_p matrix
    FpMat action_mod_p() const;

    bool operator==(const FModule& o) const {
        return p == o.p && a == o.a && q == o.q && group == o.group && action == o.action;
    }

    std::string to_string() const;
};

// Entrywise reduction of a matrix whose row i lives mod p^{e_i}.
IntMatrix reduce_rows(const IntMatrix& m, const AbelianPGroup& target);

// Endomorphism congruence: x == y as maps into the canonical group.
bool endo_equal(const IntMatrix& x, const IntMatrix& y, const AbelianPGroup& target);

// Is `m` a well-defined homomorphism from `source` to `target` coordinates?
bool hom_well_defined(const IntMatrix& m, const AbelianPGroup& source, const AbelianPGroup& target);

// Homomorphism of finite modules given by a matrix in canonical coordinates
// (target gens x source gens).
struct ModuleMap {
    FModule source, target;
    IntMatrix matrix;

    ModuleMap() = default;
    ModuleMap(FModule src, FModule tgt, IntMatrix m);

    bool is_equivariant() const;
    ModuleMap compose(const ModuleMap& inner) const;  // this after inner
    static ModuleMap zero(const FModule& src, const FModule& tgt) {
        return ModuleMap(src, tgt, IntMatrix(tgt.gens(), src.gens()));
    }
};

// The module map given by multiplication with a scalar.
IntMatrix scalar_endo(const FModule& m, const Int& c);

}  // namespace zplat
