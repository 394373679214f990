#pragma once

#include "fmodule.hpp"
#include "lattice.hpp"

namespace zplat {

// A Tate cohomology group of a lattice in canonical quotient coordinates,
// with the data needed to map integer vectors of the defining kernel into
// those coordinates.
struct TateGroup {
    FModule mod;
    FiniteQuotient coords;
};

// H^1 of the subgroup of order p^i acting on M, computed in the model
// ker(N_i) / (sigma_i - 1) M with the induced generator action.  The acting
// quotient group has order p^(n-i) and the coefficient level is a = i.
TateGroup h1(const Lattice& M, long i);

// Hhat^0 = M^{G_i} / N_i M with the induced action.
TateGroup h0_hat(const Lattice& M, long i);

// Corestriction H^1(level i) -> H^1(level i+1), induced by the inclusion
// ker N_i into ker N_{i+1}.  1 <= i <= n-1.
ModuleMap cores_map(const Lattice& M, long i);

// Restriction H^1(level i+1) -> H^1(level i), induced by the relative norm.
ModuleMap res_map(const Lattice& M, long i);

// The same maps expressed against already-computed cohomology (so that one
// consistent coordinate choice is shared by a whole diagram).
ModuleMap cores_map_between(const Lattice& M, long i, const TateGroup& lo, const TateGroup& hi);
ModuleMap res_map_between(const Lattice& M, long i, const TateGroup& hi, const TateGroup& lo);

// The endomorphism of h1(M, i) given by the relative norm of level i+1 over
// level i (the composite that beta after alpha must equal).
IntMatrix relative_norm_endo(const FModule& m, unsigned long p, long n, long i);

}  // namespace zplat
