#include "tate.hpp"

namespace zplat {

namespace {

unsigned long p_power(unsigned long p, long e) {
    unsigned long v = 1;
    for (long k = 0; k < e; ++k) v *= p;
    return v;
}

// Builds the finite module carried by a quotient, with the action induced by
// `op` (a rank x rank integer matrix commuting with the quotient data).
FModule induced_module(const Lattice& M, long level, const FiniteQuotient& q,
                       const IntMatrix& op) {
    long m = q.group.rank_p();
    IntMatrix act(m, m);
    for (long j = 0; j < m; ++j) {
        std::vector<Int> image = op.apply(q.generator(j));
        std::vector<Int> c = q.coords(image);
        for (long i = 0; i < m; ++i) act.at(i, j) = c[static_cast<std::size_t>(i)];
    }
    FModule mod(M.p, level, p_power(M.p, M.n - level), q.group, act);
    if (mod.group.exponent_log() > level)
        throw InternalError("cohomology exponent exceeds p^level");
    return mod;
}

void assert_subgroup_acts_trivially(const Lattice& M, long i, const TateGroup& t) {
    IntMatrix s = M.subgroup_generator(i);
    for (long j = 0; j < t.mod.gens(); ++j) {
        std::vector<Int> g = t.coords.generator(j);
        std::vector<Int> moved = s.apply(g);
        std::vector<Int> c = t.coords.coords(moved);
        for (long r = 0; r < t.mod.gens(); ++r) {
            Int expect = r == j ? 1 : 0;
            Int diff = c[static_cast<std::size_t>(r)] - expect;
            Int mod = t.mod.row_modulus(r);
            if (!mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t()))
                throw InternalError("subgroup does not act trivially on its own H^1");
        }
    }
}

}  // namespace

TateGroup h1(const Lattice& M, long i) {
    check_level(M, i, 1);
    IntMatrix norm = M.norm_matrix(i);
    IntMatrix kernel = saturated_kernel(norm);
    IntMatrix moved = M.subgroup_generator(i).sub(IntMatrix::identity(M.rank));
    IntMatrix img = image_basis(moved);

    TateGroup t;
    t.coords = quotient_invariants(img, kernel, M.p);
    t.mod = induced_module(M, i, t.coords, M.action);
    assert_subgroup_acts_trivially(M, i, t);
    return t;
}

TateGroup h0_hat(const Lattice& M, long i) {
    check_level(M, i, 1);
    IntMatrix fixed = fixed_sublattice(M, i);
    IntMatrix img = image_basis(M.norm_matrix(i));

    TateGroup t;
    t.coords = quotient_invariants(img, fixed, M.p);
    t.mod = induced_module(M, i, t.coords, M.action);
    return t;
}

IntMatrix relative_norm_endo(const FModule& m, unsigned long p, long n, long i) {
    // N_{level i+1 / level i} acts on a level-i module through T^(p^(n-i-1))
    IntMatrix step = m.action.pow(p_power(p, n - i - 1));
    IntMatrix acc = IntMatrix::zero(m.gens(), m.gens());
    IntMatrix pw = IntMatrix::identity(m.gens());
    for (unsigned long l = 0; l < p; ++l) {
        acc = acc.add(pw);
        if (l + 1 < p) pw = reduce_rows(pw.mul(step), m.group);
    }
    return reduce_rows(acc, m.group);
}

ModuleMap cores_map_between(const Lattice&, long, const TateGroup& lo, const TateGroup& hi) {
    long rows = hi.mod.gens(), cols = lo.mod.gens();
    IntMatrix mat(rows, cols);
    for (long j = 0; j < cols; ++j) {
        std::vector<Int> c = hi.coords.coords(lo.coords.generator(j));
        for (long r = 0; r < rows; ++r) mat.at(r, j) = c[static_cast<std::size_t>(r)];
    }
    ModuleMap map(lo.mod, hi.mod, mat);
    if (!map.is_equivariant()) throw InternalError("corestriction is not equivariant");
    return map;
}

ModuleMap res_map_between(const Lattice& M, long i, const TateGroup& hi, const TateGroup& lo) {
    IntMatrix relnorm = M.relative_norm_matrix(i);
    long rows = lo.mod.gens(), cols = hi.mod.gens();
    IntMatrix mat(rows, cols);
    for (long j = 0; j < cols; ++j) {
        std::vector<Int> c = lo.coords.coords(relnorm.apply(hi.coords.generator(j)));
        for (long r = 0; r < rows; ++r) mat.at(r, j) = c[static_cast<std::size_t>(r)];
    }
    ModuleMap map(hi.mod, lo.mod, mat);
    if (!map.is_equivariant()) throw InternalError("restriction is not equivariant");
    return map;
}

ModuleMap cores_map(const Lattice& M, long i) {
    check_level(M, i, 1);
    if (i + 1 > M.n) throw BadLevelError("corestriction needs level i+1 <= n");
    TateGroup lo = h1(M, i), hi = h1(M, i + 1);
    return cores_map_between(M, i, lo, hi);
}

ModuleMap res_map(const Lattice& M, long i) {
    check_level(M, i, 1);
    if (i + 1 > M.n) throw BadLevelError("restriction needs level i+1 <= n");
    TateGroup lo = h1(M, i), hi = h1(M, i + 1);
    return res_map_between(M, i, hi, lo);
}

}  // namespace zplat
