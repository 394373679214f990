#include "modrep.hpp"

#include "endo.hpp"

#include <algorithm>

namespace zplat {

namespace {

void require_exponent_p(const FModule& M, const char* who) {
    if (M.group.exponent_log() > 1)
        throw BadArgumentError(std::string(who) + ": exponent too large (only exponent-p modules)");
}

GMap gmap_of(const FModule& M) {
    GMap g(M.gens(), M.gens());
    for (long i = 0; i < M.gens(); ++i)
        for (long j = 0; j < M.gens(); ++j) g.at(i, j) = M.action.at(i, j).get_ui();
    return g;
}

FpMat jordan_block_fp(unsigned long p, long i) {
    FpMat t = FpMat::identity(i, p);
    for (long k = 0; k + 1 < i; ++k) t.at(k, k + 1) = 1;
    return t;
}

// (T - 1)^e over F_p
FpMat nilpotent_power(const FpMat& t, long e) {
    FpMat n = t.sub(FpMat::identity(t.rows, t.p));
    return n.pow(static_cast<unsigned long>(e));
}

}  // namespace

long JordanPartition::block_count() const {
    long s = 0;
    for (long m : mult) s += m;
    return s;
}

long JordanPartition::dimension() const {
    long s = 0;
    for (std::size_t k = 0; k < mult.size(); ++k) s += static_cast<long>(k + 1) * mult[k];
    return s;
}

JordanPartition jordan_partition(const FModule& M) {
    require_exponent_p(M, "jordan_partition");
    long m = M.gens();
    FpMat t = M.action_mod_p();
    // r_k = rank (T-1)^k; blocks of size >= k: r_{k-1} - r_k
    std::vector<long> r(static_cast<std::size_t>(M.q) + 2, 0);
    r[0] = m;
    FpMat n = t.sub(FpMat::identity(m, M.p));
    FpMat pw = FpMat::identity(m, M.p);
    for (unsigned long k = 1; k <= M.q + 1; ++k) {
        pw = pw.mul(n);
        r[k] = fp_rank(pw);
    }
    if (r[M.q] != 0) throw InternalError("action is not unipotent of index q");
    JordanPartition jp{M.p, M.q, std::vector<long>(M.q, 0)};
    for (unsigned long s = 1; s <= M.q; ++s) {
        long ge_s = r[s - 1] - r[s];
        long ge_s1 = r[s] - r[s + 1];
        jp.mult[s - 1] = ge_s - ge_s1;
    }
    if (jp.dimension() != m) throw InternalError("jordan partition dimension mismatch");
    return jp;
}

long kappa(const FModule& M) {
    require_exponent_p(M, "kappa");
    FpMat n = M.action_mod_p().sub(FpMat::identity(M.gens(), M.p));
    return fp_nullity(n);
}

long min_gens(const FModule& M) {
    // rank of the coinvariants mod p: corank of (action - 1) on M/pM
    FpMat n = M.action_mod_p().sub(FpMat::identity(M.gens(), M.p));
    return M.gens() - fp_rank(n);
}

bool is_isomorphic(const FModule& M, const FModule& N, const Int& cap) {
    if (M.p != N.p || M.q != N.q) return false;
    if (M.group != N.group) return false;
    if (M.gens() == 0) return true;
    if (M.group.order() > cap || N.group.order() > cap)
        throw CapExceededError("is_isomorphic: module order exceeds the cap");

    if (M.group.exponent_log() <= 1) {
        // Jordan type is a complete invariant over (Z/p)[C_q]
        return jordan_partition(M) == jordan_partition(N);
    }
    // with trivial actions any isomorphism of the underlying groups works
    if (endo_equal(M.action, IntMatrix::identity(M.gens()), M.group) &&
        endo_equal(N.action, IntMatrix::identity(N.gens()), N.group))
        return true;

    GroupShape shape(M.group);
    GMap act_m = gmap_of(M), act_n = gmap_of(N);
    HomEnumerator en(shape, shape);
    if (en.overflow() || en.total() > (1ULL << 24))
        throw CapExceededError("is_isomorphic: candidate space exceeds the cap");
    GMap c;
    while (en.next(c)) {
        if (!gmap_invertible(shape, shape, c)) continue;
        if (!gmap_equivariant(shape, act_m, act_n, c)) continue;
        return true;
    }
    return false;
}

FModule jordan_module(unsigned long p, unsigned long q, long i, long a) {
    if (i < 1 || static_cast<unsigned long>(i) > q)
        throw BadArgumentError("jordan block size out of range [1, q]");
    AbelianPGroup g(p, std::vector<long>(static_cast<std::size_t>(i), 1));
    IntMatrix t = IntMatrix::identity(i);
    for (long k = 0; k + 1 < i; ++k) t.at(k, k + 1) = 1;
    return FModule(p, a, q, g, t);
}

long hom_order_modp_exp(long i, long j, unsigned long p) {
    if (i < 1 || j < 1 || static_cast<unsigned long>(i) > p || static_cast<unsigned long>(j) > p)
        throw BadArgumentError("hom index out of range [1, p]");
    long closed = std::min(i, j);

    // explicit computation: nullity of F -> A_j F - F A_i on j x i matrices
    FpMat ai = jordan_block_fp(p, i), aj = jordan_block_fp(p, j);
    long vars = i * j;
    FpMat sys(vars, vars, p);
    for (long r = 0; r < j; ++r)
        for (long c = 0; c < i; ++c) {
            long eq = r * i + c;
            for (long u = 0; u < j; ++u)
                sys.at(eq, u * i + c) = (sys.at(eq, u * i + c) + aj.at(r, u)) % p;
            for (long v = 0; v < i; ++v)
                sys.at(eq, r * i + v) = (sys.at(eq, r * i + v) + p - ai.at(v, c)) % p;
        }
    long direct = fp_nullity(sys);
    if (direct != closed)
        throw InternalError("hom order: closed form and kernel computation disagree");
    return closed;
}

Int hom_order_modp(long i, long j, unsigned long p) {
    return pow_int(p, static_cast<unsigned long>(hom_order_modp_exp(i, j, p)));
}

long ext1_modp(long i, long j, unsigned long p) {
    if (i < 1 || j < 1 || static_cast<unsigned long>(i) > p || static_cast<unsigned long>(j) > p)
        throw BadArgumentError("ext index out of range [1, p]");
    long closed = std::min<long>(static_cast<long>(p) - i, j) - std::max<long>(j - i, 0);

    // resolution route: ... -> Y_p --(X-1)^(p-i)--> Y_p --(X-1)^i--> Y_p -> Y_i -> 0,
    // Hom(-, Y_j) gives multiplication maps on Y_j
    FpMat t = jordan_block_fp(p, j);
    FpMat d1 = nilpotent_power(t, i);
    FpMat d2 = nilpotent_power(t, static_cast<long>(p) - i);
    if (!d2.mul(d1).a.empty() && fp_rank(d2.mul(d1)) != 0)
        throw InternalError("ext resolution is not a complex");
    long dim = fp_nullity(d2) - fp_rank(d1);
    if (dim != closed)
        throw InternalError("ext^1: closed form and resolution computation disagree");
    return closed;
}

AbelianPGroup ext1_modp2(long i, long j, unsigned long p) {
    if (i < 1 || j < 1 || static_cast<unsigned long>(i) > p || static_cast<unsigned long>(j) > p)
        throw BadArgumentError("ext index out of range [1, p]");
    long pl = static_cast<long>(p);

    // R = (Z/p^2)[C_p] with Z-basis 1, X, ..., X^(p-1); X acts as the shift P
    IntMatrix P(pl, pl);
    for (long k = 0; k < pl; ++k) P.at((k + 1) % pl, k) = 1;
    IntMatrix XmI = P.sub(IntMatrix::identity(pl));
    Int p2 = Int(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);

    // free cover: d1 : R^2 -> R, (a, b) |-> a (X-1)^i + b p
    IntMatrix d1 = XmI.pow(static_cast<unsigned long>(i))
                        .hconcat(IntMatrix::identity(pl).scalar_mul(Int(static_cast<unsigned long>(p))));

    // kernel of d1 mod p^2, as a sublattice of Z^(2p) containing p^2 Z^(2p)
    IntMatrix lifted = d1.hconcat(IntMatrix::identity(pl).scalar_mul(p2));
    IntMatrix ker3 = saturated_kernel(lifted);
    IntMatrix K(2 * pl, ker3.cols());
    for (long r = 0; r < 2 * pl; ++r)
        for (long c = 0; c < ker3.cols(); ++c) K.at(r, c) = ker3.at(r, c);
    if (K.cols() != 2 * pl) throw InternalError("kernel lattice has unexpected rank");

    // minimal generators of the kernel as an R-module (Nakayama): lift a
    // basis of K / (p K + (X-1) K)
    IntMatrix bigX = XmI.direct_sum(XmI);
    IntMatrix rad = K.scalar_mul(Int(static_cast<unsigned long>(p))).hconcat(bigX.mul(K));
    FiniteQuotient quot = quotient_invariants(image_basis(rad), K, p);
    long t = quot.group.rank_p();

    // Hom(F_*, Y_j): identify Hom(R^k, Y_j) with Y_j^k
    FpMat tj = jordan_block_fp(p, j);
    auto poly_action = [&](const std::vector<Int>& coeffs) {
        FpMat acc(j, j, p);
        FpMat pw = FpMat::identity(j, p);
        for (long l = 0; l < pl; ++l) {
            Int e;
            mpz_fdiv_r_ui(e.get_mpz_t(), coeffs[static_cast<std::size_t>(l)].get_mpz_t(), p);
            std::uint64_t cl = e.get_ui();
            if (cl)
                for (long r = 0; r < j; ++r)
                    for (long c = 0; c < j; ++c)
                        acc.at(r, c) = (acc.at(r, c) + cl * pw.at(r, c)) % p;
            if (l + 1 < pl) pw = pw.mul(tj);
        }
        return acc;
    };

    // d1*: Y_j -> Y_j^2,  y |-> ((X-1)^i y, p y) with p y = 0
    FpMat d1h(2 * j, j, p);
    FpMat top = nilpotent_power(tj, i);
    for (long r = 0; r < j; ++r)
        for (long c = 0; c < j; ++c) d1h.at(r, c) = top.at(r, c);

    // d2*: Y_j^2 -> Y_j^t, block row s applies the generator (a_s, b_s)
    FpMat d2h(t * j, 2 * j, p);
    for (long s = 0; s < t; ++s) {
        std::vector<Int> gen = quot.generator(s);
        std::vector<Int> a_part(gen.begin(), gen.begin() + pl);
        std::vector<Int> b_part(gen.begin() + pl, gen.end());
        FpMat am = poly_action(a_part), bm = poly_action(b_part);
        for (long r = 0; r < j; ++r)
            for (long c = 0; c < j; ++c) {
                d2h.at(s * j + r, c) = am.at(r, c);
                d2h.at(s * j + r, j + c) = bm.at(r, c);
            }
    }

    if (fp_rank(d2h.mul(d1h)) != 0) throw InternalError("modp2 presentation is not a complex");
    long dim = fp_nullity(d2h) - fp_rank(d1h);
    if (dim < 0) throw InternalError("negative ext dimension");
    if (static_cast<unsigned long>(dim) > p)
        throw InternalError("ext over Z/p^2 exceeds the p^p bound");
    if (i == pl && dim != j)
        throw InternalError("ext(Y_p, Y_j) over Z/p^2 is not of order p^j");
    return AbelianPGroup(p, std::vector<long>(static_cast<std::size_t>(dim), 1));
}

long indecomposable_count_modp(unsigned long p, unsigned long q) {
    if (p_adic_log(Int(q), p) < 0) throw BadArgumentError("q must be a power of p");
    if (q <= 9) {
        // exhaustive check: the blocks Y_1..Y_q exist, are indecomposable and
        // pairwise distinct, and no block can exceed the nilpotency index q
        std::vector<JordanPartition> seen;
        for (unsigned long m = 1; m <= q; ++m) {
            FModule y = jordan_module(p, q, static_cast<long>(m));
            if (kappa(y) != 1) throw InternalError("jordan block is decomposable");
            JordanPartition jp = jordan_partition(y);
            for (const auto& s : seen)
                if (s == jp) throw InternalError("jordan blocks collide");
            seen.push_back(jp);
        }
        // the regular module is the single largest block
        FModule reg = jordan_module(p, q, static_cast<long>(q));
        JordanPartition jp = jordan_partition(reg);
        if (jp.mult.back() != 1 || jp.block_count() != 1)
            throw InternalError("regular module is not one block of size q");
    }
    return static_cast<long>(q);
}

RandomFModule random_fmodule(unsigned long p, unsigned long q, std::uint64_t seed, long max_dim) {
    Rng64 rng(seed);
    std::vector<long> mult(q, 0);
    long dim = 0;
    for (long t = 0; t < 2 * max_dim; ++t) {
        long part = static_cast<long>(rng.below(q)) + 1;
        if (dim + part > max_dim) continue;
        ++mult[static_cast<std::size_t>(part - 1)];
        dim += part;
    }
    if (dim == 0) {
        ++mult[0];
        dim = 1;
    }
    FpMat block(0, 0, p);
    for (unsigned long s = q; s >= 1; --s)
        for (long c = 0; c < mult[static_cast<std::size_t>(s - 1)]; ++c) {
            FpMat nb(block.rows + static_cast<long>(s), block.cols + static_cast<long>(s), p);
            for (long i = 0; i < block.rows; ++i)
                for (long j = 0; j < block.cols; ++j) nb.at(i, j) = block.at(i, j);
            FpMat jb = jordan_block_fp(p, static_cast<long>(s));
            for (long i = 0; i < jb.rows; ++i)
                for (long j = 0; j < jb.cols; ++j) nb.at(block.rows + i, block.cols + j) = jb.at(i, j);
            block = nb;
        }
    // conjugate by a random invertible matrix
    FpMat g(dim, dim, p);
    do {
        for (auto& x : g.a) x = rng.below(p);
    } while (!fp_invertible(g));
    // inverse by augmented elimination
    FpMat aug(dim, 2 * dim, p);
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) aug.at(i, j) = g.at(i, j);
        aug.at(i, dim + i) = 1;
    }
    long rank = 0;
    for (long col = 0; col < dim; ++col) {
        long piv = -1;
        for (long i = rank; i < dim; ++i)
            if (aug.at(i, col)) { piv = i; break; }
        for (long j = 0; j < 2 * dim; ++j) std::swap(aug.at(rank, j), aug.at(piv, j));
        std::uint64_t inv = fp_inv(aug.at(rank, col), p);
        for (long j = 0; j < 2 * dim; ++j) aug.at(rank, j) = aug.at(rank, j) * inv % p;
        for (long i = 0; i < dim; ++i) {
            if (i == rank || !aug.at(i, col)) continue;
            std::uint64_t f = aug.at(i, col);
            for (long j = 0; j < 2 * dim; ++j)
                aug.at(i, j) = (aug.at(i, j) + (p - f) * aug.at(rank, j)) % p;
        }
        ++rank;
    }
    FpMat ginv(dim, dim, p);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) ginv.at(i, j) = aug.at(i, dim + j);
    FpMat conj = g.mul(block).mul(ginv);

    IntMatrix act(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) act.at(i, j) = conj.at(i, j);
    AbelianPGroup grp(p, std::vector<long>(static_cast<std::size_t>(dim), 1));
    RandomFModule out{FModule(p, 1, q, grp, act), JordanPartition{p, q, mult}};
    return out;
}

}  // namespace zplat
