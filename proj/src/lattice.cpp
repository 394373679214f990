#include "lattice.hpp"

#include "fpmat.hpp"

#include <sstream>

namespace zplat {

namespace {

unsigned long checked_p_power(unsigned long p, long e) {
    unsigned long v = 1;
    for (long k = 0; k < e; ++k) {
        if (v > (1UL << 24)) throw BadArgumentError("group order p^n is too large");
        v *= p;
    }
    return v;
}

}  // namespace

long euler_phi_p_power(unsigned long p, long k) {
    if (k == 0) return 1;
    return static_cast<long>((p - 1) * checked_p_power(p, k - 1));
}

Lattice::Lattice(unsigned long p_, long n_, IntMatrix action_, std::string label_)
    : p(p_), n(n_), rank(action_.rows()), action(std::move(action_)), label(std::move(label_)) {
    if (!is_odd_prime(p)) throw ValidationError("p must be an odd prime");
    if (n < 1) throw ValidationError("level n must be at least 1");
    if (action.rows() != action.cols()) throw ValidationError("action matrix must be square");
    unsigned long order = checked_p_power(p, n);
    if (!action.pow(order).is_identity())
        throw ValidationError("action matrix does not have order dividing p^n");
}

IntMatrix Lattice::subgroup_generator(long i) const {
    if (i < 0 || i > n) throw BadLevelError("subgroup level out of range");
    return action.pow(checked_p_power(p, n - i));
}

IntMatrix Lattice::norm_matrix(long i) const {
    if (i < 0 || i > n) throw BadLevelError("subgroup level out of range");
    IntMatrix s = subgroup_generator(i);
    unsigned long count = checked_p_power(p, i);
    IntMatrix acc = IntMatrix::zero(rank, rank);
    IntMatrix power = IntMatrix::identity(rank);
    for (unsigned long l = 0; l < count; ++l) {
        acc = acc.add(power);
        if (l + 1 < count) power = power.mul(s);
    }
    return acc;
}

IntMatrix Lattice::relative_norm_matrix(long i) const {
    if (i < 0 || i + 1 > n) throw BadLevelError("relative norm level out of range");
    IntMatrix s = subgroup_generator(i + 1);
    IntMatrix acc = IntMatrix::zero(rank, rank);
    IntMatrix power = IntMatrix::identity(rank);
    for (unsigned long l = 0; l < p; ++l) {
        acc = acc.add(power);
        if (l + 1 < p) power = power.mul(s);
    }
    return acc;
}

std::string CharacterProfile::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) os << ",";
        os << m[k];
    }
    os << ")";
    return os.str();
}

void check_level(const Lattice& M, long i, long lo) {
    if (i < lo || i > M.n)
        throw BadLevelError("level " + std::to_string(i) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(M.n) + "]");
}

Lattice permutation_lattice(unsigned long p, long n, long i) {
    if (i < 0 || i > n) throw BadLevelError("permutation lattice level out of range");
    long q = static_cast<long>(checked_p_power(p, n - i));
    IntMatrix a(q, q);
    for (long k = 0; k < q; ++k) a.at((k + 1) % q, k) = 1;
    std::ostringstream lab;
    lab << "perm(p=" << p << ",n=" << n << ",i=" << i << ")";
    return Lattice(p, n, std::move(a), lab.str());
}

Lattice cyclotomic_lattice(unsigned long p, long n, long i) {
    if (i < 1 || i > n) throw BadLevelError("cyclotomic lattice level out of range");
    long step = static_cast<long>(checked_p_power(p, i - 1));
    long d = static_cast<long>(p - 1) * step;  // degree of the p^i-th cyclotomic polynomial
    IntMatrix a(d, d);
    for (long k = 0; k + 1 < d; ++k) a.at(k + 1, k) = 1;
    // last column: minus the lower coefficients of 1 + X^step + ... + X^((p-1)step)
    for (unsigned long l = 0; l + 1 < p; ++l) a.at(static_cast<long>(l) * step, d - 1) = -1;
    std::ostringstream lab;
    lab << "cyclo(p=" << p << ",n=" << n << ",i=" << i << ")";
    return Lattice(p, n, std::move(a), lab.str());
}

Lattice augmentation_ideal(unsigned long p, long n) {
    long q = static_cast<long>(checked_p_power(p, n));
    long r = q - 1;  // basis sigma^j - 1, j = 1..q-1
    IntMatrix a(r, r);
    for (long j = 1; j <= r; ++j) {
        if (j + 1 <= r) a.at(j, j - 1) = 1;  // sigma^(j+1) - 1
        a.at(0, j - 1) -= 1;                 // minus (sigma - 1)
    }
    std::ostringstream lab;
    lab << "aug(p=" << p << ",n=" << n << ")";
    return Lattice(p, n, std::move(a), lab.str());
}

Lattice direct_sum(const Lattice& M, const Lattice& N) {
    if (M.p != N.p || M.n != N.n)
        throw BadArgumentError("mixed group: direct summands must share (p, n)");
    return Lattice(M.p, M.n, M.action.direct_sum(N.action), M.label + " + " + N.label);
}

Lattice conjugate(const Lattice& M, const IntMatrix& U) {
    if (U.rows() != M.rank || U.cols() != M.rank)
        throw BadArgumentError("conjugating matrix has wrong shape");
    if (!is_unimodular(U)) throw ValidationError("conjugating matrix is not unimodular");
    IntMatrix Uinv = unimodular_inverse(U);
    return Lattice(M.p, M.n, U.mul(M.action).mul(Uinv), M.label);
}

long LatticeRecipe::total_rank() const {
    long r = 0;
    for (long i = 0; i <= n; ++i)
        r += perm_mult[static_cast<std::size_t>(i)] *
             static_cast<long>(checked_p_power(p, n - i));
    for (long i = 1; i <= n; ++i)
        r += cyclo_mult[static_cast<std::size_t>(i - 1)] * euler_phi_p_power(p, i);
    return r;
}

long LatticeRecipe::nonprojective_rank(long i) const {
    if (i < 1 || i > n) throw BadLevelError("recipe level out of range");
    // Z_p[G] restricted to any subgroup stays free; every other catalog
    // summand restricts to a sum of non-projective indecomposables.
    return total_rank() - perm_mult[0] * static_cast<long>(checked_p_power(p, n));
}

long LatticeRecipe::free_multiplicity(long i) const {
    if (i < 1 || i > n) throw BadLevelError("recipe level out of range");
    return perm_mult[0] * static_cast<long>(checked_p_power(p, n - i));
}

CharacterProfile LatticeRecipe::profile() const {
    CharacterProfile cp{p, n, std::vector<long>(static_cast<std::size_t>(n + 1), 0)};
    for (long i = 0; i <= n; ++i)
        for (long k = i; k <= n; ++k)
            cp.m[static_cast<std::size_t>(k)] += perm_mult[static_cast<std::size_t>(i)];
    for (long i = 1; i <= n; ++i)
        cp.m[static_cast<std::size_t>(n - i)] += cyclo_mult[static_cast<std::size_t>(i - 1)];
    return cp;
}

RandomLattice random_lattice(unsigned long p, long n, std::uint64_t seed, long max_rank) {
    if (!is_odd_prime(p)) throw BadArgumentError("p must be an odd prime");
    if (n < 1) throw BadArgumentError("n must be at least 1");
    if (max_rank < 1) throw BadArgumentError("max_rank must be positive");
    Rng64 rng(seed);

    LatticeRecipe recipe{p, n, std::vector<long>(static_cast<std::size_t>(n + 1), 0),
                         std::vector<long>(static_cast<std::size_t>(n), 0)};
    long total = 0;
    long attempts = 2 * max_rank + 4;
    for (long t = 0; t < attempts; ++t) {
        std::uint64_t pick = rng.below(static_cast<std::uint64_t>(2 * n + 1));
        long r;
        if (pick <= static_cast<std::uint64_t>(n))
            r = static_cast<long>(checked_p_power(p, n - static_cast<long>(pick)));
        else
            r = euler_phi_p_power(p, static_cast<long>(pick) - n);
        if (total + r > max_rank) continue;
        total += r;
        if (pick <= static_cast<std::uint64_t>(n))
            ++recipe.perm_mult[static_cast<std::size_t>(pick)];
        else
            ++recipe.cyclo_mult[static_cast<std::size_t>(pick - static_cast<std::uint64_t>(n) - 1)];
    }
    if (total == 0) {
        ++recipe.perm_mult[static_cast<std::size_t>(n)];  // trivial lattice always fits
        total = 1;
    }

    IntMatrix a(0, 0);
    for (long i = 0; i <= n; ++i)
        for (long c = 0; c < recipe.perm_mult[static_cast<std::size_t>(i)]; ++c)
            a = a.direct_sum(permutation_lattice(p, n, i).action);
    for (long i = 1; i <= n; ++i)
        for (long c = 0; c < recipe.cyclo_mult[static_cast<std::size_t>(i - 1)]; ++c)
            a = a.direct_sum(cyclotomic_lattice(p, n, i).action);

    long r = a.rows();
    IntMatrix U = IntMatrix::identity(r);
    IntMatrix Uinv = IntMatrix::identity(r);
    long ops = 3 * r;
    for (long t = 0; t < ops && r > 1; ++t) {
        long i = static_cast<long>(rng.below(static_cast<std::uint64_t>(r)));
        long j = static_cast<long>(rng.below(static_cast<std::uint64_t>(r)));
        if (i == j) continue;
        long c = static_cast<long>(rng.below(4)) - 2;  // in {-2,-1,0,1}
        if (c == 0) c = 2;
        // U <- E U (row i += c row j), Uinv <- Uinv E^-1 (col j -= c col i)
        for (long k = 0; k < r; ++k) U.at(i, k) += c * U.at(j, k);
        for (long k = 0; k < r; ++k) Uinv.at(k, j) -= c * Uinv.at(k, i);
    }

    std::ostringstream lab;
    lab << "random(p=" << p << ",n=" << n << ",seed=" << seed << ")";
    Lattice L(p, n, U.mul(a).mul(Uinv), lab.str());
    return RandomLattice{std::move(L), std::move(recipe)};
}

IntMatrix fixed_sublattice(const Lattice& M, long i) {
    check_level(M, i, 1);
    return saturated_kernel(M.subgroup_generator(i).sub(IntMatrix::identity(M.rank)));
}

CharacterProfile character_profile(const Lattice& M) {
    CharacterProfile cp{M.p, M.n, std::vector<long>(static_cast<std::size_t>(M.n + 1), 0)};
    long total = 0;
    for (long k = 0; k <= M.n; ++k) {
        long j = M.n - k;  // character order p^j
        IntMatrix val;
        if (j == 0) {
            val = M.action.sub(IntMatrix::identity(M.rank));
        } else {
            // p^j-th cyclotomic polynomial evaluated at the action matrix
            unsigned long step = checked_p_power(M.p, j - 1);
            IntMatrix acc = IntMatrix::zero(M.rank, M.rank);
            for (unsigned long l = 0; l < M.p; ++l) acc = acc.add(M.action.pow(l * step));
            val = acc;
        }
        long kr = saturated_kernel(val).cols();
        long phi = euler_phi_p_power(M.p, j);
        if (kr % phi != 0)
            throw InternalError("character component rank is not divisible by phi");
        cp.m[static_cast<std::size_t>(k)] = kr / phi;
        total += kr;
    }
    if (total != M.rank)
        throw InternalError("character profile does not add up to the rank");
    return cp;
}

FreeRankResult max_free_rank(const Lattice& M, long i, bool want_witness) {
    check_level(M, i, 1);
    IntMatrix fixed = fixed_sublattice(M, i);
    long rk_h0 = fixed.cols();

    long rk_hhat0 = 0;
    if (rk_h0 > 0) {
        IntMatrix norm_image = image_basis(M.norm_matrix(i));
        FiniteQuotient q = quotient_invariants(norm_image, fixed, M.p);
        rk_hhat0 = q.group.rank_p();
    }
    FreeRankResult res;
    res.m = rk_h0 - rk_hhat0;
    res.witness_found = res.m == 0;

    if (want_witness && res.m > 0) {
        SmithDecomposition fsnf = smith_normal_form(fixed);
        IntMatrix norm = M.norm_matrix(i);
        FpMat span(static_cast<long>(res.m), rk_h0, M.p);
        long have = 0;
        auto try_candidate = [&](const std::vector<Int>& x) {
            if (have == res.m) return;
            IntMatrix c = solve_exact(fsnf, fixed.rows(), fixed.cols(),
                                      from_vector(norm.apply(x)));
            FpMat trial(have + 1, rk_h0, M.p);
            for (long r = 0; r < have; ++r)
                for (long j = 0; j < rk_h0; ++j) trial.at(r, j) = span.at(r, j);
            for (long j = 0; j < rk_h0; ++j) {
                Int e;
                mpz_fdiv_r_ui(e.get_mpz_t(), c.at(j, 0).get_mpz_t(), M.p);
                trial.at(have, j) = e.get_ui();
            }
            if (fp_rank(trial) == have + 1) {
                for (long j = 0; j < rk_h0; ++j) span.at(have, j) = trial.at(have, j);
                ++have;
                res.witnesses.push_back(x);
            }
        };
        std::vector<Int> x(static_cast<std::size_t>(M.rank), 0);
        for (long a = 0; a < M.rank && have < res.m; ++a) {
            x.assign(static_cast<std::size_t>(M.rank), 0);
            x[static_cast<std::size_t>(a)] = 1;
            try_candidate(x);
        }
        for (long a = 0; a < M.rank && have < res.m; ++a)
            for (long b = 0; b < M.rank && have < res.m; ++b) {
                if (a == b) continue;
                for (unsigned long c = 1; c < M.p && have < res.m; ++c) {
                    x.assign(static_cast<std::size_t>(M.rank), 0);
                    x[static_cast<std::size_t>(a)] = 1;
                    x[static_cast<std::size_t>(b)] = static_cast<long>(c);
                    try_candidate(x);
                }
            }
        res.witness_found = have == res.m;
        if (!res.witness_found) res.witnesses.clear();
    }
    return res;
}

long c_value(const Lattice& M, long i) {
    check_level(M, i, 1);
    FreeRankResult fr = max_free_rank(M, i, /*want_witness=*/false);
    return M.rank - static_cast<long>(checked_p_power(M.p, i)) * fr.m;
}

}  // namespace zplat
