#include "bounds.hpp"

#include "endo.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace zplat {

namespace {

std::uint64_t u_pow(std::uint64_t b, long e) {
    std::uint64_t v = 1;
    for (long k = 0; k < e; ++k) v *= b;
    return v;
}

GMap gmap_pow_int(const GroupShape& s, const GMap& x, const Int& e) {
    GMap result = GMap::identity(x.rows);
    GMap base = x;
    mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t k = 0; k < bits; ++k) {
        if (mpz_tstbit(e.get_mpz_t(), k)) result = gmap_mul(s.mod, result, base);
        if (k + 1 < bits) base = gmap_mul(s.mod, base, base);
    }
    return result;
}

std::uint64_t pow_mod_u(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::uint64_t primitive_root_mod(std::uint64_t p, long e) {
    std::uint64_t m = u_pow(p, e);
    std::uint64_t order = m / p * (p - 1);
    std::vector<std::uint64_t> primes;
    std::uint64_t rest = order;
    for (std::uint64_t q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        primes.push_back(q);
        while (rest % q == 0) rest /= q;
    }
    if (rest > 1) primes.push_back(rest);
    for (std::uint64_t g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (std::uint64_t q : primes)
            if (pow_mod_u(g, order / q, m) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw InternalError("no primitive root found");
}

std::uint64_t unit_inverse(std::uint64_t x, std::uint64_t m) {
    // m is a prime power, x a unit; brute force is fine at these sizes
    for (std::uint64_t y = 1; y < m; ++y)
        if (x * y % m == 1) return y;
    throw InternalError("unit has no inverse");
}

// generating set of Aut(A) together with inverses
void automorphism_generators(const GroupShape& s, std::vector<GMap>& gens,
                             std::vector<GMap>& invs) {
    long m = s.rank();
    if (m == 0) return;
    // diagonal primitive units
    for (long i = 0; i < m; ++i) {
        if (s.mod[static_cast<std::size_t>(i)] == 1) continue;
        std::uint64_t r = primitive_root_mod(s.p, s.exps[static_cast<std::size_t>(i)]);
        GMap g = GMap::identity(m), gi = GMap::identity(m);
        g.at(i, i) = r;
        gi.at(i, i) = unit_inverse(r, s.mod[static_cast<std::size_t>(i)]);
        gens.push_back(g);
        invs.push_back(gi);
    }
    // transvections with the minimal allowed off-diagonal entry
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            if (i == j) continue;
            long gap = std::max<long>(s.exps[static_cast<std::size_t>(i)] -
                                          s.exps[static_cast<std::size_t>(j)],
                                      0);
            std::uint64_t c = u_pow(s.p, gap);
            std::uint64_t mod_i = s.mod[static_cast<std::size_t>(i)];
            if (c % mod_i == 0) continue;  // the only allowed entry is 0
            GMap g = GMap::identity(m), gi = GMap::identity(m);
            g.at(i, j) = c % mod_i;
            gi.at(i, j) = (mod_i - c % mod_i) % mod_i;
            gens.push_back(g);
            invs.push_back(gi);
        }
    // transpositions of equal-exponent coordinates
    for (long i = 0; i + 1 < m; ++i) {
        if (s.exps[static_cast<std::size_t>(i)] != s.exps[static_cast<std::size_t>(i + 1)])
            continue;
        GMap g = GMap::identity(m);
        g.at(i, i) = 0;
        g.at(i + 1, i + 1) = 0;
        g.at(i, i + 1) = 1;
        g.at(i + 1, i) = 1;
        gens.push_back(g);
        invs.push_back(g);
    }
}

// all automorphisms T with T^order_divides = 1
std::vector<GMap> bounded_order_automorphisms(const GroupShape& s, const Int& order_divides,
                                              std::uint64_t budget) {
    HomEnumerator en(s, s);
    if (en.overflow() || en.total() > budget)
        throw CapExceededError("automorphism enumeration exceeds the budget");
    std::vector<GMap> out;
    GMap t;
    while (en.next(t)) {
        if (!gmap_invertible(s, s, t)) continue;
        if (!gmap_is_identity(s, gmap_pow_int(s, t, order_divides))) continue;
        out.push_back(t);
    }
    return out;
}

void check_group_cap(const AbelianPGroup& A) {
    if (A.order() > pow_int(A.p, 4))
        throw CapExceededError("automorphism brute force is capped at |A| <= p^4");
}

}  // namespace

Int thm_a_bound(const Int& order_g, const Int& order_p, long rk_cl, long s_f) {
    if (order_g < 1 || order_p < 1) throw BadArgumentError("group orders must be positive");
    if (rk_cl < 0 || s_f < 0) throw BadArgumentError("counts must be nonnegative");
    if (!mpz_divisible_p(order_g.get_mpz_t(), order_p.get_mpz_t()))
        throw BadArgumentError("|P| must divide |G|");
    return Int(3) * order_g * order_p * order_p * (Int(rk_cl) + Int(s_f));
}

long conjugacy_classes_of_bounded_order(const AbelianPGroup& A, const Int& order_divides,
                                        std::uint64_t endo_budget) {
    if (order_divides < 1) throw BadArgumentError("order bound must be positive");
    if (A.trivial()) return 1;
    check_group_cap(A);
    GroupShape s(A);
    std::vector<GMap> q = bounded_order_automorphisms(s, order_divides, endo_budget);

    std::vector<GMap> gens, invs;
    automorphism_generators(s, gens, invs);

    std::map<std::vector<std::uint64_t>, long> index;
    for (std::size_t k = 0; k < q.size(); ++k) index[q[k].a] = static_cast<long>(k);
    std::vector<bool> visited(q.size(), false);

    long classes = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (visited[k]) continue;
        ++classes;
        std::vector<long> stack{static_cast<long>(k)};
        visited[k] = true;
        while (!stack.empty()) {
            long cur = stack.back();
            stack.pop_back();
            for (std::size_t g = 0; g < gens.size(); ++g) {
                GMap conj = gmap_mul(s.mod, gmap_mul(s.mod, gens[g], q[static_cast<std::size_t>(cur)]),
                                     invs[g]);
                auto it = index.find(conj.a);
                if (it == index.end())
                    throw InternalError("conjugate left the bounded-order set");
                if (!visited[static_cast<std::size_t>(it->second)]) {
                    visited[static_cast<std::size_t>(it->second)] = true;
                    stack.push_back(it->second);
                }
            }
        }
    }
    return classes;
}

long conjugacy_classes_reference(const AbelianPGroup& A, const Int& order_divides,
                                 std::uint64_t aut_budget) {
    if (order_divides < 1) throw BadArgumentError("order bound must be positive");
    if (A.trivial()) return 1;
    check_group_cap(A);
    GroupShape s(A);

    HomEnumerator en(s, s);
    if (en.overflow() || en.total() > aut_budget)
        throw CapExceededError("full automorphism enumeration exceeds the budget");
    std::vector<GMap> aut;
    GMap t;
    while (en.next(t))
        if (gmap_invertible(s, s, t)) aut.push_back(t);

    // inverses by powering to the element order
    std::vector<GMap> aut_inv;
    aut_inv.reserve(aut.size());
    for (const GMap& g : aut) {
        GMap pw = g, prev = GMap::identity(s.rank());
        while (!gmap_is_identity(s, pw)) {
            prev = pw;
            pw = gmap_mul(s.mod, pw, g);
        }
        aut_inv.push_back(prev);
    }

    std::map<std::vector<std::uint64_t>, long> index;
    std::vector<GMap> q;
    for (const GMap& g : aut)
        if (gmap_is_identity(s, gmap_pow_int(s, g, order_divides))) {
            index[g.a] = static_cast<long>(q.size());
            q.push_back(g);
        }
    std::vector<bool> visited(q.size(), false);
    long classes = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (visited[k]) continue;
        ++classes;
        for (std::size_t g = 0; g < aut.size(); ++g) {
            GMap conj = gmap_mul(s.mod, gmap_mul(s.mod, aut[g], q[k]), aut_inv[g]);
            auto it = index.find(conj.a);
            if (it == index.end()) throw InternalError("conjugate left the bounded-order set");
            visited[static_cast<std::size_t>(it->second)] = true;
        }
    }
    return classes;
}

namespace {

void enumerate_groups(unsigned long p, long max_exp, long max_rank,
                      std::vector<AbelianPGroup>& out) {
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long remaining, long cap) {
        out.emplace_back(p, cur);
        if (remaining == 0) return;
        for (long e = cap; e >= 1; --e) {
            cur.push_back(e);
            rec(remaining - 1, e);
            cur.pop_back();
        }
    };
    rec(max_rank, max_exp);
}

}  // namespace

Int diagram_counting_bound(unsigned long p, long n, const std::vector<long>& d) {
    if (n < 1) throw BadArgumentError("n must be at least 1");
    if (static_cast<long>(d.size()) != n) throw BadArgumentError("need one rank cap per level");
    for (long x : d)
        if (x < 0) throw BadArgumentError("rank caps must be nonnegative");

    std::vector<std::vector<AbelianPGroup>> levels(static_cast<std::size_t>(n));
    for (long i = 1; i <= n; ++i)
        enumerate_groups(p, i, d[static_cast<std::size_t>(i - 1)],
                         levels[static_cast<std::size_t>(i - 1)]);

    std::map<std::pair<std::vector<long>, long>, long> c_cache;
    auto c_of = [&](const AbelianPGroup& J, long i) {
        auto key = std::make_pair(J.exponents, n - i);
        auto it = c_cache.find(key);
        if (it != c_cache.end()) return it->second;
        long v = conjugacy_classes_of_bounded_order(
            J, pow_int(p, static_cast<unsigned long>(n - i)));
        c_cache[key] = v;
        return v;
    };

    Int total = 0;
    std::vector<const AbelianPGroup*> tuple(static_cast<std::size_t>(n));
    std::function<void(long, Int)> rec = [&](long i, Int partial) {
        if (i == n) {
            for (long k = 0; k + 1 < n; ++k) {
                const AbelianPGroup& a = *tuple[static_cast<std::size_t>(k)];
                const AbelianPGroup& b = *tuple[static_cast<std::size_t>(k + 1)];
                Int e = a.exponent() < b.exponent() ? a.exponent() : b.exponent();
                unsigned long ex = 2 * static_cast<unsigned long>(a.rank_p()) *
                                   static_cast<unsigned long>(b.rank_p());
                Int f;
                mpz_pow_ui(f.get_mpz_t(), e.get_mpz_t(), ex);
                partial *= f;
            }
            total += partial;
            return;
        }
        for (const AbelianPGroup& J : levels[static_cast<std::size_t>(i)]) {
            tuple[static_cast<std::size_t>(i)] = &J;
            rec(i + 1, partial * c_of(J, i + 1));
        }
    };
    rec(0, 1);
    return total;
}

Int counting_ref_bound(const CountingRefInput& in) {
    std::size_t n = in.N.size();
    if (in.s.size() != n || in.gamma.size() != n || in.fixed.size() + 1 != n ||
        in.torsion.size() + 1 != n)
        throw BadArgumentError("counting-ref input lengths are inconsistent");
    for (const Int& x : in.N)
        if (x < 0) throw BadArgumentError("counting-ref inputs must be nonnegative");
    Int out = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int top = in.N[i] + in.s[i];
        Int b;
        mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), in.N[i].get_ui());
        out *= b;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), in.fixed[i].get_mpz_t(), in.gamma[i + 1].get_ui());
        out *= f;
        Int g;
        mpz_pow_ui(g.get_mpz_t(), in.torsion[i].get_mpz_t(), in.gamma[i].get_ui());
        out *= g;
    }
    return out;
}

ClampedBound fixedpart_bound(long i, long n, long r, long delta) {
    if (i < 1 || i > n - 1) throw BadLevelError("fixedpart bound needs 1 <= i <= n-1");
    if (r < 0 || delta < 0) throw BadArgumentError("counts must be nonnegative");
    long raw = r * i * (2 + n - i) + delta * i * (n - i + 1) - i * n + i * i;
    return ClampedBound{std::max<long>(raw, 0), raw, raw < 0};
}

long rosen_bound(long degree, long r, long delta_base) {
    if (degree < 1) throw BadArgumentError("degree must be at least 1");
    if (r < 0 || delta_base < 0) throw BadArgumentError("counts must be nonnegative");
    return degree * (r + delta_base);
}

ResCores3Exponents res_cores3_bounds(unsigned long p, long r, long delta) {
    if (r < 0 || delta < 0) throw BadArgumentError("counts must be nonnegative");
    Int pi(p);
    return ResCores3Exponents{pi * (5 * r + 2 * delta) * (6 * r + 4 * delta),
                              pi * (2 * r + delta) * (4 * r + 3 * delta)};
}

Int adhoc_n2_bound(unsigned long p, long r, long delta) {
    if (r < 0 || delta < 0) throw BadArgumentError("counts must be nonnegative");
    unsigned long c = static_cast<unsigned long>(6 * r + 4 * delta);
    Int out = pow_int(p, static_cast<unsigned long>(p) * c * c);
    Int b = binomial(c + p, static_cast<unsigned long>(p));
    return out * b * b;
}

Int thm_b1_bound(unsigned long p, long r, long delta) {
    if (r < 0 || delta < 0) throw BadArgumentError("counts must be nonnegative");
    unsigned long e = static_cast<unsigned long>(16 * r * r + 22 * r * delta + 9 * delta * delta);
    return pow_int(p, e);
}

Int thm_b1_presimplification(unsigned long p, long r, long delta) {
    unsigned long c = static_cast<unsigned long>(3 * r + 2 * delta);
    Int out = pow_int(p, 2 * static_cast<unsigned long>(r + delta) * c);
    out *= binomial(c + p, static_cast<unsigned long>(p));
    out *= binomial(static_cast<unsigned long>(r + delta) + 2, 2);
    return out;
}

Int thm_b2_proof_bound(unsigned long p, long r, long delta) {
    if (r < 0 || delta < 0) throw BadArgumentError("counts must be nonnegative");
    unsigned long c1 = static_cast<unsigned long>(6 * r + 4 * delta);
    unsigned long c2 = static_cast<unsigned long>(4 * r + 3 * delta);
    unsigned long p2 = static_cast<unsigned long>(p) * static_cast<unsigned long>(p);
    Int out = pow_int(p, static_cast<unsigned long>(p) * c1 * c1);
    out *= binomial(static_cast<unsigned long>(r + delta) + 3, 3);
    Int b1 = binomial(c1 + p, static_cast<unsigned long>(p));
    out *= b1 * b1;
    out *= binomial(c2 + p2, p2);
    ResCores3Exponents rc = res_cores3_bounds(p, r, delta);
    Int f1, f2;
    mpz_pow_ui(f1.get_mpz_t(), Int(p).get_mpz_t(), rc.restriction.get_ui());
    mpz_pow_ui(f2.get_mpz_t(), Int(p).get_mpz_t(), rc.corestriction.get_ui());
    return out * f1 * f2;
}

InequalityReport verify_binomial_inequalities(long a_max, long cd_max, long r_delta_max) {
    InequalityReport rep;
    for (long a = 0; a <= a_max; ++a) {
        Int two_a = pow_int(2UL, static_cast<unsigned long>(a));
        for (long b = 0; b <= a; ++b) {
            ++rep.checked;
            if (binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)) > two_a)
                rep.violations.push_back("binom(" + std::to_string(a) + "," + std::to_string(b) +
                                         ") > 2^" + std::to_string(a));
        }
    }
    for (long c = 2; c <= cd_max; ++c)
        for (long d = 3; d <= cd_max; ++d) {
            ++rep.checked;
            Int rhs = pow_int(static_cast<unsigned long>(d), static_cast<unsigned long>(c));
            if (Int(c + d) > rhs)
                rep.violations.push_back("c+d > d^c at c=" + std::to_string(c) +
                                         ", d=" + std::to_string(d));
        }
    for (unsigned long p : {3UL, 5UL})
        for (long r = 0; r <= r_delta_max; ++r)
            for (long delta = 0; delta <= r_delta_max; ++delta) {
                if (r + delta < 1) continue;
                // degree p^2 chain
                {
                    unsigned long c = static_cast<unsigned long>(3 * r + 2 * delta);
                    Int lhs = binomial(c + p, static_cast<unsigned long>(p));
                    Int mid = pow_int(Int(c + p), c);
                    Int rhs = pow_int(p, c * c);
                    ++rep.checked;
                    if (lhs > mid || mid > rhs)
                        rep.violations.push_back("degree-p^2 binomial chain fails at p=" +
                                                 std::to_string(p) + " r=" + std::to_string(r) +
                                                 " delta=" + std::to_string(delta));
                    ++rep.checked;
                    Int small = binomial(static_cast<unsigned long>(r + delta) + 2, 2);
                    if (small > pow_int(p, static_cast<unsigned long>(r + delta)))
                        rep.violations.push_back("binom(r+delta+2,2) chain fails at p=" +
                                                 std::to_string(p) + " r=" + std::to_string(r) +
                                                 " delta=" + std::to_string(delta));
                }
                // degree p^3 chain
                {
                    unsigned long c = static_cast<unsigned long>(4 * r + 3 * delta);
                    unsigned long p2 = static_cast<unsigned long>(p) * static_cast<unsigned long>(p);
                    Int lhs = binomial(c + p2, p2);
                    Int mid = pow_int(Int(c + p2), c);
                    Int rhs = pow_int(p, 2 * c * c);
                    ++rep.checked;
                    if (lhs > mid || mid > rhs)
                        rep.violations.push_back("degree-p^3 binomial chain fails at p=" +
                                                 std::to_string(p) + " r=" + std::to_string(r) +
                                                 " delta=" + std::to_string(delta));
                }
            }
    return rep;
}

}  // namespace zplat
