#include "yakovlev.hpp"

#include "endo.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zplat {

namespace {

unsigned long p_power(unsigned long p, long e) {
    unsigned long v = 1;
    for (long k = 0; k < e; ++k) v *= p;
    return v;
}

GMap gmap_from(const IntMatrix& m) {
    GMap g(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) g.at(i, j) = m.at(i, j).get_ui();
    return g;
}

IntMatrix intmatrix_from(const GMap& g) {
    IntMatrix m(g.rows, g.cols);
    for (long i = 0; i < g.rows; ++i)
        for (long j = 0; j < g.cols; ++j) m.at(i, j) = g.at(i, j);
    return m;
}

// every equivariant isomorphism between two module levels
std::vector<GMap> iso_candidates(const FModule& A, const FModule& B, std::uint64_t cap) {
    std::vector<GMap> out;
    if (!(A.group == B.group)) return out;
    GroupShape shape(A.group);
    GMap act_a = gmap_from(A.action), act_b = gmap_from(B.action);
    HomEnumerator en(shape, shape);
    if (en.overflow() || en.total() > cap)
        throw CapExceededError("diagram equivalence: hom space exceeds the cap");
    GMap c;
    while (en.next(c)) {
        if (!gmap_invertible(shape, shape, c)) continue;
        if (!gmap_equivariant(shape, act_a, act_b, c)) continue;
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string YakovlevDiagram::to_string() const {
    std::ostringstream os;
    os << "diagram p=" << p << " n=" << n << "\n";
    for (long i = 0; i < n; ++i) {
        const FModule& m = modules[static_cast<std::size_t>(i)];
        os << "  M_" << (i + 1) << ": invariants=" << m.group.to_string()
           << " action=" << m.action.to_string() << "\n";
    }
    for (long i = 0; i + 1 < n; ++i) {
        os << "  alpha_" << (i + 1) << ": "
           << alpha[static_cast<std::size_t>(i)].matrix.to_string() << "\n";
        os << "  beta_" << (i + 1) << ": " << beta[static_cast<std::size_t>(i)].matrix.to_string()
           << "\n";
    }
    return os.str();
}

void check_axioms(const YakovlevDiagram& d) {
    if (static_cast<long>(d.modules.size()) != d.n)
        throw InternalError("diagram has the wrong number of modules");
    if (static_cast<long>(d.alpha.size()) != d.n - 1 ||
        static_cast<long>(d.beta.size()) != d.n - 1)
        throw InternalError("diagram has the wrong number of maps");

    for (long i = 0; i < d.n; ++i) {
        const FModule& m = d.modules[static_cast<std::size_t>(i)];
        if (m.group.exponent_log() > i + 1)
            throw InternalError("diagram entry M_" + std::to_string(i + 1) +
                                " has exponent beyond p^" + std::to_string(i + 1));
        if (m.q != p_power(d.p, d.n - (i + 1)))
            throw InternalError("diagram entry M_" + std::to_string(i + 1) +
                                " has the wrong acting group");
    }
    for (long i = 0; i + 1 < d.n; ++i) {
        const ModuleMap& a = d.alpha[static_cast<std::size_t>(i)];
        const ModuleMap& b = d.beta[static_cast<std::size_t>(i)];
        const FModule& lo = d.modules[static_cast<std::size_t>(i)];
        const FModule& hi = d.modules[static_cast<std::size_t>(i + 1)];
        if (!(a.source == lo) || !(a.target == hi) || !(b.source == hi) || !(b.target == lo))
            throw InternalError("diagram maps attached to the wrong levels");
        if (!a.is_equivariant())
            throw InternalError("alpha_" + std::to_string(i + 1) + " is not equivariant:\n" +
                                a.matrix.to_string());
        if (!b.is_equivariant())
            throw InternalError("beta_" + std::to_string(i + 1) + " is not equivariant:\n" +
                                b.matrix.to_string());
        IntMatrix ba = b.matrix.mul(a.matrix);
        IntMatrix norm = relative_norm_endo(lo, d.p, d.n, i + 1);
        if (!endo_equal(ba, norm, lo.group))
            throw InternalError("beta_" + std::to_string(i + 1) + " o alpha_" +
                                std::to_string(i + 1) + " is not the relative norm:\n got " +
                                ba.to_string() + "\n want " + norm.to_string());
        IntMatrix ab = a.matrix.mul(b.matrix);
        IntMatrix mulp = scalar_endo(hi, Int(d.p));
        if (!endo_equal(ab, mulp, hi.group))
            throw InternalError("alpha_" + std::to_string(i + 1) + " o beta_" +
                                std::to_string(i + 1) + " is not multiplication by p:\n got " +
                                ab.to_string() + "\n want " + mulp.to_string());
    }
}

YakovlevDiagram build_diagram(const Lattice& M) {
    YakovlevDiagram d;
    d.p = M.p;
    d.n = M.n;
    std::vector<TateGroup> levels;
    levels.reserve(static_cast<std::size_t>(M.n));
    for (long i = 1; i <= M.n; ++i) levels.push_back(h1(M, i));
    for (const TateGroup& t : levels) d.modules.push_back(t.mod);
    for (long i = 1; i + 1 <= M.n; ++i) {
        const TateGroup& lo = levels[static_cast<std::size_t>(i - 1)];
        const TateGroup& hi = levels[static_cast<std::size_t>(i)];
        d.alpha.push_back(cores_map_between(M, i, lo, hi));
        d.beta.push_back(res_map_between(M, i, hi, lo));
    }
    check_axioms(d);
    return d;
}

bool are_equivalent(const YakovlevDiagram& D, const YakovlevDiagram& E, std::uint64_t cap) {
    if (D.p != E.p || D.n != E.n) return false;
    for (long i = 0; i < D.n; ++i) {
        const FModule& a = D.modules[static_cast<std::size_t>(i)];
        const FModule& b = E.modules[static_cast<std::size_t>(i)];
        if (!(a.group == b.group)) return false;
        if (a.group.exponent_log() <= 1 && !(jordan_partition(a) == jordan_partition(b)))
            return false;
    }

    std::vector<std::vector<GMap>> cands;
    cands.reserve(static_cast<std::size_t>(D.n));
    for (long i = 0; i < D.n; ++i) {
        cands.push_back(iso_candidates(D.modules[static_cast<std::size_t>(i)],
                                       E.modules[static_cast<std::size_t>(i)], cap));
        if (cands.back().empty()) return false;
    }

    // backtracking over levels with the two intertwining constraints
    std::vector<GMap> chosen(static_cast<std::size_t>(D.n));
    std::vector<GroupShape> shapes;
    for (long i = 0; i < D.n; ++i)
        shapes.emplace_back(E.modules[static_cast<std::size_t>(i)].group);

    auto compatible = [&](long lvl, const GMap& kappa_next) {
        // lvl indexes the map: kappa_{lvl+1} against kappa_lvl
        const GMap& kappa = chosen[static_cast<std::size_t>(lvl - 1)];
        GMap aD = gmap_from(D.alpha[static_cast<std::size_t>(lvl - 1)].matrix);
        GMap aE = gmap_from(E.alpha[static_cast<std::size_t>(lvl - 1)].matrix);
        GMap bD = gmap_from(D.beta[static_cast<std::size_t>(lvl - 1)].matrix);
        GMap bE = gmap_from(E.beta[static_cast<std::size_t>(lvl - 1)].matrix);
        const auto& hi_mod = shapes[static_cast<std::size_t>(lvl)].mod;
        const auto& lo_mod = shapes[static_cast<std::size_t>(lvl - 1)].mod;
        if (!(gmap_mul(hi_mod, kappa_next, aD) == gmap_mul(hi_mod, aE, kappa))) return false;
        if (!(gmap_mul(lo_mod, bE, kappa_next) == gmap_mul(lo_mod, kappa, bD))) return false;
        return true;
    };

    std::function<bool(long)> dfs = [&](long lvl) -> bool {
        if (lvl == D.n) return true;
        for (const GMap& k : cands[static_cast<std::size_t>(lvl)]) {
            if (lvl > 0 && !compatible(lvl, k)) continue;
            chosen[static_cast<std::size_t>(lvl)] = k;
            if (dfs(lvl + 1)) return true;
        }
        return false;
    };
    return dfs(0);
}

std::vector<long> permutation_multiplicities(const Lattice& M, const CharacterProfile& reference) {
    if (reference.p != M.p || reference.n != M.n ||
        static_cast<long>(reference.m.size()) != M.n + 1)
        throw BadArgumentError("reference profile does not match the lattice");
    CharacterProfile cp = character_profile(M);
    std::vector<long> a(static_cast<std::size_t>(M.n + 1));
    long prev = 0;
    for (long k = 0; k <= M.n; ++k) {
        long dk = cp.m[static_cast<std::size_t>(k)] - reference.m[static_cast<std::size_t>(k)];
        long ak = dk - prev;
        if (ak < 0)
            throw InconsistentError("inconsistent profile: multiplicity a_" + std::to_string(k) +
                                    " would be negative");
        a[static_cast<std::size_t>(k)] = ak;
        prev = dk;
    }
    return a;
}

namespace {

// all partitions with parts <= max_part and total <= max_total, nonincreasing
void gen_partitions(long max_part, long max_total, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    out.push_back(cur);
    long start = cur.empty() ? max_part : std::min(max_part, cur.back());
    for (long part = start; part >= 1; --part) {
        if (part > max_total) continue;
        cur.push_back(part);
        gen_partitions(max_part, max_total - part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

EnumerationResult enumerate_diagrams(unsigned long p, long n, const DiagramConstraints& c,
                                     bool reverse_traversal) {
    if (n != 2) throw UnsupportedError("diagram enumeration is only supported for n = 2");
    if (c.rank_caps.size() != 2)
        throw BadArgumentError("need exactly two rank caps for n = 2");
    long d1 = c.rank_caps[0], d2 = c.rank_caps[1];
    if (d1 < 0 || d2 < 0) throw BadArgumentError("rank caps must be nonnegative");

    // level-1 candidates: Jordan types of total dimension <= d1
    std::vector<std::vector<long>> types1;
    {
        std::vector<long> cur;
        gen_partitions(static_cast<long>(p), d1, cur, types1);
    }
    std::vector<FModule> mods1;
    for (const auto& t : types1) {
        long dim = 0;
        for (long part : t) dim += part;
        IntMatrix act(dim, dim);
        long off = 0;
        for (long part : t) {
            for (long k = 0; k < part; ++k) {
                act.at(off + k, off + k) = 1;
                if (k + 1 < part) act.at(off + k, off + k + 1) = 1;
            }
            off += part;
        }
        AbelianPGroup g(p, std::vector<long>(static_cast<std::size_t>(dim), 1));
        mods1.push_back(FModule(p, 1, p, g, act));
    }

    // level-2 candidates: abelian groups of exponent <= p^2 with rank <= d2
    std::vector<FModule> mods2;
    {
        std::vector<std::vector<long>> types2;
        std::vector<long> cur;
        // exponent vectors: nonincreasing over {2,1}, length <= d2
        std::function<void(long, long)> rec = [&](long remaining, long max_e) {
            types2.push_back(cur);
            if (remaining == 0) return;
            for (long e = max_e; e >= 1; --e) {
                cur.push_back(e);
                rec(remaining - 1, e);
                cur.pop_back();
            }
        };
        rec(d2, 2);
        for (const auto& t : types2) {
            AbelianPGroup g(p, t);
            mods2.push_back(FModule(p, 2, 1, g, IntMatrix::identity(g.rank_p())));
        }
    }

    std::vector<YakovlevDiagram> found;
    for (const FModule& m1 : mods1)
        for (const FModule& m2 : mods2) {
            Int size = m1.group.order() * m2.group.order();
            if (size > Int(c.size_cap))
                throw CapExceededError("enumeration: diagram size cap exceeded; raise --cap");
            GroupShape s1(m1.group), s2(m2.group);
            GMap act1 = gmap_from(m1.action), act2 = gmap_from(m2.action);
            IntMatrix norm1 = relative_norm_endo(m1, p, 2, 1);
            IntMatrix mulp = scalar_endo(m2, Int(p));

            HomEnumerator ea(s1, s2);
            if (ea.overflow() || ea.total() > c.size_cap * c.size_cap)
                throw CapExceededError("enumeration: map space cap exceeded");
            GMap am;
            std::vector<GMap> alphas;
            while (ea.next(am)) {
                if (!gmap_equivariant(s2, act1, act2, am)) continue;
                alphas.push_back(am);
            }
            HomEnumerator eb(s2, s1);
            if (eb.overflow() || eb.total() > c.size_cap * c.size_cap)
                throw CapExceededError("enumeration: map space cap exceeded");
            GMap bm;
            std::vector<GMap> betas;
            while (eb.next(bm)) {
                if (!gmap_equivariant(s1, act2, act1, bm)) continue;
                betas.push_back(bm);
            }
            for (const GMap& a : alphas)
                for (const GMap& b : betas) {
                    IntMatrix ba = intmatrix_from(gmap_mul(s1.mod, b, a));
                    if (!endo_equal(ba, norm1, m1.group)) continue;
                    IntMatrix ab = intmatrix_from(gmap_mul(s2.mod, a, b));
                    if (!endo_equal(ab, mulp, m2.group)) continue;
                    YakovlevDiagram d;
                    d.p = p;
                    d.n = 2;
                    d.modules = {m1, m2};
                    d.alpha = {ModuleMap(m1, m2, intmatrix_from(a))};
                    d.beta = {ModuleMap(m2, m1, intmatrix_from(b))};
                    check_axioms(d);
                    found.push_back(std::move(d));
                }
        }

    if (reverse_traversal) std::reverse(found.begin(), found.end());

    EnumerationResult res;
    res.diagrams_seen = found.size();
    // canonical class representatives: the lexicographically least
    // serialization, so the result is independent of the traversal order
    std::vector<std::string> keys;
    for (const YakovlevDiagram& d : found) {
        std::string key = d.to_string();
        bool matched = false;
        for (std::size_t b = 0; b < res.representatives.size(); ++b)
            if (are_equivalent(d, res.representatives[b], 1ULL << 22)) {
                if (key < keys[b]) {
                    res.representatives[b] = d;
                    keys[b] = key;
                }
                matched = true;
                break;
            }
        if (!matched) {
            res.representatives.push_back(d);
            keys.push_back(key);
        }
    }
    res.class_count = static_cast<long>(res.representatives.size());
    std::sort(res.representatives.begin(), res.representatives.end(),
              [](const YakovlevDiagram& x, const YakovlevDiagram& y) {
                  return x.to_string() < y.to_string();
              });
    return res;
}

}  // namespace zplat
