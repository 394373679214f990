#include "report.hpp"

#include "bounds.hpp"
#include "lattice_json.hpp"
#include "modrep.hpp"
#include "tate.hpp"
#include "yakovlev.hpp"

#include <sstream>

namespace zplat {

namespace {

std::string group_str(const AbelianPGroup& g) {
    std::ostringstream os;
    os << g.to_string() << " order=" << g.p << "^" << g.v_p();
    return os.str();
}

// |ker f| for an endomorphism f of a finite module, via the index of the
// preimage lattice: |ker f| = |Z^m / (f Z^m + D Z^m)| with D = diag(p^e_i).
Int kernel_order(const FModule& m, const IntMatrix& endo) {
    long k = m.gens();
    if (k == 0) return 1;
    IntMatrix D(k, k);
    for (long i = 0; i < k; ++i) D.at(i, i) = m.row_modulus(i);
    SmithDecomposition s = smith_normal_form(endo.hconcat(D));
    Int out = 1;
    for (long i = 0; i < k; ++i) out *= s.diag[static_cast<std::size_t>(i)];
    return out;
}

unsigned long p_power_ul(unsigned long p, long e) {
    unsigned long v = 1;
    for (long k = 0; k < e; ++k) v *= p;
    return v;
}

void emit_profile(std::ostringstream& os, const Lattice& L) {
    CharacterProfile cp = character_profile(L);
    os << "[character profile]\n";
    os << "multiplicity by kernel level 0..n: " << cp.to_string() << "\n";
    os << "rank identity:";
    long total = 0;
    for (long k = 0; k <= L.n; ++k) {
        long phi = euler_phi_p_power(L.p, L.n - k);
        total += cp.m[static_cast<std::size_t>(k)] * phi;
        os << (k ? " +" : " ") << cp.m[static_cast<std::size_t>(k)] << "*" << phi;
    }
    os << " = " << total << (total == L.rank ? " ok" : " MISMATCH") << "\n";
}

void emit_input(std::ostringstream& os, const Lattice& L) {
    os << "[input]\n";
    if (!L.label.empty()) os << "label: " << L.label << "\n";
    os << "p: " << L.p << "\n";
    os << "n: " << L.n << "\n";
    os << "rank: " << L.rank << "\n";
    os << "action: " << L.action.to_string() << "\n";
    os << "order check: ok\n";
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ':') {
            out.emplace_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.emplace_back(cur);
    return out;
}

Int need_int(const std::map<std::string, std::string>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw BadArgumentError("missing field '" + key + "'");
    try {
        return Int(it->second);
    } catch (const std::invalid_argument&) {
        throw BadArgumentError("field '" + key + "' is not an integer: " + it->second);
    }
}

long need_long(const std::map<std::string, std::string>& params, const std::string& key) {
    Int v = need_int(params, key);
    if (!v.fits_slong_p()) throw BadArgumentError("field '" + key + "' is out of range");
    return v.get_si();
}

}  // namespace

std::string report_cohomology(const Lattice& L, long level) {
    check_level(L, level, 1);
    TateGroup hh = h1(L, level);
    TateGroup h0 = h0_hat(L, level);
    std::ostringstream os;
    os << "zplat cohomology report\n";
    emit_input(os, L);
    os << "[cohomology level " << level << "]\n";
    os << "H1 invariants: " << group_str(hh.mod.group) << "\n";
    os << "H1 action: " << hh.mod.action.to_string() << "\n";
    os << "Hhat0 invariants: " << group_str(h0.mod.group) << "\n";
    os << "Hhat0 action: " << h0.mod.action.to_string() << "\n";
    return os.str();
}

std::string report_decompose(const Lattice& L, long group_level,
                             const std::optional<CharacterProfile>& reference) {
    check_level(L, group_level, 1);
    std::ostringstream os;
    os << "zplat decomposition report\n";
    emit_input(os, L);
    emit_profile(os, L);
    os << "[decomposition at group level " << group_level << "]\n";
    FreeRankResult fr = max_free_rank(L, group_level);
    os << "c value: " << c_value(L, group_level) << "\n";
    os << "max free rank: " << fr.m << "\n";
    os << "free witness: "
       << (fr.m == 0 ? "none needed" : (fr.witness_found ? "found" : "not found (bounded search)"))
       << "\n";
    if (fr.witness_found)
        for (const auto& w : fr.witnesses) os << "  trace generator: " << from_vector(w).transpose().to_string() << "\n";
    TateGroup hh = h1(L, group_level);
    TateGroup h0 = h0_hat(L, group_level);
    os << "H1 invariants: " << group_str(hh.mod.group) << "\n";
    os << "Hhat0 invariants: " << group_str(h0.mod.group) << "\n";
    if (reference) {
        os << "[permutation multiplicities]\n";
        os << "reference profile: " << reference->to_string() << "\n";
        std::vector<long> a = permutation_multiplicities(L, *reference);
        os << "multiplicities a_0..a_n:";
        for (long x : a) os << " " << x;
        os << "\n";
    }
    return os.str();
}

std::string report_pipeline(const Lattice& L) {
    std::ostringstream os;
    os << "zplat report\n";
    emit_input(os, L);
    emit_profile(os, L);

    std::vector<TateGroup> levels;
    os << "[cohomology]\n";
    for (long i = 1; i <= L.n; ++i) {
        levels.push_back(h1(L, i));
        TateGroup h0 = h0_hat(L, i);
        os << "level " << i << ": H1=" << group_str(levels.back().mod.group)
           << "  Hhat0=" << group_str(h0.mod.group) << "\n";
    }

    os << "[decomposition]\n";
    for (long i = 1; i <= L.n; ++i) {
        FreeRankResult fr = max_free_rank(L, i, /*want_witness=*/false);
        os << "level " << i << ": c=" << c_value(L, i) << " max_free_rank=" << fr.m << "\n";
    }

    YakovlevDiagram d = build_diagram(L);
    os << "[diagram]\n" << d.to_string();
    os << "axioms: ok\n";

    os << "[bound table]\n";
    std::vector<Int> N, s, fixed, torsion, gamma;
    bool s_complete = true;
    for (long i = 1; i <= L.n; ++i) {
        const FModule& m = levels[static_cast<std::size_t>(i - 1)].mod;
        IntMatrix tmi = m.action.sub(IntMatrix::identity(m.gens()));
        Int fixed_order = kernel_order(m, tmi);
        long Ni = p_adic_log(fixed_order, L.p);
        long gi = min_gens(m);
        N.emplace_back(Ni);
        gamma.emplace_back(gi);
        Int si = 0;
        std::string si_str = "external";
        if (i == 1) {
            si = Int(p_power_ul(L.p, L.n - 1));
            si_str = si.get_str();
        } else if (i == L.n) {
            si = Int(L.n);
            si_str = si.get_str();
        } else {
            s_complete = false;
        }
        s.push_back(si);
        os << "level " << i << ": |H1|=" << L.p << "^" << m.group.v_p() << " rk_p=" << m.group.rank_p()
           << " N_" << i << "=" << Ni << " gamma_" << i << "=" << gi << " s_" << i << "=" << si_str
           << "\n";
    }
    for (long i = 1; i + 1 <= L.n; ++i) {
        const FModule& lo = levels[static_cast<std::size_t>(i - 1)].mod;
        const FModule& hi = levels[static_cast<std::size_t>(i)].mod;
        IntMatrix sub_gen = lo.action.pow(p_power_ul(L.p, L.n - i - 1));
        Int fix = kernel_order(lo, sub_gen.sub(IntMatrix::identity(lo.gens())));
        Int tors = kernel_order(hi, scalar_endo(hi, pow_int(L.p, static_cast<unsigned long>(i))));
        fixed.push_back(fix);
        torsion.push_back(tors);
        os << "maps " << i << "<->" << (i + 1) << ": |H1_" << i << "^(level " << (i + 1)
           << " fixed)|=" << fix.get_str() << " |H1_" << (i + 1) << "[p^" << i
           << "]|=" << tors.get_str() << "\n";
    }
    if (s_complete) {
        Int total = counting_ref_bound(CountingRefInput{N, s, fixed, torsion, gamma});
        os << "counting product (structure binomials x map factors): " << total.get_str() << "\n";
    } else {
        os << "counting product: requires external s_i for levels 2.." << (L.n - 1) << "\n";
    }
    return os.str();
}

std::string report_ext(unsigned long p, bool modp2) {
    if (!is_odd_prime(p)) throw BadArgumentError("p must be an odd prime");
    if (p > 13) throw CapExceededError("ext tables are desk scale: p <= 13");
    std::ostringstream os;
    os << "zplat ext/hom tables over coefficient rings at p=" << p << "\n";
    os << "[hom orders over (Z/p)[C_p]]  entry (i,j) = log_p |Hom(Y_i, Y_j)|\n";
    for (unsigned long i = 1; i <= p; ++i) {
        os << "i=" << i << ":";
        for (unsigned long j = 1; j <= p; ++j)
            os << " " << hom_order_modp_exp(static_cast<long>(i), static_cast<long>(j), p);
        os << "\n";
    }
    os << "[ext^1 dimensions over (Z/p)[C_p]]  entry (i,j) = dim Ext^1(Y_i, Y_j)\n";
    for (unsigned long i = 1; i <= p; ++i) {
        os << "i=" << i << ":";
        for (unsigned long j = 1; j <= p; ++j)
            os << " " << ext1_modp(static_cast<long>(i), static_cast<long>(j), p);
        os << "\n";
    }
    if (modp2) {
        os << "[ext^1 over (Z/p^2)[C_p]]  entry (i,j) = log_p |Ext^1(Y_i, Y_j)|\n";
        for (unsigned long i = 1; i <= p; ++i) {
            os << "i=" << i << ":";
            for (unsigned long j = 1; j <= p; ++j)
                os << " " << ext1_modp2(static_cast<long>(i), static_cast<long>(j), p).v_p();
            os << "\n";
        }
        os << "bound check: every entry <= p = " << p << ": ok\n";
    }
    return os.str();
}

std::string report_enumerate(unsigned long p, const std::vector<long>& ranks,
                             std::uint64_t size_cap) {
    if (!is_odd_prime(p)) throw BadArgumentError("p must be an odd prime");
    DiagramConstraints c{ranks, size_cap};
    EnumerationResult res = enumerate_diagrams(p, static_cast<long>(ranks.size()), c);
    Int bound = diagram_counting_bound(p, static_cast<long>(ranks.size()), ranks);
    std::ostringstream os;
    os << "zplat diagram enumeration\n";
    os << "p: " << p << "\nn: " << ranks.size() << "\nrank caps:";
    for (long d : ranks) os << " " << d;
    os << "\nsize cap: " << size_cap << "\n";
    os << "diagrams found: " << res.diagrams_seen << "\n";
    os << "equivalence classes: " << res.class_count << "\n";
    os << "counting bound: " << bound.get_str() << "\n";
    os << "classes <= bound: " << (Int(res.class_count) <= bound ? "ok" : "VIOLATED") << "\n";
    os << "[representatives]\n";
    for (const YakovlevDiagram& d : res.representatives) os << d.to_string();
    return os.str();
}

std::string report_bounds(const std::string& formula,
                          const std::map<std::string, std::string>& params) {
    std::ostringstream os;
    os << "zplat bound evaluation\nformula: " << formula << "\n";
    for (const auto& [k, v] : params) os << "param " << k << ": " << v << "\n";
    if (formula == "thmA") {
        Int v = thm_a_bound(need_int(params, "G"), need_int(params, "P"),
                            need_long(params, "rk"), need_long(params, "sf"));
        os << "value: " << v.get_str() << "\n";
    } else if (formula == "thmB1") {
        Int v = thm_b1_bound(static_cast<unsigned long>(need_long(params, "p")),
                             need_long(params, "r"), need_long(params, "delta"));
        os << "value: " << v.get_str() << "\n";
    } else if (formula == "thmB2proof") {
        Int v = thm_b2_proof_bound(static_cast<unsigned long>(need_long(params, "p")),
                                   need_long(params, "r"), need_long(params, "delta"));
        os << "value: " << v.get_str() << "\n";
    } else if (formula == "counting") {
        auto dlist = parse_int_list(params.count("d") ? params.at("d") : "");
        std::vector<long> d;
        for (const Int& x : dlist) d.push_back(x.get_si());
        Int v = diagram_counting_bound(static_cast<unsigned long>(need_long(params, "p")),
                                     need_long(params, "n"), d);
        os << "value: " << v.get_str() << "\n";
    } else if (formula == "countingref") {
        CountingRefInput in;
        in.N = parse_int_list(params.count("N") ? params.at("N") : "");
        in.s = parse_int_list(params.count("s") ? params.at("s") : "");
        in.fixed = parse_int_list(params.count("fixed") ? params.at("fixed") : "");
        in.torsion = parse_int_list(params.count("torsion") ? params.at("torsion") : "");
        in.gamma = parse_int_list(params.count("gamma") ? params.at("gamma") : "");
        Int v = counting_ref_bound(in);
        os << "value: " << v.get_str() << "\n";
    } else if (formula == "fixedpart") {
        ClampedBound b = fixedpart_bound(need_long(params, "i"), need_long(params, "n"),
                                         need_long(params, "r"), need_long(params, "delta"));
        os << "value: " << b.value << "\n";
        os << "raw: " << b.raw << (b.clamped ? " (clamped to 0)" : "") << "\n";
    } else if (formula == "rosen") {
        long v = rosen_bound(need_long(params, "degree"), need_long(params, "r"),
                             need_long(params, "delta"));
        os << "value: " << v << "\n";
    } else if (formula == "rescores3") {
        ResCores3Exponents e =
            res_cores3_bounds(static_cast<unsigned long>(need_long(params, "p")),
                              need_long(params, "r"), need_long(params, "delta"));
        os << "restriction exponent: " << e.restriction.get_str() << "\n";
        os << "corestriction exponent: " << e.corestriction.get_str() << "\n";
    } else if (formula == "adhoc") {
        Int v = adhoc_n2_bound(static_cast<unsigned long>(need_long(params, "p")),
                               need_long(params, "r"), need_long(params, "delta"));
        os << "value: " << v.get_str() << "\n";
    } else {
        throw BadArgumentError("unknown formula '" + formula + "'");
    }
    return os.str();
}

}  // namespace zplat
