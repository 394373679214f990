#include "abelian.hpp"

#include <algorithm>
#include <sstream>

namespace zplat {

AbelianPGroup::AbelianPGroup(unsigned long p_, std::vector<long> exps) : p(p_) {
    if (!is_odd_prime(p_)) throw BadArgumentError("p must be an odd prime");
    for (long e : exps) {
        if (e < 0) throw BadArgumentError("negative exponent in abelian group");
        if (e > 0) exponents.push_back(e);
    }
    std::sort(exponents.begin(), exponents.end(), std::greater<long>());
}

long AbelianPGroup::v_p() const {
    long s = 0;
    for (long e : exponents) s += e;
    return s;
}

std::string AbelianPGroup::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) os << ",";
        os << exponents[i];
    }
    os << ")";
    return os.str();
}

std::vector<Int> FiniteQuotient::coords(const std::vector<Int>& v) const {
    IntMatrix c = solve_exact(amb_snf_, amb_.rows(), amb_.cols(), from_vector(v));
    IntMatrix w = rel_snf_.U.mul(c);
    std::vector<Int> out;
    out.reserve(retained_.size());
    for (std::size_t j = 0; j < retained_.size(); ++j) {
        const Int& d = rel_snf_.diag[static_cast<std::size_t>(retained_[j])];
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), w.at(retained_[j], 0).get_mpz_t(), d.get_mpz_t());
        out.push_back(r);
    }
    return out;
}

std::vector<Int> FiniteQuotient::generator(long j) const {
    std::vector<Int> e(static_cast<std::size_t>(amb_.cols()));
    e[static_cast<std::size_t>(retained_[static_cast<std::size_t>(j)])] = 1;
    IntMatrix c = rel_snf_.Uinv.mul(from_vector(e));
    return amb_.mul(c).column_vec(0);
}

FiniteQuotient quotient_invariants(const IntMatrix& sub, const IntMatrix& amb, unsigned long p) {
    if (!is_odd_prime(p)) throw BadArgumentError("p must be an odd prime");
    if (sub.rows() != amb.rows())
        throw BadArgumentError("sub and amb must live in the same ambient space");

    FiniteQuotient q;
    q.amb_ = amb;
    q.amb_snf_ = smith_normal_form(amb);
    if (q.amb_snf_.rank != amb.cols())
        throw BadArgumentError("ambient basis columns are dependent");

    // containment check and change of basis (throws on violation)
    IntMatrix X = solve_exact(q.amb_snf_, amb.rows(), amb.cols(), sub);

    q.rel_snf_ = smith_normal_form(X);
    if (q.rel_snf_.rank < amb.cols())
        throw BadArgumentError("quotient is infinite: sublattice rank is too small");

    std::vector<long> exps(static_cast<std::size_t>(amb.cols()));
    for (long j = 0; j < amb.cols(); ++j) {
        long e = p_adic_log(q.rel_snf_.diag[static_cast<std::size_t>(j)], p);
        if (e < 0)
            throw InconsistentError("quotient is not p-primary: invariant factor " +
                                    q.rel_snf_.diag[static_cast<std::size_t>(j)].get_str() +
                                    " is not a power of " + std::to_string(p));
        exps[static_cast<std::size_t>(j)] = e;
    }
    // SNF diag is nondecreasing; canonical order is exponent-nonincreasing
    std::vector<long> kept;
    for (long j = amb.cols() - 1; j >= 0; --j)
        if (exps[static_cast<std::size_t>(j)] > 0) kept.push_back(j);
    q.retained_ = kept;

    std::vector<long> group_exps;
    for (long j : kept) group_exps.push_back(exps[static_cast<std::size_t>(j)]);
    q.group = AbelianPGroup(p, group_exps);
    return q;
}

}  // namespace zplat
