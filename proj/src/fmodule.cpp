#include "fmodule.hpp"

#include <sstream>

namespace zplat {

IntMatrix reduce_rows(const IntMatrix& m, const AbelianPGroup& target) {
    IntMatrix r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i) {
        Int mod = pow_int(target.p,
                          static_cast<unsigned long>(target.exponents[static_cast<std::size_t>(i)]));
        for (long j = 0; j < m.cols(); ++j)
            mpz_fdiv_r(r.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), mod.get_mpz_t());
    }
    return r;
}

bool endo_equal(const IntMatrix& x, const IntMatrix& y, const AbelianPGroup& target) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    return reduce_rows(x, target) == reduce_rows(y, target);
}

bool hom_well_defined(const IntMatrix& m, const AbelianPGroup& source,
                      const AbelianPGroup& target) {
    if (m.rows() != target.rank_p() || m.cols() != source.rank_p()) return false;
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            long need = target.exponents[static_cast<std::size_t>(i)] -
                        source.exponents[static_cast<std::size_t>(j)];
            if (need <= 0) continue;
            Int mod = pow_int(target.p, static_cast<unsigned long>(need));
            if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), mod.get_mpz_t())) return false;
        }
    return true;
}

FModule::FModule(unsigned long p_, long a_, unsigned long q_, AbelianPGroup group_,
                 IntMatrix action_)
    : p(p_), a(a_), q(q_), group(std::move(group_)) {
    if (a < 1) throw BadArgumentError("coefficient level a must be at least 1");
    if (p_adic_log(Int(static_cast<unsigned long>(q)), p) < 0)
        throw BadArgumentError("acting group order must be a power of p");
    if (group.exponent_log() > a)
        throw ValidationError("module exponent exceeds the coefficient ring");
    if (action_.rows() != group.rank_p() || action_.cols() != group.rank_p())
        throw ValidationError("action matrix shape does not match the group");
    if (!hom_well_defined(action_, group, group))
        throw ValidationError("action matrix is not a well-defined endomorphism");
    action = reduce_rows(action_, group);
    // action^q must be the identity endomorphism
    IntMatrix pw = IntMatrix::identity(gens());
    for (unsigned long l = 0; l < q; ++l) pw = reduce_rows(pw.mul(action), group);
    if (!endo_equal(pw, IntMatrix::identity(gens()), group))
        throw ValidationError("generator action does not have order dividing q");
}

FpMat FModule::action_mod_p() const {
    FpMat r(gens(), gens(), p);
    for (long i = 0; i < gens(); ++i)
        for (long j = 0; j < gens(); ++j) {
            Int e;
            mpz_fdiv_r_ui(e.get_mpz_t(), action.at(i, j).get_mpz_t(), p);
            r.at(i, j) = e.get_ui();
        }
    return r;
}

std::string FModule::to_string() const {
    std::ostringstream os;
    os << "FModule{p=" << p << " a=" << a << " q=" << q << " invariants=" << group.to_string()
       << " action=" << action.to_string() << "}";
    return os.str();
}

ModuleMap::ModuleMap(FModule src, FModule tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)) {
    if (m.rows() != target.gens() || m.cols() != source.gens())
        throw ValidationError("module map matrix shape mismatch");
    if (!hom_well_defined(m, source.group, target.group))
        throw ValidationError("module map is not well defined on the presentations");
    matrix = reduce_rows(m, target.group);
}

bool ModuleMap::is_equivariant() const {
    return endo_equal(target.action.mul(matrix), matrix.mul(source.action), target.group);
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
    if (!(inner.target == source))
        throw BadArgumentError("module map composition target/source mismatch");
    return ModuleMap(inner.source, target, matrix.mul(inner.matrix));
}

IntMatrix scalar_endo(const FModule& m, const Int& c) {
    IntMatrix r(m.gens(), m.gens());
    for (long i = 0; i < m.gens(); ++i) r.at(i, i) = c;
    return r;
}

}  // namespace zplat
