#include "intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace zplat {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw BadArgumentError("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::add(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw BadArgumentError("matrix sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::sub(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw BadArgumentError("matrix diff shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMatrix IntMatrix::negate() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    if (rows_ != cols_) throw BadArgumentError("matrix power needs a square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return result;
}

IntMatrix IntMatrix::scalar_mul(const Int& c) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& o) const {
    IntMatrix r(rows_ + o.rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (long i = 0; i < o.rows_; ++i)
        for (long j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
    return r;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw BadArgumentError("hconcat row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (long j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::column(long j) const {
    IntMatrix r(rows_, 1);
    for (long i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::column_vec(long j) const {
    std::vector<Int> v(static_cast<std::size_t>(rows_));
    for (long i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

IntMatrix IntMatrix::select_columns(const std::vector<long>& idx) const {
    IntMatrix r(rows_, static_cast<long>(idx.size()));
    for (long j = 0; j < r.cols(); ++j)
        for (long i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[static_cast<std::size_t>(j)]);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw BadArgumentError("apply shape mismatch");
    std::vector<Int> r(static_cast<std::size_t>(rows_));
    for (long i = 0; i < rows_; ++i) {
        Int s = 0;
        for (long j = 0; j < cols_; ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw BadArgumentError("determinant needs a square matrix");
    long n = rows_;
    if (n == 0) return 1;
    IntMatrix M = *this;
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            long pr = -1;
            for (long i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { pr = i; break; }
            if (pr < 0) return 0;
            for (long j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(pr, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M.at(i, j) = t;
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    Int d = M.at(n - 1, n - 1);
    return sign > 0 ? d : Int(-d);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << "[";
        for (long j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
        os << "]";
        if (i + 1 < rows_) os << " ";
    }
    os << "]";
    return os.str();
}

IntMatrix from_vector(const std::vector<Int>& v) {
    IntMatrix r(static_cast<long>(v.size()), 1);
    for (long i = 0; i < r.rows(); ++i) r.at(i, 0) = v[static_cast<std::size_t>(i)];
    return r;
}

namespace {

struct SnfWork {
    IntMatrix D, U, Uinv, V, Vinv;

    void swap_rows(long a, long b) {
        if (a == b) return;
        for (long j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (long j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
        for (long i = 0; i < Uinv.rows(); ++i) std::swap(Uinv.at(i, a), Uinv.at(i, b));
    }
    void swap_cols(long a, long b) {
        if (a == b) return;
        for (long i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (long i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
        for (long j = 0; j < Vinv.cols(); ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
    }
    // row a -= q * row b
    void row_sub(long a, long b, const Int& q) {
        if (q == 0) return;
        for (long j = 0; j < D.cols(); ++j) D.at(a, j) -= q * D.at(b, j);
        for (long j = 0; j < U.cols(); ++j) U.at(a, j) -= q * U.at(b, j);
        for (long i = 0; i < Uinv.rows(); ++i) Uinv.at(i, b) += q * Uinv.at(i, a);
    }
    // col a -= q * col b
    void col_sub(long a, long b, const Int& q) {
        if (q == 0) return;
        for (long i = 0; i < D.rows(); ++i) D.at(i, a) -= q * D.at(i, b);
        for (long i = 0; i < V.rows(); ++i) V.at(i, a) -= q * V.at(i, b);
        for (long j = 0; j < Vinv.cols(); ++j) Vinv.at(b, j) += q * Vinv.at(a, j);
    }
    void negate_row(long a) {
        for (long j = 0; j < D.cols(); ++j) D.at(a, j) = -D.at(a, j);
        for (long j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
        for (long i = 0; i < Uinv.rows(); ++i) Uinv.at(i, a) = -Uinv.at(i, a);
    }
};

}  // namespace

namespace {

// quotient of round-to-nearest division by a positive divisor: the remainder
// satisfies |r| <= b/2, which is what keeps the reduction loop geometric
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > b) q += 1;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    long m = A.rows(), n = A.cols();
    SnfWork w{A, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
              IntMatrix::identity(n)};

    long t = 0;
    long limit = std::min(m, n);
    while (t < limit) {
        for (;;) {
            // pivot: smallest nonzero absolute value, ties by lowest (row, col)
            long pi = -1, pj = -1;
            Int best;
            for (long i = t; i < m; ++i)
                for (long j = t; j < n; ++j) {
                    const Int& x = w.D.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                pi = pj = -1;  // all-zero tail
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if (w.D.at(t, t) < 0) w.negate_row(t);

            // one nearest-division pass over column t and row t; leftovers
            // are at most half the pivot, so the next pivot selection halves
            bool clean = true;
            for (long i = t + 1; i < m; ++i) {
                if (w.D.at(i, t) == 0) continue;
                w.row_sub(i, t, nearest_quotient(w.D.at(i, t), w.D.at(t, t)));
                if (w.D.at(i, t) != 0) clean = false;
            }
            for (long j = t + 1; j < n; ++j) {
                if (w.D.at(t, j) == 0) continue;
                w.col_sub(j, t, nearest_quotient(w.D.at(t, j), w.D.at(t, t)));
                if (w.D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility fix-up: pivot must divide the remaining block
            long bi = -1;
            for (long i = t + 1; i < m && bi < 0; ++i)
                for (long j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(w.D.at(i, j).get_mpz_t(), w.D.at(t, t).get_mpz_t())) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            w.row_sub(t, bi, Int(-1));  // row t += row bi, then keep reducing
        }
        if (w.D.at(t, t) == 0) break;
        ++t;
    }

    SmithDecomposition out;
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    out.D = std::move(w.D);
    out.diag.resize(static_cast<std::size_t>(limit));
    for (long i = 0; i < limit; ++i) {
        out.diag[static_cast<std::size_t>(i)] = out.D.at(i, i);
        if (out.D.at(i, i) != 0) out.rank = i + 1;
    }
    return out;
}

IntMatrix saturated_kernel(const IntMatrix& A) {
    SmithDecomposition s = smith_normal_form(A);
    std::vector<long> idx;
    for (long j = 0; j < A.cols(); ++j) {
        bool zero_col = j >= static_cast<long>(s.diag.size()) ||
                        s.diag[static_cast<std::size_t>(j)] == 0;
        if (zero_col) idx.push_back(j);
    }
    return s.V.select_columns(idx);
}

IntMatrix image_basis(const IntMatrix& A) {
    SmithDecomposition s = smith_normal_form(A);
    // columns of A*V = Uinv*D; the nonzero ones are d_j * (col j of Uinv)
    IntMatrix r(A.rows(), s.rank);
    for (long j = 0; j < s.rank; ++j)
        for (long i = 0; i < A.rows(); ++i)
            r.at(i, j) = s.diag[static_cast<std::size_t>(j)] * s.Uinv.at(i, j);
    return r;
}

IntMatrix solve_exact(const SmithDecomposition& s, long amb_rows, long amb_cols,
                      const IntMatrix& B) {
    if (B.rows() != amb_rows) throw BadArgumentError("solve_exact shape mismatch");
    if (s.rank != amb_cols)
        throw BadArgumentError("solve_exact requires independent ambient columns");
    IntMatrix UB = s.U.mul(B);
    IntMatrix Y(amb_cols, B.cols());
    for (long c = 0; c < B.cols(); ++c) {
        for (long i = 0; i < amb_rows; ++i) {
            const Int& v = UB.at(i, c);
            if (i < amb_cols) {
                const Int& d = s.diag[static_cast<std::size_t>(i)];
                if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
                    throw ValidationError("containment violation: vector is not an integral "
                                          "combination of the ambient basis");
                Int q;
                mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
                Y.at(i, c) = q;
            } else if (v != 0) {
                throw ValidationError("containment violation: vector lies outside the ambient "
                                      "lattice span");
            }
        }
    }
    return s.V.mul(Y);
}

bool is_unimodular(const IntMatrix& U) {
    if (U.rows() != U.cols()) return false;
    Int d = U.det();
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
    if (!is_unimodular(U)) throw ValidationError("matrix is not unimodular");
    SmithDecomposition s = smith_normal_form(U);
    // U = Us^-1 * I * Vs^-1, so U^-1 = Vs * Us
    return s.V.mul(s.U);
}

}  // namespace zplat
