#pragma once

#include "bigint.hpp"
#include "errors.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zplat {

// Dense matrix with exact integer entries, row-major.  Values are immutable
// in spirit: every operation returns a fresh matrix.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw BadArgumentError("matrix dimensions must be nonnegative");
    }

    static IntMatrix identity(long n);
    static IntMatrix zero(long rows, long cols) { return IntMatrix(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Int& at(long i, long j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Int& at(long i, long j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix add(const IntMatrix& o) const;
    IntMatrix sub(const IntMatrix& o) const;
    IntMatrix negate() const;
    IntMatrix transpose() const;
    IntMatrix pow(unsigned long e) const;  // square matrices only
    IntMatrix scalar_mul(const Int& c) const;

    // block-diagonal juxtaposition
    IntMatrix direct_sum(const IntMatrix& o) const;
    // horizontal concatenation [this | o]
    IntMatrix hconcat(const IntMatrix& o) const;

    IntMatrix column(long j) const;
    std::vector<Int> column_vec(long j) const;
    IntMatrix select_columns(const std::vector<long>& idx) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v

    // Exact determinant by fraction-free (Bareiss) elimination.
    Int det() const;

    std::string to_string() const;

private:
    long rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix from_vector(const std::vector<Int>& v);  // column vector

// U*A*V = D with U, V unimodular and D diagonal with nonnegative entries
// d_1 | d_2 | ... | d_r (then zeros).  Uinv and Vinv are accumulated during
// the reduction, so no inversion is ever performed.
struct SmithDecomposition {
    IntMatrix U, Uinv, D, V, Vinv;
    long rank = 0;                // number of nonzero diagonal entries
    std::vector<Int> diag;       // diagonal of D, length min(rows, cols)
};

// Deterministic SNF: pivot = smallest nonzero absolute value, ties broken by
// lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& A);

// Basis of {x integral : A x = 0}; saturated (the quotient by it is
// torsion-free).  Returns a cols(A) x k matrix whose columns are the basis.
IntMatrix saturated_kernel(const IntMatrix& A);

// Basis of the column lattice of A (a rows(A) x rank matrix).
IntMatrix image_basis(const IntMatrix& A);

// Solves amb * X = B exactly over the integers, where the columns of amb are
// Z-linearly independent.  Throws ValidationError (containment) if some
// column of B is not an integral combination of the columns of amb.
IntMatrix solve_exact(const SmithDecomposition& amb_snf, long amb_rows, long amb_cols,
                      const IntMatrix& B);

bool is_unimodular(const IntMatrix& U);

// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& U);

}  // namespace zplat
