#pragma once

#include "errors.hpp"

#include <cstdint>
#include <vector>

namespace zplat {

// Dense matrix over the prime field F_p with machine-word entries.  Used for
// the brute-force module theory where exact bignum arithmetic would be
// wasteful.
struct FpMat {
    long rows = 0, cols = 0;
    std::uint64_t p = 3;
    std::vector<std::uint64_t> a;  // row-major, entries in [0, p)

    FpMat() = default;
    FpMat(long r, long c, std::uint64_t p_)
        : rows(r), cols(c), p(p_), a(static_cast<std::size_t>(r * c), 0) {}

    static FpMat identity(long n, std::uint64_t p) {
        FpMat m(n, n, p);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::uint64_t& at(long i, long j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    std::uint64_t at(long i, long j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

    bool operator==(const FpMat& o) const {
        return rows == o.rows && cols == o.cols && p == o.p && a == o.a;
    }

    FpMat mul(const FpMat& o) const {
        if (cols != o.rows || p != o.p) throw BadArgumentError("FpMat product mismatch");
        FpMat r(rows, o.cols, p);
        for (long i = 0; i < rows; ++i)
            for (long k = 0; k < cols; ++k) {
                std::uint64_t x = at(i, k);
                if (!x) continue;
                for (long j = 0; j < o.cols; ++j)
                    r.at(i, j) = (r.at(i, j) + x * o.at(k, j)) % p;
            }
        return r;
    }

    FpMat sub(const FpMat& o) const {
        FpMat r(rows, cols, p);
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = (a[i] + p - o.a[i]) % p;
        return r;
    }

    FpMat pow(unsigned long e) const {
        FpMat result = identity(rows, p);
        FpMat base = *this;
        while (e) {
            if (e & 1) result = result.mul(base);
            e >>= 1;
            if (e) base = base.mul(base);
        }
        return result;
    }
};

inline std::uint64_t fp_inv(std::uint64_t x, std::uint64_t p) {
    // p is prime and small; Fermat
    std::uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Row echelon rank; the input is taken by value.
inline long fp_rank(FpMat m) {
    long rank = 0;
    for (long col = 0; col < m.cols && rank < m.rows; ++col) {
        long piv = -1;
        for (long i = rank; i < m.rows; ++i)
            if (m.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        for (long j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        std::uint64_t inv = fp_inv(m.at(rank, col), m.p);
        for (long j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv % m.p;
        for (long i = 0; i < m.rows; ++i) {
            if (i == rank || !m.at(i, col)) continue;
            std::uint64_t f = m.at(i, col);
            for (long j = col; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) + (m.p - f) * m.at(rank, j)) % m.p;
        }
        ++rank;
    }
    return rank;
}

inline long fp_nullity(const FpMat& m) { return m.cols - fp_rank(m); }

inline bool fp_invertible(const FpMat& m) {
    return m.rows == m.cols && fp_rank(m) == m.rows;
}

// Basis of {x : m x = 0}, columns of the returned matrix.
inline FpMat fp_kernel(FpMat m) {
    long n = m.cols;
    std::vector<long> pivot_col;
    long rank = 0;
    for (long col = 0; col < n && rank < m.rows; ++col) {
        long piv = -1;
        for (long i = rank; i < m.rows; ++i)
            if (m.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        for (long j = 0; j < n; ++j) std::swap(m.at(rank, j), m.at(piv, j));
        std::uint64_t inv = fp_inv(m.at(rank, col), m.p);
        for (long j = col; j < n; ++j) m.at(rank, j) = m.at(rank, j) * inv % m.p;
        for (long i = 0; i < m.rows; ++i) {
            if (i == rank || !m.at(i, col)) continue;
            std::uint64_t f = m.at(i, col);
            for (long j = col; j < n; ++j)
                m.at(i, j) = (m.at(i, j) + (m.p - f) * m.at(rank, j)) % m.p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    FpMat ker(n, n - rank, m.p);
    long k = 0;
    for (long free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        ker.at(free_col, k) = 1;
        for (long r = 0; r < rank; ++r) {
            std::uint64_t v = m.at(r, free_col);
            if (v) ker.at(pivot_col[static_cast<std::size_t>(r)], k) = (m.p - v) % m.p;
        }
        ++k;
    }
    return ker;
}

}  // namespace zplat
