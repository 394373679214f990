#pragma once

#include "abelian.hpp"
#include "fpmat.hpp"

#include <cstdint>
#include <vector>

namespace zplat {

// Machine-word view of a finite abelian p-group: per-coordinate moduli
// p^{e_i}.  All the brute-force searches (isomorphism testing, automorphism
// enumeration, diagram enumeration) run on this representation.
struct GroupShape {
    std::uint64_t p = 3;
    std::vector<long> exps;            // nonincreasing
    std::vector<std::uint64_t> mod;    // p^{e_i}

    GroupShape() = default;
    explicit GroupShape(const AbelianPGroup& g) : p(g.p), exps(g.exponents) {
        mod.reserve(exps.size());
        for (long e : exps) {
            std::uint64_t v = 1;
            for (long k = 0; k < e; ++k) v *= p;
            mod.push_back(v);
        }
    }

    long rank() const { return static_cast<long>(exps.size()); }
    std::uint64_t order() const {
        std::uint64_t v = 1;
        for (std::uint64_t m : mod) v *= m;
        return v;
    }
};

// Homomorphism matrix between GroupShapes: entry (i,j) lives mod target p^{e_i}.
struct GMap {
    long rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    GMap() = default;
    GMap(long r, long c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}

    static GMap identity(long n) {
        GMap m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::uint64_t& at(long i, long j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    std::uint64_t at(long i, long j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

    bool operator==(const GMap& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator<(const GMap& o) const { return a < o.a; }
};

// target <- this o inner; rowmod are the moduli of the final target.
inline GMap gmap_mul(const std::vector<std::uint64_t>& rowmod, const GMap& x, const GMap& y) {
    GMap r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            std::uint64_t v = x.at(i, k);
            if (!v) continue;
            std::uint64_t m = rowmod[static_cast<std::size_t>(i)];
            for (long j = 0; j < y.cols; ++j)
                r.at(i, j) = (r.at(i, j) + v % m * (y.at(k, j) % m)) % m;
        }
    return r;
}

inline GMap gmap_pow(const GroupShape& s, const GMap& x, std::uint64_t e) {
    GMap result = GMap::identity(x.rows);
    GMap base = x;
    while (e) {
        if (e & 1) result = gmap_mul(s.mod, result, base);
        e >>= 1;
        if (e) base = gmap_mul(s.mod, base, base);
    }
    return result;
}

inline bool gmap_is_identity(const GroupShape& s, const GMap& x) {
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) {
            std::uint64_t want = i == j ? 1 % s.mod[static_cast<std::size_t>(i)] : 0;
            if (x.at(i, j) % s.mod[static_cast<std::size_t>(i)] != want) return false;
        }
    return true;
}

// An endomorphism/hom is invertible iff its reduction mod p is.
inline bool gmap_invertible(const GroupShape& src, const GroupShape& tgt, const GMap& m) {
    if (src.rank() != tgt.rank() || src.exps != tgt.exps) return false;
    FpMat red(m.rows, m.cols, src.p);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) red.at(i, j) = m.at(i, j) % src.p;
    return fp_invertible(red);
}

// Iterates over every well-defined homomorphism source -> target: entry
// (i,j) ranges over the multiples of p^{max(0, f_i - e_j)} below p^{f_i}.
class HomEnumerator {
public:
    HomEnumerator(const GroupShape& src, const GroupShape& tgt) : src_(src), tgt_(tgt) {
        long r = tgt.rank(), c = src.rank();
        step_.assign(static_cast<std::size_t>(r * c), 1);
        count_.assign(static_cast<std::size_t>(r * c), 1);
        total_ = 1;
        overflow_ = false;
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) {
                long gap = tgt.exps[static_cast<std::size_t>(i)] -
                           src.exps[static_cast<std::size_t>(j)];
                std::uint64_t st = 1;
                for (long k = 0; k < gap; ++k) st *= tgt.p;
                std::uint64_t cnt = 1;
                long upto = std::min(tgt.exps[static_cast<std::size_t>(i)],
                                     src.exps[static_cast<std::size_t>(j)]);
                for (long k = 0; k < upto; ++k) cnt *= tgt.p;
                step_[static_cast<std::size_t>(i * c + j)] = st;
                count_[static_cast<std::size_t>(i * c + j)] = cnt;
                if (total_ > (1ULL << 62) / cnt)
                    overflow_ = true;
                else
                    total_ *= cnt;
            }
        reset();
    }

    std::uint64_t total() const { return total_; }
    bool overflow() const { return overflow_; }

    void reset() {
        digits_.assign(step_.size(), 0);
        done_ = false;
        first_ = true;
    }

    // Advances to the next map; returns false when exhausted.  The first
    // call yields the zero map.
    bool next(GMap& out) {
        if (done_) return false;
        if (first_) {
            first_ = false;
        } else {
            std::size_t k = 0;
            for (; k < digits_.size(); ++k) {
                if (++digits_[k] < count_[k]) break;
                digits_[k] = 0;
            }
            if (k == digits_.size()) {
                done_ = true;
                return false;
            }
        }
        out = GMap(tgt_.rank(), src_.rank());
        for (std::size_t k = 0; k < digits_.size(); ++k) out.a[k] = digits_[k] * step_[k];
        return true;
    }

private:
    GroupShape src_, tgt_;
    std::vector<std::uint64_t> step_, count_;
    std::vector<std::uint64_t> digits_;
    std::uint64_t total_ = 1;
    bool overflow_ = false, done_ = false, first_ = true;
};

inline bool gmap_equivariant(const GroupShape& tgt, const GMap& act_src, const GMap& act_tgt,
                             const GMap& m) {
    return gmap_mul(tgt.mod, act_tgt, m) == gmap_mul(tgt.mod, m, act_src);
}

}  // namespace zplat
