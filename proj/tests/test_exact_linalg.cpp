#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelian.hpp"
#include "intmatrix.hpp"

using namespace zplat;

namespace {

IntMatrix mat(long rows, long cols, std::initializer_list<long> vals) {
    IntMatrix m(rows, cols);
    auto it = vals.begin();
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = *it++;
    return m;
}

IntMatrix random_matrix(Rng64& rng, long rows, long cols, long height) {
    IntMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            m.at(i, j) =
                static_cast<long>(rng.below(static_cast<std::uint64_t>(2 * height + 1))) - height;
    return m;
}

}  // namespace

TEST_CASE("smith normal form on the worked examples") {
    SmithDecomposition id = smith_normal_form(IntMatrix::identity(2));
    CHECK(id.D.is_identity());
    CHECK(id.rank == 2);

    SmithDecomposition d = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
    CHECK(d.diag[0] == 1);
    CHECK(d.diag[1] == 6);

    SmithDecomposition z = smith_normal_form(IntMatrix::zero(3, 2));
    CHECK(z.D.is_zero());
    CHECK(z.rank == 0);
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng64 rng(99);
    for (int t = 0; t < 60; ++t) {
        long rows = 1 + static_cast<long>(rng.below(5));
        long cols = 1 + static_cast<long>(rng.below(5));
        IntMatrix a = random_matrix(rng, rows, cols, 9);
        SmithDecomposition s = smith_normal_form(a);
        CHECK(s.U.mul(a).mul(s.V) == s.D);
        CHECK(abs(s.U.det()) == 1);
        CHECK(abs(s.V.det()) == 1);
        CHECK(s.U.mul(s.Uinv).is_identity());
        CHECK(s.V.mul(s.Vinv).is_identity());
        for (long i = 0; i + 1 < static_cast<long>(s.diag.size()); ++i) {
            const Int& a0 = s.diag[static_cast<std::size_t>(i)];
            const Int& a1 = s.diag[static_cast<std::size_t>(i + 1)];
            CHECK(a0 >= 0);
            if (a1 != 0) {
                REQUIRE(a0 != 0);
                CHECK(mpz_divisible_p(a1.get_mpz_t(), a0.get_mpz_t()));
            }
        }
    }
}

TEST_CASE("cokernel order of a full-rank square matrix is |det|") {
    Rng64 rng(7);
    int seen = 0;
    for (int t = 0; t < 40 && seen < 20; ++t) {
        long n = 1 + static_cast<long>(rng.below(4));
        IntMatrix a = random_matrix(rng, n, n, 6);
        Int det = a.det();
        if (det == 0) continue;
        ++seen;
        SmithDecomposition s = smith_normal_form(a);
        Int coker = 1;
        for (const Int& x : s.diag) coker *= x;
        CHECK(coker == abs(det));
    }
    CHECK(seen >= 10);
}

TEST_CASE("saturated kernel worked examples") {
    CHECK(saturated_kernel(mat(1, 1, {3})).cols() == 0);

    IntMatrix k = saturated_kernel(mat(2, 2, {1, 1, 1, 1}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == -k.at(1, 0));
    CHECK(abs(k.at(0, 0)) == 1);

    CHECK(saturated_kernel(IntMatrix::zero(3, 3)).cols() == 3);
}

TEST_CASE("saturated kernel annihilates and is saturated") {
    Rng64 rng(21);
    for (int t = 0; t < 40; ++t) {
        long rows = 1 + static_cast<long>(rng.below(4));
        long cols = 1 + static_cast<long>(rng.below(4));
        IntMatrix a = random_matrix(rng, rows, cols, 5);
        IntMatrix k = saturated_kernel(a);
        CHECK(a.mul(k).is_zero());
        if (k.cols() > 0) {
            SmithDecomposition s = smith_normal_form(k);
            CHECK(s.rank == k.cols());
            for (long i = 0; i < s.rank; ++i) CHECK(s.diag[static_cast<std::size_t>(i)] == 1);
        }
    }
}

TEST_CASE("quotient invariants worked examples") {
    IntMatrix i2 = IntMatrix::identity(2);
    CHECK(quotient_invariants(i2.scalar_mul(3), i2, 3).group.exponents ==
          std::vector<long>{1, 1});
    CHECK(quotient_invariants(mat(2, 2, {9, 0, 0, 3}), i2, 3).group.exponents ==
          std::vector<long>{2, 1});
    CHECK(quotient_invariants(i2, i2, 3).group.trivial());
}

TEST_CASE("quotient invariants error paths") {
    IntMatrix i2 = IntMatrix::identity(2);
    CHECK_THROWS_AS(quotient_invariants(i2, i2.scalar_mul(2), 3), ValidationError);
    CHECK_THROWS_AS(quotient_invariants(mat(2, 2, {2, 0, 0, 1}), i2, 3), InconsistentError);
    CHECK_THROWS_AS(quotient_invariants(mat(2, 1, {1, 0}), i2, 3), BadArgumentError);
}

TEST_CASE("quotient invariants stable under unimodular basis change") {
    Rng64 rng(5);
    for (int t = 0; t < 20; ++t) {
        IntMatrix u = IntMatrix::identity(3);
        for (int s = 0; s < 8; ++s) {
            long i = static_cast<long>(rng.below(3));
            long j = static_cast<long>(rng.below(3));
            if (i == j) continue;
            long c = static_cast<long>(rng.below(3)) - 1;
            for (long k = 0; k < 3; ++k) u.at(i, k) += c * u.at(j, k);
        }
        IntMatrix rel = mat(3, 3, {3, 0, 0, 0, 27, 0, 0, 0, 1});
        AbelianPGroup g = quotient_invariants(u.mul(rel), u, 3).group;
        CHECK(g.exponents == std::vector<long>{3, 1});
    }
}

TEST_CASE("quotient coordinates invert the canonical generators") {
    IntMatrix amb = IntMatrix::identity(3);
    IntMatrix sub = mat(3, 3, {9, 0, 0, 0, 3, 0, 0, 0, 1});
    FiniteQuotient q = quotient_invariants(sub, amb, 3);
    REQUIRE(q.group.exponents == std::vector<long>{2, 1});
    for (long j = 0; j < q.group.rank_p(); ++j) {
        std::vector<Int> c = q.coords(q.generator(j));
        for (long r = 0; r < q.group.rank_p(); ++r) CHECK(c[static_cast<std::size_t>(r)] == (r == j ? 1 : 0));
    }
}

TEST_CASE("abelian group canonicalization") {
    AbelianPGroup g(3, {1, 0, 3, 2});
    CHECK(g.exponents == std::vector<long>{3, 2, 1});
    CHECK(g.rank_p() == 3);
    CHECK(g.v_p() == 6);
    CHECK(g.exponent() == 27);
    CHECK_THROWS_AS(AbelianPGroup(4, {1}), BadArgumentError);
}

TEST_CASE("unimodular inverse") {
    IntMatrix u = mat(2, 2, {1, 2, 0, 1});
    IntMatrix v = unimodular_inverse(u);
    CHECK(u.mul(v).is_identity());
    CHECK_THROWS_AS(unimodular_inverse(mat(2, 2, {2, 0, 0, 1})), ValidationError);
}
