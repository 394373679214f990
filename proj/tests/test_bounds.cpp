#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bounds.hpp"

using namespace zplat;

TEST_CASE("rank bound evaluator") {
    CHECK(thm_a_bound(3, 3, 0, 2) == 162);
    CHECK(thm_a_bound(3, 3, 0, 0) == 0);
    CHECK(thm_a_bound(9, 9, 1, 1) == 4374);
    CHECK_THROWS_AS(thm_a_bound(3, 9, 0, 1), BadArgumentError);  // |P| must divide |G|
}

TEST_CASE("bounded-order conjugacy class counts") {
    CHECK(conjugacy_classes_of_bounded_order(AbelianPGroup(3, {}), 3) == 1);
    CHECK(conjugacy_classes_of_bounded_order(AbelianPGroup(3, {1}), 3) == 1);
    CHECK(conjugacy_classes_of_bounded_order(AbelianPGroup(3, {1}), 27) == 1);
    CHECK(conjugacy_classes_of_bounded_order(AbelianPGroup(3, {1, 1}), 3) == 2);
    // filter removed: all 8 conjugacy classes of GL_2(F_3)
    CHECK(conjugacy_classes_of_bounded_order(AbelianPGroup(3, {1, 1}), 48) == 8);
    CHECK_THROWS_AS(conjugacy_classes_of_bounded_order(AbelianPGroup(3, {1, 1, 1, 1, 1}), 3),
                    CapExceededError);
}

TEST_CASE("generator orbits agree with full enumeration") {
    std::vector<AbelianPGroup> zoo = {
        AbelianPGroup(3, {1}),    AbelianPGroup(3, {1, 1}),    AbelianPGroup(3, {2}),
        AbelianPGroup(3, {2, 1}), AbelianPGroup(3, {1, 1, 1}), AbelianPGroup(3, {3}),
        AbelianPGroup(3, {2, 2}), AbelianPGroup(5, {1, 1}),    AbelianPGroup(5, {2}),
    };
    for (const AbelianPGroup& a : zoo)
        for (unsigned long e = 0; e <= 2; ++e) {
            Int m = pow_int(a.p, e);
            CHECK(conjugacy_classes_of_bounded_order(a, m) == conjugacy_classes_reference(a, m));
        }
}

TEST_CASE("counting bound") {
    CHECK(diagram_counting_bound(3, 2, {0, 0}) == 1);
    CHECK(diagram_counting_bound(3, 1, {1}) == 2);  // 1 + c_1(Z/3) with identity-only filter
    CHECK(diagram_counting_bound(3, 2, {1, 1}) == 22);
    CHECK(diagram_counting_bound(5, 1, {1}) == 2);
    CHECK_THROWS_AS(diagram_counting_bound(3, 2, {1}), BadArgumentError);
}

TEST_CASE("refined counting product") {
    CountingRefInput trivial{{0, 0}, {3, 2}, {1}, {1}, {0, 0}};
    CHECK(counting_ref_bound(trivial) == 1);

    CountingRefInput ex{{1, 1}, {3, 2}, {1}, {1}, {0, 0}};
    CHECK(counting_ref_bound(ex) == Int(3 + 1) * 3);  // binom(1+p,1) * binom(3,1)

    CountingRefInput map_factor{{0, 0}, {1, 1}, {9}, {1}, {0, 2}};
    CHECK(counting_ref_bound(map_factor) == 81);  // |fix|^gamma_2 = 9^2

    CountingRefInput bad{{1}, {1, 1}, {}, {}, {1}};
    CHECK_THROWS_AS(counting_ref_bound(bad), BadArgumentError);
}

TEST_CASE("fixed-part bound") {
    CHECK(fixedpart_bound(1, 2, 1, 1).value == 4);
    ClampedBound c = fixedpart_bound(1, 2, 0, 0);
    CHECK(c.value == 0);
    CHECK(c.raw == -1);
    CHECK(c.clamped);
    CHECK(fixedpart_bound(2, 3, 1, 0).value == 4);
    CHECK_THROWS_AS(fixedpart_bound(2, 2, 1, 1), BadLevelError);
    CHECK_THROWS_AS(fixedpart_bound(0, 2, 1, 1), BadLevelError);
}

TEST_CASE("class-group rank transfer bound") {
    CHECK(rosen_bound(3, 1, 0) == 3);
    CHECK(rosen_bound(1, 4, 2) == 6);
    CHECK(rosen_bound(9, 2, 1) == 27);
    CHECK_THROWS_AS(rosen_bound(0, 1, 1), BadArgumentError);
}

TEST_CASE("restriction/corestriction count exponents at degree p^3") {
    ResCores3Exponents z = res_cores3_bounds(3, 0, 0);
    CHECK(z.restriction == 0);
    CHECK(z.corestriction == 0);
    ResCores3Exponents a = res_cores3_bounds(3, 1, 0);
    CHECK(a.restriction == 90);
    CHECK(a.corestriction == 24);
    ResCores3Exponents b = res_cores3_bounds(3, 0, 1);
    CHECK(b.restriction == 24);
    CHECK(b.corestriction == 9);
}

TEST_CASE("structure-count bound at degree p^2 coefficients") {
    CHECK(adhoc_n2_bound(3, 0, 0) == 1);
    // p^(3*36) * binom(9,3)^2
    Int expect = pow_int(3UL, 108) * 84 * 84;
    CHECK(adhoc_n2_bound(3, 1, 0) == expect);
    CHECK(adhoc_n2_bound(3, 1, 1) >= adhoc_n2_bound(3, 1, 0));
}

TEST_CASE("headline bounds") {
    CHECK(thm_b1_bound(3, 1, 0) == pow_int(3UL, 16));
    CHECK(thm_b1_bound(3, 0, 1) == pow_int(3UL, 9));
    CHECK(thm_b2_proof_bound(3, 0, 0) == 1);
    CHECK(thm_b2_proof_bound(3, 1, 0) >= 1);
}

TEST_CASE("closed form dominates the unsimplified product") {
    for (unsigned long p : {3UL, 5UL})
        for (long r = 0; r <= 3; ++r)
            for (long d = 0; d <= 3; ++d) {
                if (r + d < 1) continue;
                CHECK(thm_b1_bound(p, r, d) >= thm_b1_presimplification(p, r, d));
            }
}

TEST_CASE("monotone in both arithmetic inputs") {
    for (long r = 0; r <= 3; ++r)
        for (long d = 0; d <= 3; ++d) {
            CHECK(thm_b1_bound(3, r + 1, d) >= thm_b1_bound(3, r, d));
            CHECK(thm_b1_bound(3, r, d + 1) >= thm_b1_bound(3, r, d));
            CHECK(adhoc_n2_bound(3, r + 1, d) >= adhoc_n2_bound(3, r, d));
            CHECK(thm_b2_proof_bound(3, r, d + 1) >= thm_b2_proof_bound(3, r, d));
            CHECK(rosen_bound(9, r + 1, d) >= rosen_bound(9, r, d));
            CHECK(fixedpart_bound(1, 3, r + 1, d).value >= fixedpart_bound(1, 3, r, d).value);
            CHECK(fixedpart_bound(1, 3, r, d + 1).value >= fixedpart_bound(1, 3, r, d).value);
        }
}

TEST_CASE("binomial inequality sweep") {
    CHECK(binomial(5UL, 2UL) == 10);  // <= 2^5
    InequalityReport rep = verify_binomial_inequalities();
    CHECK(rep.ok());
    CHECK(rep.checked > 2000);
    // boundary of the hypothesis c >= 2, d >= 3: 2 + 3 <= 3^2
    CHECK(Int(2 + 3) <= pow_int(3UL, 2));
    // c = 1 is excluded from the claim: 1 + d > d^1 would fail, and indeed
    // the sweep never checks it
    InequalityReport small = verify_binomial_inequalities(4, 3, 1);
    CHECK(small.ok());
}
