#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bounds.hpp"
#include "yakovlev.hpp"

using namespace zplat;

TEST_CASE("diagrams of catalog lattices") {
    for (long j = 0; j <= 2; ++j) {
        YakovlevDiagram d = build_diagram(permutation_lattice(3, 2, j));
        for (const FModule& m : d.modules) CHECK(m.group.trivial());
        for (const ModuleMap& a : d.alpha) CHECK(a.matrix.rows() == 0);
    }
    YakovlevDiagram z = build_diagram(cyclotomic_lattice(3, 1, 1));
    REQUIRE(z.n == 1);
    CHECK(z.modules[0].group.order() == 3);
    CHECK(build_diagram(permutation_lattice(3, 1, 1)).modules[0].group.trivial());
}

TEST_CASE("axioms hold for every constructed diagram") {
    std::vector<Lattice> zoo = {
        cyclotomic_lattice(3, 2, 1), cyclotomic_lattice(3, 2, 2), augmentation_ideal(3, 2),
        direct_sum(cyclotomic_lattice(3, 2, 2), permutation_lattice(3, 2, 2))};
    Rng64 rng(7);
    for (int t = 0; t < 6; ++t) zoo.push_back(random_lattice(3, 2, rng.next(), 9).lattice);
    for (const Lattice& m : zoo) CHECK_NOTHROW(check_axioms(build_diagram(m)));
}

TEST_CASE("equivalence: reflexive, permutation-stable, size-aware") {
    Lattice base = cyclotomic_lattice(3, 2, 2);
    YakovlevDiagram d = build_diagram(base);
    CHECK(are_equivalent(d, d, 1ULL << 22));
    for (long j = 0; j <= 2; ++j) {
        YakovlevDiagram e = build_diagram(direct_sum(base, permutation_lattice(3, 2, j)));
        CHECK(are_equivalent(d, e, 1ULL << 22));
    }
    YakovlevDiagram t = build_diagram(permutation_lattice(3, 1, 1));
    YakovlevDiagram c = build_diagram(cyclotomic_lattice(3, 1, 1));
    CHECK_FALSE(are_equivalent(t, c, 1ULL << 22));
}

TEST_CASE("equivalence is conjugation blind") {
    Lattice base = direct_sum(augmentation_ideal(3, 2), permutation_lattice(3, 2, 1));
    IntMatrix u = IntMatrix::identity(base.rank);
    u.at(0, 1) = 2;
    u.at(3, 5) = -1;
    CHECK(are_equivalent(build_diagram(base), build_diagram(conjugate(base, u)), 1ULL << 22));
}

TEST_CASE("permutation multiplicities solve the triangular system") {
    Lattice m = direct_sum(
        direct_sum(permutation_lattice(3, 2, 0), permutation_lattice(3, 2, 1)),
        direct_sum(permutation_lattice(3, 2, 2), permutation_lattice(3, 2, 2)));
    CharacterProfile zero{3, 2, {0, 0, 0}};
    CHECK(permutation_multiplicities(m, zero) == std::vector<long>{1, 1, 2});

    Lattice mixed = direct_sum(cyclotomic_lattice(3, 2, 2), permutation_lattice(3, 2, 2));
    CharacterProfile ref = character_profile(cyclotomic_lattice(3, 2, 2));
    CHECK(permutation_multiplicities(mixed, ref) == std::vector<long>{0, 0, 1});

    CharacterProfile bad{3, 2, {1, 0, 0}};
    CHECK_THROWS_AS(permutation_multiplicities(permutation_lattice(3, 2, 2), bad),
                    InconsistentError);
}

TEST_CASE("enumeration at the zero constraint") {
    EnumerationResult r = enumerate_diagrams(3, 2, DiagramConstraints{{0, 0}, 729});
    CHECK(r.class_count == 1);
    CHECK(r.diagrams_seen == 1);
}

TEST_CASE("enumeration at d=(1,1) freezes to 7 classes from 10 diagrams") {
    EnumerationResult r = enumerate_diagrams(3, 2, DiagramConstraints{{1, 1}, 729});
    CHECK(r.diagrams_seen == 10);
    CHECK(r.class_count == 7);
    Int bound = diagram_counting_bound(3, 2, {1, 1});
    CHECK(bound == 22);
    CHECK(Int(r.class_count) <= bound);
}

TEST_CASE("enumeration restricted to trivial top module") {
    EnumerationResult r = enumerate_diagrams(3, 2, DiagramConstraints{{1, 1}, 729});
    long with_trivial_top = 0;
    for (const YakovlevDiagram& d : r.representatives)
        if (d.modules[1].group.trivial()) ++with_trivial_top;
    CHECK(with_trivial_top == 2);  // empty and Y_1 at the bottom level
}

TEST_CASE("enumeration is traversal-order independent") {
    EnumerationResult f = enumerate_diagrams(3, 2, DiagramConstraints{{1, 1}, 729}, false);
    EnumerationResult r = enumerate_diagrams(3, 2, DiagramConstraints{{1, 1}, 729}, true);
    CHECK(f.class_count == r.class_count);
    REQUIRE(f.representatives.size() == r.representatives.size());
    for (std::size_t i = 0; i < f.representatives.size(); ++i)
        CHECK(f.representatives[i].to_string() == r.representatives[i].to_string());
}

TEST_CASE("enumeration refusals") {
    CHECK_THROWS_AS(enumerate_diagrams(3, 3, DiagramConstraints{{1, 1, 1}, 729}),
                    UnsupportedError);
    CHECK_THROWS_AS(enumerate_diagrams(3, 2, DiagramConstraints{{1, 1}, 8}), CapExceededError);
}

TEST_CASE("diagram serialization is stable") {
    YakovlevDiagram d = build_diagram(augmentation_ideal(3, 2));
    CHECK(d.to_string() == build_diagram(augmentation_ideal(3, 2)).to_string());
    CHECK(d.to_string().find("diagram p=3 n=2") == 0);
}
