// Exercises the shared library strictly through the public C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zplat.h>

#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    zpl_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("status names") {
    CHECK(std::string(zpl_status_name(ZPL_OK)) == "ok");
    CHECK(std::string(zpl_status_name(ZPL_ERR_SYNTAX)) == "syntax_error");
    CHECK(std::string(zpl_status_name(ZPL_ERR_CAP)) == "cap_exceeded");
}

TEST_CASE("parse, inspect, serialize") {
    const char* doc =
        R"({"format_version":"1","p":3,"n":1,"rank":3,)"
        R"("action":[["0","0","1"],["1","0","0"],["0","1","0"]]})";
    zpl_lattice* lat = nullptr;
    char* diag = nullptr;
    REQUIRE(zpl_lattice_parse(doc, 1, &lat, &diag) == ZPL_OK);
    CHECK(zpl_lattice_rank(lat) == 3);
    CHECK(zpl_lattice_p(lat) == 3);
    CHECK(zpl_lattice_n(lat) == 1);

    char* text = nullptr;
    REQUIRE(zpl_lattice_serialize(lat, &text, &diag) == ZPL_OK);
    std::string one = take(text);
    zpl_lattice* lat2 = nullptr;
    REQUIRE(zpl_lattice_parse(one.c_str(), 1, &lat2, &diag) == ZPL_OK);
    char* text2 = nullptr;
    REQUIRE(zpl_lattice_serialize(lat2, &text2, &diag) == ZPL_OK);
    CHECK(take(text2) == one);
    zpl_lattice_free(lat2);
    zpl_lattice_free(lat);
}

TEST_CASE("error statuses carry diagnostics") {
    zpl_lattice* lat = nullptr;
    char* diag = nullptr;
    CHECK(zpl_lattice_parse("{\"x\": ", 0, &lat, &diag) == ZPL_ERR_SYNTAX);
    std::string msg = take(diag);
    CHECK(msg.find("line") != std::string::npos);

    diag = nullptr;
    const char* wrong_order =
        R"({"format_version":"1","p":3,"n":1,"rank":2,"action":[["0","1"],["1","0"]]})";
    CHECK(zpl_lattice_parse(wrong_order, 0, &lat, &diag) == ZPL_ERR_VALIDATION);
    take(diag);

    diag = nullptr;
    CHECK(zpl_lattice_parse(nullptr, 0, &lat, &diag) == ZPL_ERR_BAD_ARGUMENT);
    take(diag);
}

TEST_CASE("catalog handles and reports") {
    zpl_lattice* lat = nullptr;
    char* diag = nullptr;
    REQUIRE(zpl_lattice_catalog("cyclotomic", 3, 2, 2, &lat, &diag) == ZPL_OK);
    CHECK(zpl_lattice_rank(lat) == 6);

    char* out = nullptr;
    REQUIRE(zpl_report_cohomology(lat, 1, &out, &diag) == ZPL_OK);
    std::string coh = take(out);
    CHECK(coh.find("H1 invariants: (1,1,1)") != std::string::npos);

    out = nullptr;
    CHECK(zpl_report_cohomology(lat, 5, &out, &diag) == ZPL_ERR_BAD_LEVEL);
    take(diag);

    out = nullptr;
    REQUIRE(zpl_report_pipeline(lat, &out, &diag) == ZPL_OK);
    std::string pipe = take(out);
    CHECK(pipe.find("axioms: ok") != std::string::npos);

    out = nullptr;
    REQUIRE(zpl_report_decompose(lat, 1, nullptr, &out, &diag) == ZPL_OK);
    take(out);
    zpl_lattice_free(lat);

    REQUIRE(zpl_lattice_catalog("permutation", 3, 1, 0, &lat, &diag) == ZPL_OK);
    out = nullptr;
    REQUIRE(zpl_report_decompose(lat, 1, "0,0", &out, &diag) == ZPL_OK);
    std::string dec = take(out);
    CHECK(dec.find("multiplicities a_0..a_n: 1 0") != std::string::npos);
    zpl_lattice_free(lat);

    CHECK(zpl_lattice_catalog("nope", 3, 1, 0, &lat, &diag) == ZPL_ERR_BAD_ARGUMENT);
    take(diag);
}

TEST_CASE("table and bound reports") {
    char* out = nullptr;
    char* diag = nullptr;
    REQUIRE(zpl_report_ext(3, 1, &out, &diag) == ZPL_OK);
    std::string ext = take(out);
    CHECK(ext.find("[ext^1 over (Z/p^2)[C_p]]") != std::string::npos);

    long caps[2] = {1, 1};
    out = nullptr;
    REQUIRE(zpl_report_enumerate(3, caps, 2, 729, &out, &diag) == ZPL_OK);
    std::string en = take(out);
    CHECK(en.find("equivalence classes: 7") != std::string::npos);
    CHECK(en.find("counting bound: 22") != std::string::npos);

    out = nullptr;
    REQUIRE(zpl_report_bounds("thmB1", "p=3,r=1,delta=0", &out, &diag) == ZPL_OK);
    CHECK(take(out).find("value: 43046721") != std::string::npos);

    out = nullptr;
    CHECK(zpl_report_bounds("thmB1", "p=3", &out, &diag) == ZPL_ERR_BAD_ARGUMENT);
    std::string msg = take(diag);
    CHECK(msg.find("missing field") != std::string::npos);

    out = nullptr;
    long big[2] = {2, 2};
    CHECK(zpl_report_enumerate(3, big, 2, 9, &out, &diag) == ZPL_ERR_CAP);
    take(diag);
}

TEST_CASE("random lattice handle") {
    zpl_lattice* lat = nullptr;
    char* diag = nullptr;
    REQUIRE(zpl_lattice_random(3, 2, 99, 10, &lat, &diag) == ZPL_OK);
    CHECK(zpl_lattice_rank(lat) >= 1);
    CHECK(zpl_lattice_rank(lat) <= 10);
    char* out = nullptr;
    REQUIRE(zpl_report_pipeline(lat, &out, &diag) == ZPL_OK);
    take(out);
    zpl_lattice_free(lat);
}
