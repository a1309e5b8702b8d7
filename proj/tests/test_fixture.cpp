#include <doctest.h>

#include <fstream>

#include "ssideal/fixture.hpp"

using namespace ssideal;

#ifndef SSIDEAL_FIXTURE_DIR
#define SSIDEAL_FIXTURE_DIR "fixtures"
#endif

namespace {
std::string fixture_path(const std::string& name) {
    return std::string(SSIDEAL_FIXTURE_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("fixture parsing: minimal and invalid inputs") {
    FixtureFile fx = parse_fixture(
        "[ring]\nn = 6\nfield = \"rationals\"\n[parameters]\nt = 1\nc = 0\nd = 0\n"
        "m_kind = \"E_only\"\n");
    CHECK(fx.n == 6);
    CHECK(fx.t == 1);
    CHECK(fx.kind == MKind::EOnly);

    CHECK_THROWS_AS(parse_fixture("[ring]\nn = 6\n"), FixtureError);  // no parameters
    CHECK_THROWS_AS(parse_fixture("[ring]\nn = 6\nwhat = 1\n[parameters]\nt = 0\n"),
                    FixtureError);  // unknown key
    CHECK_THROWS_AS(parse_fixture("[nonsense]\nx = 1\n"), FixtureError);
    CHECK_THROWS_AS(parse_fixture("[ring]\nn = \"six\"\n[parameters]\nt = 0\n"),
                    FixtureError);
}

TEST_CASE("fixture parsing: arrays, comments, variants") {
    FixtureFile fx = parse_fixture(
        "# a comment\n"
        "[ring]\nn = 6\nfield = \"rationals\"\n"
        "[parameters]\nt = 0\nc = 2\nd = 1\nm_kind = \"E_plus_E\"\n"
        "[witness]\n"
        "betas = [\n  \"e[1]\",  # inline trailing entries\n  \"e[2]\",\n]\n"
        "a = \"x1 A[1,2,3,4,5,6]\"\n"
        "b = \"-x2^5 B[5,6]\"\n"
        "[sequence]\nF_twists = [10, 7, 7]\n"
        "[variants]\nbeta_2 = [\"e[2]\", \"e[3]\"]\n");
    CHECK(fx.betas.size() == 2);
    CHECK(fx.b_expr.has_value());
    REQUIRE(fx.f_twists.has_value());
    CHECK(fx.f_twists->size() == 3);
    CHECK(fx.variants.count("beta_2") == 1);
}

TEST_CASE("all shipped fixtures verify") {
    for (const char* name :
         {"example1.toml", "example2.toml", "example3.toml", "example1_trivial.toml"}) {
        CAPTURE(name);
        FixtureFile fx = load_fixture(fixture_path(name));
        FixtureOutcome outcome = verify_fixture(fx, FixtureRunOptions{});
        if (!outcome.pass) MESSAGE(outcome.report.to_text());
        CHECK(outcome.pass);
    }
}

TEST_CASE("reports are byte-identical across runs") {
    FixtureFile fx = load_fixture(fixture_path("example1.toml"));
    FixtureOutcome a = verify_fixture(fx, FixtureRunOptions{});
    FixtureOutcome b = verify_fixture(fx, FixtureRunOptions{});
    CHECK(a.report.to_json() == b.report.to_json());
    // the JSON rows carry the {check, status, lhs, rhs, witness?, notes} schema
    CHECK(a.report.to_json().find("\"check\"") != std::string::npos);
    CHECK(a.report.to_json().find("\"status\"") != std::string::npos);
}

TEST_CASE("kernel-tail flag: both readings verify example1") {
    FixtureFile fx = load_fixture(fixture_path("example1.toml"));
    FixtureRunOptions opts;
    opts.tail = KernelTail::Et1;
    FixtureOutcome outcome = verify_fixture(fx, opts);
    if (!outcome.pass) MESSAGE(outcome.report.to_text());
    CHECK(outcome.pass);
}
