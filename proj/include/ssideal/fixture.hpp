#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssideal/bourbaki.hpp"
#include "ssideal/cohomology.hpp"

namespace ssideal {

struct FixtureError : std::runtime_error {
    explicit FixtureError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Declarative verification input: ring and parameters are required, witness,
/// sequence shape and expectations are optional. Unknown keys are rejected.
struct FixtureFile {
    int n = 0;
    Field field = Field::rationals();
    int t = 0, c = 0, d = 0;
    MKind kind = MKind::EOnly;

    std::vector<std::string> betas;
    std::string a_expr;
    std::optional<std::string> b_expr;

    std::optional<std::vector<int>> f_twists;
    std::optional<std::vector<int>> g_twists;
    std::vector<std::string> f_exprs;

    std::vector<std::string> expected_ideal;
    std::optional<int> expected_codim;
    std::optional<int> expected_spot_t;
    std::optional<long long> expected_spot_total;
    std::optional<bool> expected_nontrivial;

    // ambiguous entries: "beta_4" or "f_1" -> alternative readings
    std::map<std::string, std::vector<std::string>> variants;
};

FixtureFile parse_fixture(const std::string& text);
FixtureFile load_fixture(const std::string& path);

struct FixtureRunOptions {
    KernelTail tail = KernelTail::Et2;
    bool expect_nontrivial = false;
    int degree_cap = -1;
};

struct FixtureOutcome {
    Report report;
    bool pass = false;
    std::optional<BourbakiSequence> sequence;
    std::optional<IdealData> ideal;
};

/// The full verification pipeline a fixture drives: kernel condition,
/// sequence verification, non-triviality, numerical conditions, mapping-cone
/// resolution, single-spot classification. Variant entries are resolved by
/// the engine (homogeneity, then the kernel/membership oracles) and the
/// chosen readings are reported.
FixtureOutcome verify_fixture(const FixtureFile& fx, const FixtureRunOptions& opts);

}  // namespace ssideal
