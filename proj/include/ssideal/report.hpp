#pragma once

#include <string>
#include <vector>

namespace ssideal {

/// One verification check with both sides of the compared quantity and an
/// optional witness (counterexample element, chosen fixture variant, ...).
struct CheckResult {
    std::string check;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string witness;
    std::string notes;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void append(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }

    /// Deterministic JSON (array of {check, status, lhs, rhs, witness?, notes}).
    std::string to_json() const;
    /// One line per check for terminals.
    std::string to_text() const;
};

}  // namespace ssideal
