#include "ssideal/report.hpp"

#include <json.hpp>

#include <sstream>

namespace ssideal {

std::string Report::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json row;
        row["check"] = c.check;
        row["status"] = c.pass ? "pass" : "fail";
        row["lhs"] = c.lhs;
        row["rhs"] = c.rhs;
        if (!c.witness.empty()) row["witness"] = c.witness;
        row["notes"] = c.notes;
        arr.push_back(std::move(row));
    }
    return arr.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.check;
        if (!c.lhs.empty() || !c.rhs.empty()) os << ": " << c.lhs << " vs " << c.rhs;
        if (!c.witness.empty()) os << "  (witness: " << c.witness << ")";
        if (!c.notes.empty()) os << "  -- " << c.notes;
        os << "\n";
    }
    return os.str();
}

}  // namespace ssideal
