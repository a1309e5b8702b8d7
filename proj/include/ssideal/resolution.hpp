#pragma once

#include <map>
#include <string>
#include <vector>

#include "ssideal/groebner.hpp"
#include "ssideal/intpoly.hpp"

namespace ssideal {

/// Chain of free modules F_len → … → F_1 → F_0 with maps[k] : F_{k+1} → F_k.
/// The augmentation describes coker(F_1 → F_0).
struct FreeResolution {
    std::vector<ModuleHom> maps;
    std::string augmentation;

    int length() const { return static_cast<int>(maps.size()); }
    const GradedFreeModule& module_at(int i) const {
        return i == 0 ? maps.front().target() : maps[static_cast<size_t>(i - 1)].source();
    }
    /// True when every map has all entries in 𝔪.
    bool is_minimal() const;
};

/// β_{i,j} read off the twists of F_i.
struct GradedBettiTable {
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    long long total(int i) const;
    std::string str() const;
};

GradedBettiTable betti_table(const FreeResolution& res);

/// Q(λ) = Σ_{i,j} (-1)^i β_{i,j} λ^j.
IntPoly hilbert_numerator(const GradedBettiTable& table);

/// Minimal free resolution of coker(presentation) by iterated syzygies with
/// minimal generating sets; unit entries of the presentation are pivoted out
/// first. Stops when the kernel vanishes or at max_length maps.
FreeResolution minimal_free_resolution(const ModuleHom& presentation, int max_length,
                                       int degree_cap = -1);

/// Split off all trivial S(-a) ≅ S(-a) summands: repeatedly pivot out unit
/// entries, updating the two adjacent maps. Preserves homotopy type and the
/// augmented cokernel.
std::vector<ModuleHom> minimalize_complex(std::vector<ModuleHom> maps);

struct ExactnessReport {
    bool compositions_zero = true;
    bool exact = true;
    std::string detail;  // first failure, if any
    bool ok() const { return compositions_zero && exact; }
};

/// Certify ∂∘∂ = 0 exactly and ker = im at interior spots by graded-piece
/// dimension counts for all degrees ≤ max_degree.
ExactnessReport certify_complex(const std::vector<ModuleHom>& maps, int max_degree);

/// Degree window that covers all generator twists of the complex plus a
/// safety margin.
int complex_degree_window(const std::vector<ModuleHom>& maps, int margin = 4);

}  // namespace ssideal
