#pragma once

#include <map>

#include "ssideal/report.hpp"
#include "ssideal/resolution.hpp"

namespace ssideal {

/// Hilbert function with finite support (finite-length modules).
struct GradedHilbertFunction {
    std::map<int, long long> values;  // degree -> dim, zeros omitted

    bool is_zero() const { return values.empty(); }
    long long total() const {
        long long s = 0;
        for (const auto& [d, v] : values) s += v;
        return s;
    }
    long long at(int d) const {
        auto it = values.find(d);
        return it == values.end() ? 0 : it->second;
    }
    /// Matlis dual: h^∨(i) = h(-i).
    GradedHilbertFunction dual() const {
        GradedHilbertFunction r;
        for (const auto& [d, v] : values) r.values[-d] = v;
        return r;
    }
    bool operator==(const GradedHilbertFunction&) const = default;
    std::string str() const;
};

/// Classification of a graded subquotient N/M.
struct SubquotientProfile {
    enum Kind { Zero, Finite, Infinite } kind = Zero;
    GradedHilbertFunction h;  // finite-length case
    int dim = -1;             // Krull dimension (all cases)

    bool is_zero() const { return kind == Zero; }
};

/// N/M for submodules M ⊆ N of a common free module: dimension from the
/// lead-term support of the relation module, Hilbert function by degree-wise
/// counting when finite length.
SubquotientProfile subquotient_profile(const Submodule& N, const Submodule& M,
                                       int degree_cap = -1);

struct ExtProfile {
    int n = 0;
    int projective_dimension = 0;
    FreeResolution resolution;
    std::map<int, SubquotientProfile> ext;  // j -> Ext^j(M, S(-n))
};

/// Ext^j(M, S(-n)) for all j, from the dualized minimal free resolution of
/// M = coker(presentation).
ExtProfile ext_profile(const ModuleHom& presentation, int degree_cap = -1);

struct LocalCohomologyProfile {
    int dim = 0;
    int depth = 0;  // n - projective dimension (Auslander-Buchsbaum)
    std::map<int, SubquotientProfile> h;  // i -> H^i_m(S/I), for i <= dim
    bool generalized_cm = false;          // H^i finite length for all i < dim
    ExtProfile ext;
};

/// H^i_m(S/I) = Ext^{n-i}(S/I, S(-n))^dual by graded local duality.
LocalCohomologyProfile local_cohomology_profile(const Submodule& ideal,
                                                int degree_cap = -1);

struct SingleSpotResult {
    bool yes = false;
    int t = 0;
    GradedHilbertFunction spot;  // the non-trivial value N
    std::string reason;
    LocalCohomologyProfile profile;
};

/// Single spot iff exactly one i < dim S/I carries nonzero H^i, that i is the
/// depth, and all H^i (i < dim) have finite length.
SingleSpotResult single_spot_check(const Submodule& ideal, int degree_cap = -1);

/// The equivalence clauses for a maximal generalized CM module M with
/// H^{t+1} = K, H^{n-1} = N and nothing else below n-1, verified at the
/// Betti/exact-sequence level.
Report theorem_main1_check(const ModuleHom& presentation, int expected_t,
                           const GradedHilbertFunction& expected_N,
                           int degree_cap = -1);

}  // namespace ssideal
