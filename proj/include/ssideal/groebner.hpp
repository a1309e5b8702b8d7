#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ssideal/free_module.hpp"
#include "ssideal/hilbert.hpp"

namespace ssideal {

/// Thrown when an S-pair would exceed the configured internal-degree cap.
struct DegreeCapExceeded : std::runtime_error {
    DegreeCapExceeded(int degree, int cap)
        : std::runtime_error("Groebner degree cap exceeded: S-pair of degree " +
                             std::to_string(degree) + " > cap " + std::to_string(cap)),
          degree(degree),
          cap(cap) {}
    int degree;
    int cap;
};

/// Default internal-degree cap (40), overridable via SSIDEAL_DEGREE_CAP.
int default_degree_cap();

/// One term of a module element: component index, monomial, coefficient.
struct MTerm {
    int comp;
    Monomial mono;
    Scalar coeff;
};

/// Flattened module element, strictly descending under a fixed ModuleOrder.
using FlatElement = std::vector<MTerm>;

FlatElement flatten(const ModuleElement& v, const ModuleOrder& order);
ModuleElement unflatten(const FlatElement& f, const GradedFreeModule& ambient);

/// Reduced Gröbner basis of a submodule, plus the lead-term data used for
/// graded-piece counting.
struct GBData {
    ModuleOrder order;
    std::vector<FlatElement> basis;  // monic, reduced, sorted by lead ascending
    // minimal generators of the lead-term ideal in each ambient component
    std::vector<std::vector<Monomial>> lead_ideals;
    // Hilbert numerator of S/lead_ideals[c] per component
    std::vector<IntPoly> lead_numerators;
};

/// Finitely generated graded submodule of a graded free module, with a cached
/// reduced Gröbner basis. Values are immutable; the cache is shared by copies.
class Submodule {
public:
    Submodule() = default;
    Submodule(GradedFreeModule ambient, std::vector<ModuleElement> generators);

    static Submodule ideal(const Ring& ring, std::vector<Polynomial> gens);
    static Submodule zero(const GradedFreeModule& ambient) {
        return Submodule(ambient, {});
    }
    static Submodule image_of(const ModuleHom& f) {
        return Submodule(f.target(), f.columns());
    }

    const GradedFreeModule& ambient() const { return ambient_; }
    const std::vector<ModuleElement>& generators() const { return gens_; }
    bool has_cached_gb() const;

    /// The reduced GB under `order` (cached for the default order).
    const GBData& gb(const ModuleOrder& order = ModuleOrder::top_grevlex(),
                     int degree_cap = -1) const;

    /// Generators of this + other (same ambient).
    Submodule plus(const Submodule& o) const;

private:
    struct CacheBox;
    GradedFreeModule ambient_{};
    std::vector<ModuleElement> gens_;
    // one entry per order seen; shared between copies, guarded by a lock
    std::shared_ptr<CacheBox> cache_;
};

/// Spec operation groebner_basis: returns N with its reduced GB computed and
/// cached (deterministic for a fixed order).
Submodule groebner_basis(const Submodule& N,
                         const ModuleOrder& order = ModuleOrder::top_grevlex(),
                         int degree_cap = -1);

struct MembershipResult {
    bool in;
    ModuleElement normal_form;
};

/// Unique reduced remainder of v against the GB of N; in ⇔ remainder is 0.
MembershipResult membership(const ModuleElement& v, const Submodule& N);

/// Generators of ker f, computed by a Gröbner basis of the graph submodule
/// {(f(g), g)} ⊆ target ⊕ source under an order eliminating the target.
Submodule kernel(const ModuleHom& f, int degree_cap = -1);

/// Shared graph GB for one hom: kernel plus preimage solving (lifts).
class KernelSolver {
public:
    explicit KernelSolver(ModuleHom f, int degree_cap = -1);

    const ModuleHom& hom() const { return f_; }
    const Submodule& kernel() const { return kernel_; }
    /// Some u with f(u) = v, or nullopt when v ∉ im f. Deterministic.
    std::optional<ModuleElement> lift(const ModuleElement& v) const;

private:
    ModuleHom f_;
    ModuleOrder order_;
    std::vector<FlatElement> graph_gb_;
    Submodule kernel_;
};

/// A ∩ B via the two-copy elimination trick.
Submodule intersect(const Submodule& A, const Submodule& B, int degree_cap = -1);

/// Mutual membership of generators.
bool submodule_equal(const Submodule& A, const Submodule& B);

/// A minimal generating subset of the span of `gens` (Nakayama, degree by
/// degree with exact linear algebra over the coefficient field).
std::vector<ModuleElement> minimal_generators(const GradedFreeModule& ambient,
                                              const std::vector<ModuleElement>& gens);

/// dim_K of the degree-d slice.
mpz_class free_module_slice_dim(const GradedFreeModule& m, int d);
mpz_class submodule_slice_dim(const Submodule& N, int d);

/// Rank of the generator matrix over Frac(S) by fraction-free (Bareiss)
/// elimination.
int rank_of_submodule(const Submodule& N);

/// dim S/I from the lead-term monomial ideal (ambient must have rank 1).
int krull_dimension(const Submodule& I);

}  // namespace ssideal
