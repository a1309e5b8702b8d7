#pragma once

#include <string>
#include <vector>

#include "ssideal/polynomial.hpp"

namespace ssideal {

/// A graded free module ⊕_i S(-a_i). The i-th basis element has degree a_i.
struct GradedFreeModule {
    Ring ring{};
    std::vector<int> twists;

    GradedFreeModule() = default;
    GradedFreeModule(Ring r, std::vector<int> tw)
        : ring(std::move(r)), twists(std::move(tw)) {}

    static GradedFreeModule constant_twist(const Ring& r, int rank, int twist) {
        return GradedFreeModule(r, std::vector<int>(static_cast<size_t>(rank), twist));
    }

    int rank() const { return static_cast<int>(twists.size()); }
    int twist(int i) const { return twists[static_cast<size_t>(i)]; }

    /// M(d): degrees of basis elements drop by d, so a_i becomes a_i - d.
    GradedFreeModule twisted(int d) const;
    /// (-)^* = Hom(-, S(-n)): twists a ↦ n - a.
    GradedFreeModule dual() const;
    GradedFreeModule direct_sum(const GradedFreeModule& o) const;

    bool operator==(const GradedFreeModule&) const = default;
};

/// Element of a graded free module: one polynomial per component.
class ModuleElement {
public:
    ModuleElement() = default;
    explicit ModuleElement(GradedFreeModule parent);
    ModuleElement(GradedFreeModule parent, std::vector<Polynomial> comps);

    static ModuleElement zero(const GradedFreeModule& m) { return ModuleElement(m); }
    static ModuleElement basis(const GradedFreeModule& m, int i);

    const GradedFreeModule& parent() const { return parent_; }
    const Polynomial& component(int i) const { return comps_[static_cast<size_t>(i)]; }
    const std::vector<Polynomial>& components() const { return comps_; }
    bool is_zero() const;

    /// Internal degree: deg(comp_i) + a_i must agree across nonzero components.
    HomDegree homogeneous_degree() const;

    ModuleElement operator-() const;
    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement scaled(const Scalar& c) const;
    ModuleElement times_poly(const Polynomial& p) const;
    ModuleElement times_term(const Monomial& m, const Scalar& c) const;
    bool operator==(const ModuleElement& o) const;
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }

    /// Same component polynomials in a module with shifted twists.
    ModuleElement with_parent(const GradedFreeModule& m) const;

    std::string str() const;

private:
    GradedFreeModule parent_{};
    std::vector<Polynomial> comps_;
};

/// Homogeneous degree-0 homomorphism between graded free modules, stored
/// column-major as images of the source basis. Entry (i,j) is zero or
/// homogeneous of degree source.twists[j] - target.twists[i].
class ModuleHom {
public:
    ModuleHom() = default;

    static ModuleHom from_columns(const GradedFreeModule& source,
                                  const GradedFreeModule& target,
                                  std::vector<ModuleElement> images);
    static ModuleHom identity(const GradedFreeModule& m);
    static ModuleHom zero_hom(const GradedFreeModule& source,
                              const GradedFreeModule& target);

    const GradedFreeModule& source() const { return source_; }
    const GradedFreeModule& target() const { return target_; }
    const ModuleElement& column(int j) const { return cols_[static_cast<size_t>(j)]; }
    const std::vector<ModuleElement>& columns() const { return cols_; }
    const Polynomial& entry(int i, int j) const { return column(j).component(i); }

    ModuleElement apply(const ModuleElement& v) const;
    bool is_zero() const;
    /// True when no entry is a nonzero constant (all entries in 𝔪).
    bool entries_in_maximal_ideal() const;

    /// Source and target twisted by d; the matrix is unchanged.
    ModuleHom twisted(int d) const;
    /// Contravariant dual: transpose with twists a ↦ n - a.
    ModuleHom dual() const;
    /// Block-diagonal sum.
    ModuleHom direct_sum(const ModuleHom& o) const;

    bool operator==(const ModuleHom& o) const;

private:
    GradedFreeModule source_{}, target_{};
    std::vector<ModuleElement> cols_;
};

/// g ∘ f as a matrix product over the ring.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

/// Extension of a monomial order to (monomial, component) pairs. Components
/// may be grouped into blocks for elimination; a smaller block id ranks
/// strictly above a larger one. Ties inside a block follow term-over-position
/// or position-over-term with "lower component index wins".
struct ModuleOrder {
    OrderKind mono = OrderKind::Grevlex;
    bool term_over_position = true;
    std::vector<int> blocks;  // per-component block ids; empty means one block

    int block_of(int comp) const {
        return blocks.empty() ? 0 : blocks[static_cast<size_t>(comp)];
    }

    /// +1 if (m1,c1) > (m2,c2), -1 if smaller, 0 if equal.
    int compare(const Monomial& m1, int c1, const Monomial& m2, int c2) const;

    static ModuleOrder top_grevlex() { return ModuleOrder{}; }
    static ModuleOrder pot(OrderKind k = OrderKind::Grevlex) {
        return ModuleOrder{k, false, {}};
    }
    /// Elimination order for T ⊕ S ambients: the first `eliminated` components
    /// rank above everything else.
    static ModuleOrder eliminate_first(int eliminated, int total,
                                       OrderKind k = OrderKind::Grevlex);
};

}  // namespace ssideal
