#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ssideal/groebner.hpp"

namespace ssideal {

/// Strictly increasing 1-based index subset of [n], naming e_{i_1...i_k}.
using Subset = std::vector<int>;

/// σ(J, K) = (-1)^{#{(j,k) ∈ J×K : j > k}}, so x_J ∧ x_K = σ(J,K) x_{J∪K}.
/// Throws on overlapping sets.
int sigma(const Subset& J, const Subset& K);

/// All size-k subsets of [n] in lexicographic order; this fixes the basis
/// order of K_k everywhere.
const std::vector<Subset>& subsets_of_size(int n, int k);

Subset subset_complement(const Subset& J, int n);
std::string subset_str(const Subset& J);

/// The Koszul complex of x_1..x_n: K_k free of rank C(n,k) with all twists k,
/// ∂_k(e_{i_1...i_k}) = Σ_j (-1)^{j+1} x_{i_j} e_{i_1...î_j...i_k}.
/// Differentials are memoized behind a lock.
class KoszulComplex {
public:
    explicit KoszulComplex(const Ring& ring);

    const Ring& ring() const { return ring_; }
    int n() const { return ring_.nvars; }

    GradedFreeModule module(int k) const;  // K_k
    const ModuleHom& differential(int k) const;  // ∂_k, 1 ≤ k ≤ n

    const std::vector<Subset>& basis(int k) const { return subsets_of_size(n(), k); }
    int index_of(int k, const Subset& J) const;
    ModuleElement basis_element(int k, const Subset& J) const;

private:
    Ring ring_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const ModuleHom>> diff_;
};

/// E_t = Im ∂_t ⊆ K_{t-1}, generated by the ∂_t-images of all e_J, |J| = t.
/// The Koszul presentation K_{t+1} → K_t → E_t → 0 rides along.
struct SyzygyModule {
    int t;
    Submodule as_submodule;    // inside K_{t-1}
    ModuleHom presentation;    // ∂_{t+1} (a zero map from rank 0 when t = n)
    int rank;                  // verified equal to C(n-1, t-1)
};

SyzygyModule syzygy_module(const KoszulComplex& kc, int t, bool check_rank = true);

/// A homogeneous dual form Σ_J c_J e*_J on K_k(d), i.e. a map K_k(d) → S(-n)
/// of internal degree n + c.
class DualForm {
public:
    DualForm(const Ring& ring, int k, int d) : ring_(ring), k_(k), d_(d) {}

    static DualForm zero(const Ring& ring, int k, int d) { return DualForm(ring, k, d); }

    const Ring& ring() const { return ring_; }
    int k() const { return k_; }
    int shift() const { return d_; }
    const std::map<Subset, Polynomial>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Subset& J, const Polynomial& coeff);
    DualForm operator+(const DualForm& o) const;
    DualForm operator-() const;
    DualForm times(const Polynomial& p) const;
    bool operator==(const DualForm& o) const;

    /// Internal degree n + c of the map; nullopt when coefficients are
    /// inhomogeneous or of mixed degree.
    std::optional<int> hom_degree() const;
    /// The twist c with image in S(c): hom_degree - n.
    std::optional<int> twist_c() const;

    /// Σ_J c_J v_J for v ∈ K_k(d).
    Polynomial evaluate(const ModuleElement& v) const;

    /// Row matrix K_k(d) → S(c) (rank-1 target of twist -c).
    ModuleHom as_hom(const KoszulComplex& kc) const;

    /// Element of the free module S^{C(n,k)} with constant twist n - k + d,
    /// for span-membership tests.
    ModuleElement as_element(const KoszulComplex& kc) const;

    std::string str() const;

private:
    Ring ring_;
    int k_;
    int d_;
    std::map<Subset, Polynomial> coeffs_;
};

/// Generator of 𝒜 indexed by L ⊆ [n], |L| = n - t: the pullback of E*_{t+1}
/// along ∂_{t+1}. Vanishes on E_{t+2} (checked in tests).
DualForm family_A_generator(const KoszulComplex& kc, int t, const Subset& L);

/// Generator B_{ij} of 𝓑 = (-1)^i x_j e*_{[n]\{i}} - (-1)^j x_i e*_{[n]\{j}},
/// a form on K_{n-1}. Vanishes on E_n.
DualForm family_B_generator(const KoszulComplex& kc, int i, int j);

/// Is `form` an S-combination of the given family generators? (decided via
/// Gröbner membership in the free module of forms)
bool form_in_span(const KoszulComplex& kc, const DualForm& form,
                  const std::vector<DualForm>& generators);

/// φ = (a, b) with a = Σ_L h_L A_L on K_{t+1} and b = Σ_{ij} h_ij B_ij on
/// K_{n-1}(d). Checks homogeneity, rejects the zero form, and reports c.
struct PhiPair {
    DualForm a;
    std::optional<DualForm> b;
    int c = 0;  // internal degree n + c
};

PhiPair assemble_phi(const KoszulComplex& kc, int t, int d,
                     const std::vector<std::pair<Subset, Polynomial>>& a_coeffs,
                     const std::vector<std::pair<std::pair<int, int>, Polynomial>>& b_coeffs,
                     bool include_b);

}  // namespace ssideal
