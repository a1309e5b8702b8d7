#include "ssideal/hilbert.hpp"

#include <algorithm>

namespace ssideal {

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& k : out)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

IntPoly monomial_ideal_numerator(std::vector<Monomial> gens, int n) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return IntPoly::one();
    if (gens.front().is_one()) return IntPoly();  // unit ideal, Hilb = 0
    // pairwise coprime: Q = Π (1 - λ^deg)
    bool coprime = true;
    for (size_t i = 0; i + 1 < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime_with(gens[j])) coprime = false;
    if (coprime) {
        IntPoly q = IntPoly::one();
        for (const auto& m : gens)
            q = q * (IntPoly::one() - IntPoly::monomial(m.degree()));
        return q;
    }
    // split off the last (highest-degree) generator
    Monomial pivot = gens.back();
    gens.pop_back();
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& m : gens) colon.push_back(Monomial::gcd(m, pivot).divided_into(m));
    IntPoly rest = monomial_ideal_numerator(gens, n);
    IntPoly quot = monomial_ideal_numerator(std::move(colon), n);
    return rest - quot.shifted(pivot.degree());
}

mpz_class poly_ring_slice_dim(int n, int d) {
    if (d < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n - 1 + d),
                 static_cast<unsigned long>(n - 1));
    return r;
}

mpz_class series_coefficient(const IntPoly& P, int n, int d) {
    mpz_class s = 0;
    for (const auto& [e, c] : P.coefficients()) {
        if (e > d) continue;
        s += c * poly_ring_slice_dim(n, d - e);
    }
    return s;
}

namespace {

// max independent set size: Y ⊆ vars is independent iff no generator has
// support contained in Y
int best_independent(const std::vector<std::vector<int>>& supports, int n,
                     int var, std::vector<bool>& in_set, int count) {
    if (var == n) {
        for (const auto& s : supports) {
            bool inside = true;
            for (int v : s)
                if (!in_set[static_cast<size_t>(v)]) {
                    inside = false;
                    break;
                }
            if (inside) return -1;  // not independent
        }
        return count;
    }
    in_set[static_cast<size_t>(var)] = true;
    int with_var = best_independent(supports, n, var + 1, in_set, count + 1);
    in_set[static_cast<size_t>(var)] = false;
    int without = best_independent(supports, n, var + 1, in_set, count);
    return std::max(with_var, without);
}

}  // namespace

int monomial_quotient_dimension(const std::vector<Monomial>& gens, int n) {
    std::vector<Monomial> min = minimalize_monomials(gens);
    if (min.empty()) return n;
    if (min.front().is_one()) return -1;
    std::vector<std::vector<int>> supports;
    supports.reserve(min.size());
    for (const auto& m : min) supports.push_back(m.support());
    std::vector<bool> in_set(static_cast<size_t>(n), false);
    return best_independent(supports, n, 0, in_set, 0);
}

}  // namespace ssideal
