#pragma once

#include <string>
#include <vector>

#include "ssideal/intpoly.hpp"

namespace ssideal {

/// Data of a long Bourbaki sequence 0 → ⊕S(-a_i) → ⊕S(-b_i) → M → I(c) → 0
/// with M = E_{t+1} ⊕ E_{n-1}(d) (or E_{t+1} alone, in which case d is unused).
struct BourbakiParameters {
    int n = 0;
    int t = 0;
    int c = 0;
    int d = 0;
    std::vector<int> a_twists;
    std::vector<int> b_twists;

    int p() const { return static_cast<int>(a_twists.size()); }
    int q() const { return static_cast<int>(b_twists.size()); }
};

/// Binomial coefficient with C(n,k) = 0 for k < 0, k > n, or n < 0.
mpz_class binom_safe(long n, long k);
long long binom_safe_ll(long n, long k);

/// The Hilbert numerator of the mapping-cone resolution:
/// Q(λ) = 1 - n λ^{n-1+c-d} + λ^{n+c-d} + Σ λ^{b_i+c} - Σ λ^{a_i+c}
///        + (-1)^t λ^c Σ_{i=t+1}^n (-1)^i C(n,i) λ^i.
IntPoly q_polynomial(const BourbakiParameters& p);

struct NumericalConditions {
    bool cond1, cond2, cond3;
    mpz_class lhs1, rhs1;  // q  vs  p + C(n-1,t) + n - 2
    mpz_class lhs2, rhs2;  // Σb - Σa  vs  the closed form
    mpz_class lhs3, rhs3;  // Σb² - Σa²  vs  the closed form
    bool all() const { return cond1 && cond2 && cond3; }
};

/// The three exact conditions characterizing codim I = 3.
NumericalConditions numerical_conditions(const BourbakiParameters& p);

struct IdentityReport {
    int cases = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Checks the two closed-form alternating-sum identities and the rank
/// recursion against brute-force summation for 4 <= n <= n_max, 0 <= t <= n.
IdentityReport identity_suite(int n_max);

}  // namespace ssideal
