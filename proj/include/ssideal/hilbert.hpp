#pragma once

#include <vector>

#include "ssideal/intpoly.hpp"
#include "ssideal/monomial.hpp"

namespace ssideal {

/// Drop generators divisible by another generator (and duplicates).
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

/// Numerator Q(λ) of Hilb(S/I, λ) = Q(λ)/(1-λ)^n for a monomial ideal I,
/// by the colon-ideal inclusion–exclusion recursion
///   Q(I + (m)) = Q(I) - λ^deg(m) Q(I : m).
IntPoly monomial_ideal_numerator(std::vector<Monomial> gens, int n);

/// dim_K S_d = C(n-1+d, n-1), 0 for d < 0.
mpz_class poly_ring_slice_dim(int n, int d);

/// Coefficient of λ^d in P(λ)/(1-λ)^n.
mpz_class series_coefficient(const IntPoly& P, int n, int d);

/// Krull dimension of S/I for a monomial ideal I (gens need not be minimal):
/// the largest independent variable set. dim S/(1) = -1, dim S/(0) = n.
int monomial_quotient_dimension(const std::vector<Monomial>& gens, int n);

}  // namespace ssideal
