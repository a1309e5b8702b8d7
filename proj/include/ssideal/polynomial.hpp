#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssideal/monomial.hpp"
#include "ssideal/scalar.hpp"

namespace ssideal {

/// K[x_1..x_n] with the standard grading deg x_i = 1 and a fixed monomial
/// order. Rings are lightweight values; polynomials carry a copy.
struct Ring {
    int nvars = 0;
    Field field{};
    OrderKind order = OrderKind::Grevlex;

    bool operator==(const Ring&) const = default;
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Result of a homogeneous-degree query. The zero polynomial is homogeneous
/// of every degree ("any"); a nonzero polynomial either has a single degree
/// or is not homogeneous.
struct HomDegree {
    enum Kind { Any, Value, No } kind = Any;
    int degree = 0;

    bool is_homogeneous() const { return kind != No; }
    /// Degree if the polynomial is homogeneous nonzero, else `fallback`.
    int value_or(int fallback) const { return kind == Value ? degree : fallback; }
};

/// Sparse multivariate polynomial with exact coefficients. Terms are kept
/// strictly descending under the ring's monomial order and never store a
/// zero coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, const Scalar& c);
    static Polynomial constant(const Ring& r, long c);
    static Polynomial variable(const Ring& r, int i);  // x_i, 1-based
    static Polynomial from_term(const Ring& r, const Monomial& m, const Scalar& c);
    /// Build from an arbitrary term list (sorted and combined here).
    static Polynomial from_terms(const Ring& r, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    int total_degree() const;  // -1 for the zero polynomial
    HomDegree homogeneous_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial monic() const;  // divide by the leading coefficient

    /// Exact quotient this / d; throws std::domain_error if d does not divide
    /// exactly. Used by fraction-free elimination.
    Polynomial exact_divide(const Polynomial& d) const;

    std::string str() const;

private:
    Ring ring_{};
    std::vector<Term> terms_;

    void check_same_ring(const Polynomial& o) const;
};

}  // namespace ssideal
