#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ssideal {

/// Exponent vector of a monomial in x_1..x_n. The total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : e_(static_cast<size_t>(n), 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial one(int n) { return Monomial(n); }
    static Monomial variable(int n, int i);  // x_i, 1-based

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int exponent(int i) const { return e_[static_cast<size_t>(i)]; }  // 0-based
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;     // this | o
    Monomial divided_into(const Monomial& o) const;  // o / this, assumes divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    std::vector<int> support() const;  // 0-based variable indices

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    /// Container ordering (plain lexicographic on exponents), not a monomial order.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

enum class OrderKind { Grevlex, Lex };

/// Strict total order comparison: +1 if a > b, -1 if a < b, 0 if equal.
int compare_monomials(const Monomial& a, const Monomial& b, OrderKind kind);

/// All monomials in n variables of total degree d, in a fixed deterministic
/// order (descending under grevlex).
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace ssideal
