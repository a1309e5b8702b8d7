#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssideal/polynomial.hpp"

namespace ssideal {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
    size_t position;
};

/// Grammar: poly := term (('+'|'-') term)*; term := [integer] ('*'? var)*;
/// var := 'x' index ('^' exponent)?; whitespace ignored. A leading sign is
/// accepted. Variable indices must lie in [1, n].
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

/// Basis symbols appearing in fixture expressions beyond plain polynomials:
/// e[1,2] / e*[1,2] (Koszul basis and dual), A[...] / B[i,j] (form family
/// generators), m<k> (free-module generators, 1-based).
struct BasisAtom {
    enum Kind { KoszulE, KoszulEDual, FamilyA, FamilyB, GenM } kind;
    std::vector<int> indices;  // subset indices, or {k} for m<k>
};

/// One signed summand of a general fixture expression: a polynomial
/// coefficient times at most one basis atom.
struct ExprTerm {
    Polynomial coeff;
    std::optional<BasisAtom> atom;
};

std::vector<ExprTerm> parse_expression(const std::string& text, const Ring& ring);

}  // namespace ssideal
