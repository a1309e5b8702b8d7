#include "ssideal/parse.hpp"

#include <cctype>

namespace ssideal {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, const Ring& ring, bool allow_atoms)
        : s_(text), ring_(ring), atoms_(allow_atoms) {}

    std::vector<ExprTerm> run() {
        std::vector<ExprTerm> out;
        skip_ws();
        if (eof()) throw ParseError("empty expression", pos_);
        bool neg = accept_sign();
        out.push_back(term(neg));
        skip_ws();
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            out.push_back(term(c == '-'));
            skip_ws();
        }
        return out;
    }

private:
    const std::string& s_;
    Ring ring_;
    bool atoms_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool accept_sign() {
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return mpz_class(s_.substr(start, pos_ - start));
    }

    int small_index() {
        mpz_class z = integer();
        if (!z.fits_sint_p()) throw ParseError("index too large", pos_);
        return static_cast<int>(z.get_si());
    }

    std::vector<int> bracket_list() {
        skip_ws();
        if (eof() || peek() != '[') throw ParseError("expected '['", pos_);
        ++pos_;
        std::vector<int> idx;
        while (true) {
            idx.push_back(small_index());
            skip_ws();
            if (!eof() && peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        skip_ws();
        if (eof() || peek() != ']') throw ParseError("expected ']'", pos_);
        ++pos_;
        return idx;
    }

    // term := [integer] ('*'? factor)*, at most one basis atom per term
    ExprTerm term(bool negative) {
        skip_ws();
        Polynomial coeff = Polynomial::constant(ring_, negative ? -1 : 1);
        std::optional<BasisAtom> atom;
        bool any = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coeff.scaled(Scalar::from_integer(integer(), ring_.field));
            any = true;
        }
        while (true) {
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
            if (eof()) break;
            char c = peek();
            if (c == 'x') {
                ++pos_;
                size_t at = pos_;
                int i = small_index();
                if (i < 1 || i > ring_.nvars)
                    throw ParseError("variable index out of range [1," +
                                         std::to_string(ring_.nvars) + "]",
                                     at);
                int e = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    e = small_index();
                    if (e < 0) throw ParseError("negative exponent", pos_);
                }
                Monomial m(ring_.nvars);
                std::vector<int> exps(static_cast<size_t>(ring_.nvars), 0);
                exps[static_cast<size_t>(i - 1)] = e;
                coeff = coeff * Polynomial::from_term(ring_, Monomial(exps),
                                                      Scalar::one(ring_.field));
                any = true;
            } else if (atoms_ && (c == 'e' || c == 'A' || c == 'B' || c == 'm')) {
                if (atom) throw ParseError("second basis symbol in one term", pos_);
                ++pos_;
                BasisAtom a;
                if (c == 'e') {
                    if (!eof() && peek() == '*') {
                        ++pos_;
                        a.kind = BasisAtom::KoszulEDual;
                    } else {
                        a.kind = BasisAtom::KoszulE;
                    }
                    a.indices = bracket_list();
                } else if (c == 'A') {
                    a.kind = BasisAtom::FamilyA;
                    a.indices = bracket_list();
                } else if (c == 'B') {
                    a.kind = BasisAtom::FamilyB;
                    a.indices = bracket_list();
                } else {  // m<k>
                    a.kind = BasisAtom::GenM;
                    a.indices = {small_index()};
                }
                atom = std::move(a);
                any = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff.scaled(Scalar::from_integer(integer(), ring_.field));
                any = true;
            } else {
                break;
            }
        }
        if (!any) throw ParseError("expected term", pos_);
        return ExprTerm{std::move(coeff), std::move(atom)};
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    // "0" and other bare integers are terms with no variable part
    Scanner sc(text, ring, /*allow_atoms=*/false);
    Polynomial p(ring);
    for (auto& t : sc.run()) p = p + t.coeff;
    return p;
}

std::vector<ExprTerm> parse_expression(const std::string& text, const Ring& ring) {
    Scanner sc(text, ring, /*allow_atoms=*/true);
    return sc.run();
}

}  // namespace ssideal
