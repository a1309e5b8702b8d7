#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>

namespace ssideal {

/// Sparse integer polynomial in one variable λ (negative exponents allowed,
/// which turns up in shifted Hilbert numerators before normalization).
class IntPoly {
public:
    IntPoly() = default;

    static IntPoly monomial(int e, mpz_class c = 1) {
        IntPoly p;
        if (c != 0) p.c_[e] = std::move(c);
        return p;
    }
    static IntPoly one() { return monomial(0, 1); }

    const std::map<int, mpz_class>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? mpz_class(0) : it->second;
    }
    int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    void add_term(int e, const mpz_class& c) {
        if (c == 0) return;
        auto [it, fresh] = c_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    IntPoly operator+(const IntPoly& o) const {
        IntPoly r(*this);
        for (const auto& [e, c] : o.c_) r.add_term(e, c);
        return r;
    }
    IntPoly operator-() const {
        IntPoly r(*this);
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const {
        IntPoly r;
        for (const auto& [e1, c1] : c_)
            for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    IntPoly shifted(int k) const {  // multiply by λ^k
        IntPoly r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    mpz_class eval_one() const {
        mpz_class s = 0;
        for (const auto& [e, c] : c_) s += c;
        return s;
    }
    IntPoly derivative() const {
        IntPoly r;
        for (const auto& [e, c] : c_) r.add_term(e - 1, c * e);
        return r;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : c_) {
            mpz_class a = c;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            mpz_class abs_a = abs(a);
            if (abs_a != 1 || e == 0) os << abs_a.get_str();
            if (e != 0) {
                os << "L";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::map<int, mpz_class> c_;
};

}  // namespace ssideal
