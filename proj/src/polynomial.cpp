#include "ssideal/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ssideal {

Polynomial Polynomial::constant(const Ring& r, const Scalar& c) {
    Polynomial p(r);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(r.nvars), c});
    return p;
}

Polynomial Polynomial::constant(const Ring& r, long c) {
    return constant(r, Scalar::from_integer(mpz_class(c), r.field));
}

Polynomial Polynomial::variable(const Ring& r, int i) {
    Polynomial p(r);
    p.terms_.push_back({Monomial::variable(r.nvars, i), Scalar::one(r.field)});
    return p;
}

Polynomial Polynomial::from_term(const Ring& r, const Monomial& m, const Scalar& c) {
    Polynomial p(r);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return compare_monomials(a.mono, b.mono, r.order) > 0;
    });
    Polynomial p(r);
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

HomDegree Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return HomDegree{HomDegree::Any, 0};
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return HomDegree{HomDegree::No, 0};
    return HomDegree{HomDegree::Value, d};
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare_monomials(terms_[i].mono, o.terms_[j].mono, ring_.order);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) p.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) p.terms_.push_back(o.terms_[j]);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    // accumulate into a term list, then canonicalize once
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    return from_terms(ring_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = t.coeff * c;
    return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p(*this);
    for (auto& t : p.terms_) {
        t.mono = t.mono.times(m);
        t.coeff = t.coeff * c;
    }
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_term().coeff.inverse());
}

Polynomial Polynomial::exact_divide(const Polynomial& d) const {
    check_same_ring(d);
    if (d.is_zero()) throw std::domain_error("exact division by zero");
    Polynomial rem(*this);
    std::vector<Term> quot;
    const Term& dl = d.leading_term();
    while (!rem.is_zero()) {
        const Term& rl = rem.leading_term();
        if (!dl.mono.divides(rl.mono))
            throw std::domain_error("inexact polynomial division");
        Monomial qm = dl.mono.divided_into(rl.mono);
        Scalar qc = rl.coeff / dl.coeff;
        quot.push_back({qm, qc});
        rem = rem - d.times_term(qm, qc);
    }
    return from_terms(ring_, std::move(quot));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        bool has_mono = !t.mono.is_one();
        if (cs != "1" || !has_mono) os << cs;
        if (has_mono) {
            bool star = cs != "1";
            for (int i = 0; i < t.mono.nvars(); ++i) {
                int e = t.mono.exponent(i);
                if (e == 0) continue;
                if (star) os << "*";
                os << "x" << (i + 1);
                if (e > 1) os << "^" << e;
                star = true;
            }
        }
    }
    return os.str();
}

}  // namespace ssideal
