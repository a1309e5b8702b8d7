#include "ssideal/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace ssideal {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_) {
        if (v < 0) throw std::invalid_argument("negative exponent");
        deg_ += v;
    }
}

Monomial Monomial::variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    Monomial m(n);
    m.e_[static_cast<size_t>(i - 1)] = 1;
    m.deg_ = 1;
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    r.deg_ += o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    Monomial r(o);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    r.deg_ -= deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    r.deg_ = 0;
    for (size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    r.deg_ = 0;
    for (size_t i = 0; i < r.e_.size(); ++i) {
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

int compare_monomials(const Monomial& a, const Monomial& b, OrderKind kind) {
    switch (kind) {
        case OrderKind::Grevlex: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            // degree tie: the last differing exponent decides, smaller wins
            for (int i = a.nvars() - 1; i >= 0; --i) {
                int d = a.exponent(i) - b.exponent(i);
                if (d != 0) return d < 0 ? 1 : -1;
            }
            return 0;
        }
        case OrderKind::Lex: {
            for (int i = 0; i < a.nvars(); ++i) {
                int d = a.exponent(i) - b.exponent(i);
                if (d != 0) return d > 0 ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

namespace {

void enumerate(int n, int pos, int rem, std::vector<int>& cur,
               std::vector<Monomial>& out) {
    if (pos == n - 1) {
        cur[static_cast<size_t>(pos)] = rem;
        out.emplace_back(cur);
        return;
    }
    for (int v = rem; v >= 0; --v) {
        cur[static_cast<size_t>(pos)] = v;
        enumerate(n, pos + 1, rem - v, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    enumerate(n, 0, d, cur, out);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return compare_monomials(a, b, OrderKind::Grevlex) > 0;
    });
    return out;
}

}  // namespace ssideal
