#include "ssideal/koszul.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ssideal {

int sigma(const Subset& J, const Subset& K) {
    int inversions = 0;
    for (int j : J)
        for (int k : K) {
            if (j == k) throw std::invalid_argument("sigma: overlapping index sets");
            if (j > k) ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

const std::vector<Subset>& subsets_of_size(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Subset>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Subset> out;
    if (k >= 0 && k <= n) {
        Subset cur;
        // lexicographic enumeration
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (int i = start; i <= n; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(1);
    }
    return cache.emplace(key, std::move(out)).first->second;
}

Subset subset_complement(const Subset& J, int n) {
    Subset out;
    size_t p = 0;
    for (int i = 1; i <= n; ++i) {
        if (p < J.size() && J[p] == i) {
            ++p;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

std::string subset_str(const Subset& J) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < J.size(); ++i) {
        if (i) os << ",";
        os << J[i];
    }
    os << "}";
    return os.str();
}

KoszulComplex::KoszulComplex(const Ring& ring) : ring_(ring) {
    if (ring.nvars < 1) throw std::invalid_argument("Koszul complex needs n >= 1");
}

GradedFreeModule KoszulComplex::module(int k) const {
    if (k < 0 || k > n()) throw std::out_of_range("Koszul index out of range");
    return GradedFreeModule::constant_twist(ring_, static_cast<int>(basis(k).size()), k);
}

int KoszulComplex::index_of(int k, const Subset& J) const {
    const auto& b = basis(k);
    auto it = std::lower_bound(b.begin(), b.end(), J);
    if (it == b.end() || *it != J)
        throw std::invalid_argument("not a valid Koszul basis subset");
    return static_cast<int>(it - b.begin());
}

ModuleElement KoszulComplex::basis_element(int k, const Subset& J) const {
    return ModuleElement::basis(module(k), index_of(k, J));
}

const ModuleHom& KoszulComplex::differential(int k) const {
    if (k < 1 || k > n()) throw std::out_of_range("differential index out of range");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = diff_.find(k);
    if (it != diff_.end()) return *it->second;
    GradedFreeModule src = module(k), tgt = module(k - 1);
    std::vector<ModuleElement> cols;
    cols.reserve(basis(k).size());
    for (const Subset& J : basis(k)) {
        ModuleElement img(tgt);
        for (size_t j = 0; j < J.size(); ++j) {
            Subset face;
            face.reserve(J.size() - 1);
            for (size_t l = 0; l < J.size(); ++l)
                if (l != j) face.push_back(J[l]);
            Scalar s = Scalar::one(ring_.field);
            if (j % 2 == 1) s = -s;  // (-1)^{j+1} with 1-based j
            Polynomial xi = Polynomial::variable(ring_, J[j]);
            img = img + ModuleElement::basis(tgt, index_of(k - 1, face))
                            .times_poly(xi.scaled(s));
        }
        cols.push_back(std::move(img));
    }
    auto hom = std::make_shared<const ModuleHom>(
        ModuleHom::from_columns(src, tgt, std::move(cols)));
    return *diff_.emplace(k, std::move(hom)).first->second;
}

SyzygyModule syzygy_module(const KoszulComplex& kc, int t, bool check_rank) {
    if (t < 1 || t > kc.n()) throw std::out_of_range("syzygy index out of range");
    const ModuleHom& d = kc.differential(t);
    Submodule sub = Submodule::image_of(d);
    ModuleHom pres = t < kc.n()
                         ? kc.differential(t + 1)
                         : ModuleHom::zero_hom(GradedFreeModule(kc.ring(), {}),
                                               kc.module(kc.n()));
    long long expected;
    {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(kc.n() - 1),
                     static_cast<unsigned long>(t - 1));
        expected = b.get_si();
    }
    if (check_rank) {
        int r = rank_of_submodule(sub);
        if (r != expected)
            throw std::logic_error("rank E_" + std::to_string(t) + " = " +
                                   std::to_string(r) + ", expected " +
                                   std::to_string(expected));
    }
    return SyzygyModule{t, std::move(sub), std::move(pres), static_cast<int>(expected)};
}

void DualForm::add(const Subset& J, const Polynomial& coeff) {
    if (static_cast<int>(J.size()) != k_)
        throw std::invalid_argument("dual form: subset size != k");
    auto it = coeffs_.find(J);
    if (it == coeffs_.end()) {
        if (!coeff.is_zero()) coeffs_.emplace(J, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

DualForm DualForm::operator+(const DualForm& o) const {
    if (k_ != o.k_ || d_ != o.d_ || !(ring_ == o.ring_))
        throw std::invalid_argument("dual form shape mismatch");
    DualForm r(*this);
    for (const auto& [J, c] : o.coeffs_) r.add(J, c);
    return r;
}

DualForm DualForm::operator-() const {
    DualForm r(*this);
    for (auto& [J, c] : r.coeffs_) c = -c;
    return r;
}

DualForm DualForm::times(const Polynomial& p) const {
    DualForm r(ring_, k_, d_);
    for (const auto& [J, c] : coeffs_) r.add(J, c * p);
    return r;
}

bool DualForm::operator==(const DualForm& o) const {
    return k_ == o.k_ && d_ == o.d_ && ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

std::optional<int> DualForm::hom_degree() const {
    std::optional<int> deg;
    for (const auto& [J, c] : coeffs_) {
        HomDegree h = c.homogeneous_degree();
        if (h.kind != HomDegree::Value) return std::nullopt;
        // e_J in K_k(d) has degree k - d; the image c_J sits in degree
        // deg(c_J) + n of S(-n)
        int dd = h.degree + ring_.nvars - (k_ - d_);
        if (!deg)
            deg = dd;
        else if (*deg != dd)
            return std::nullopt;
    }
    return deg;
}

std::optional<int> DualForm::twist_c() const {
    auto d = hom_degree();
    if (!d) return std::nullopt;
    return *d - ring_.nvars;
}

Polynomial DualForm::evaluate(const ModuleElement& v) const {
    Polynomial out(ring_);
    const std::vector<Subset>& b = subsets_of_size(ring_.nvars, k_);
    if (v.parent().rank() != static_cast<int>(b.size()))
        throw std::invalid_argument("dual form evaluate: rank mismatch");
    for (const auto& [J, c] : coeffs_) {
        auto it = std::lower_bound(b.begin(), b.end(), J);
        out = out + c * v.component(static_cast<int>(it - b.begin()));
    }
    return out;
}

ModuleHom DualForm::as_hom(const KoszulComplex& kc) const {
    auto c = twist_c();
    if (!c) throw std::invalid_argument("dual form is not homogeneous");
    GradedFreeModule src = kc.module(k_).twisted(d_);
    GradedFreeModule tgt(ring_, {-*c});
    std::vector<ModuleElement> cols;
    const auto& b = kc.basis(k_);
    cols.reserve(b.size());
    for (const Subset& J : b) {
        auto it = coeffs_.find(J);
        Polynomial p = it == coeffs_.end() ? Polynomial(ring_) : it->second;
        cols.push_back(ModuleElement(tgt, {std::move(p)}));
    }
    return ModuleHom::from_columns(src, tgt, std::move(cols));
}

ModuleElement DualForm::as_element(const KoszulComplex& kc) const {
    GradedFreeModule amb = GradedFreeModule::constant_twist(
        ring_, static_cast<int>(kc.basis(k_).size()), ring_.nvars - k_ + d_);
    std::vector<Polynomial> comps(static_cast<size_t>(amb.rank()), Polynomial(ring_));
    const auto& b = kc.basis(k_);
    for (const auto& [J, c] : coeffs_) {
        auto it = std::lower_bound(b.begin(), b.end(), J);
        comps[static_cast<size_t>(it - b.begin())] = c;
    }
    return ModuleElement(amb, std::move(comps));
}

std::string DualForm::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [J, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")e*" << subset_str(J);
    }
    return os.str();
}

DualForm family_A_generator(const KoszulComplex& kc, int t, const Subset& L) {
    int n = kc.n();
    if (static_cast<int>(L.size()) != n - t)
        throw std::invalid_argument("family A: |L| must be n - t");
    DualForm a(kc.ring(), t + 1, 0);
    Subset comp = subset_complement(L, n);
    for (size_t j = 0; j < L.size(); ++j) {
        int ij = L[j];
        Subset rest;  // L \ {i_j}
        for (size_t l = 0; l < L.size(); ++l)
            if (l != j) rest.push_back(L[l]);
        Subset target = comp;  // ([n] \ L) ∪ {i_j}
        target.push_back(ij);
        std::sort(target.begin(), target.end());
        Scalar s = Scalar::one(kc.ring().field);
        if (j % 2 == 1) s = -s;  // (-1)^{j+1}, 1-based j
        if (sigma(rest, target) < 0) s = -s;
        a.add(target, Polynomial::variable(kc.ring(), ij).scaled(s));
    }
    return a;
}

DualForm family_B_generator(const KoszulComplex& kc, int i, int j) {
    int n = kc.n();
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("family B: need 1 <= i < j <= n");
    DualForm b(kc.ring(), n - 1, 0);
    Subset no_i = subset_complement({i}, n);
    Subset no_j = subset_complement({j}, n);
    Scalar si = Scalar::one(kc.ring().field);
    if (i % 2 == 1) si = -si;  // (-1)^i
    Scalar sj = Scalar::one(kc.ring().field);
    if (j % 2 == 0) sj = -sj;  // -(-1)^j
    b.add(no_i, Polynomial::variable(kc.ring(), j).scaled(si));
    b.add(no_j, Polynomial::variable(kc.ring(), i).scaled(sj));
    return b;
}

bool form_in_span(const KoszulComplex& kc, const DualForm& form,
                  const std::vector<DualForm>& generators) {
    std::vector<ModuleElement> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(g.as_element(kc));
    if (gens.empty()) return form.is_zero();
    GradedFreeModule ambient = gens.front().parent();
    Submodule span(std::move(ambient), std::move(gens));
    return membership(form.as_element(kc), span).in;
}

PhiPair assemble_phi(const KoszulComplex& kc, int t, int d,
                     const std::vector<std::pair<Subset, Polynomial>>& a_coeffs,
                     const std::vector<std::pair<std::pair<int, int>, Polynomial>>& b_coeffs,
                     bool include_b) {
    DualForm a(kc.ring(), t + 1, 0);
    for (const auto& [L, h] : a_coeffs) {
        DualForm gen = family_A_generator(kc, t, L);
        a = a + gen.times(h);
    }
    std::optional<DualForm> b;
    if (include_b) {
        DualForm bb(kc.ring(), kc.n() - 1, d);
        for (const auto& [ij, h] : b_coeffs) {
            DualForm gen = family_B_generator(kc, ij.first, ij.second);
            // reinterpret on K_{n-1}(d)
            DualForm shifted(kc.ring(), kc.n() - 1, d);
            for (const auto& [J, c] : gen.coefficients()) shifted.add(J, c);
            bb = bb + shifted.times(h);
        }
        b = std::move(bb);
    }
    if (a.is_zero() && (!b || b->is_zero()))
        throw std::invalid_argument("phi must be nonzero");

    std::optional<int> deg;
    if (!a.is_zero()) {
        deg = a.hom_degree();
        if (!deg) throw std::invalid_argument("phi: a-part inhomogeneous: " + a.str());
    }
    if (b && !b->is_zero()) {
        std::optional<int> db = b->hom_degree();
        if (!db) throw std::invalid_argument("phi: b-part inhomogeneous: " + b->str());
        if (deg.has_value() && deg.value() != db.value())
            throw std::invalid_argument("phi: a and b have different degrees");
        deg = db;
    }
    PhiPair out{std::move(a), std::move(b), deg.value() - kc.n()};
    return out;
}

}  // namespace ssideal
