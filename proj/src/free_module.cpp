#include "ssideal/free_module.hpp"

#include <sstream>

namespace ssideal {

GradedFreeModule GradedFreeModule::twisted(int d) const {
    GradedFreeModule m(*this);
    for (int& a : m.twists) a -= d;
    return m;
}

GradedFreeModule GradedFreeModule::dual() const {
    GradedFreeModule m(*this);
    for (int& a : m.twists) a = ring.nvars - a;
    return m;
}

GradedFreeModule GradedFreeModule::direct_sum(const GradedFreeModule& o) const {
    if (!(ring == o.ring)) throw std::invalid_argument("direct sum over different rings");
    GradedFreeModule m(*this);
    m.twists.insert(m.twists.end(), o.twists.begin(), o.twists.end());
    return m;
}

ModuleElement::ModuleElement(GradedFreeModule parent) : parent_(std::move(parent)) {
    comps_.assign(static_cast<size_t>(parent_.rank()), Polynomial(parent_.ring));
}

ModuleElement::ModuleElement(GradedFreeModule parent, std::vector<Polynomial> comps)
    : parent_(std::move(parent)), comps_(std::move(comps)) {
    if (static_cast<int>(comps_.size()) != parent_.rank())
        throw std::invalid_argument("component count does not match rank");
}

ModuleElement ModuleElement::basis(const GradedFreeModule& m, int i) {
    ModuleElement v(m);
    v.comps_[static_cast<size_t>(i)] = Polynomial::constant(m.ring, Scalar::one(m.ring.field));
    return v;
}

bool ModuleElement::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

HomDegree ModuleElement::homogeneous_degree() const {
    HomDegree result{HomDegree::Any, 0};
    for (int i = 0; i < parent_.rank(); ++i) {
        const Polynomial& p = comps_[static_cast<size_t>(i)];
        if (p.is_zero()) continue;
        HomDegree h = p.homogeneous_degree();
        if (h.kind != HomDegree::Value) return HomDegree{HomDegree::No, 0};
        int d = h.degree + parent_.twist(i);
        if (result.kind == HomDegree::Any)
            result = HomDegree{HomDegree::Value, d};
        else if (result.degree != d)
            return HomDegree{HomDegree::No, 0};
    }
    return result;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement v(*this);
    for (auto& p : v.comps_) p = -p;
    return v;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    if (!(parent_ == o.parent_)) throw std::invalid_argument("module element parent mismatch");
    ModuleElement v(*this);
    for (size_t i = 0; i < comps_.size(); ++i) v.comps_[i] = v.comps_[i] + o.comps_[i];
    return v;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    return *this + (-o);
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
    ModuleElement v(*this);
    for (auto& p : v.comps_) p = p.scaled(c);
    return v;
}

ModuleElement ModuleElement::times_poly(const Polynomial& p) const {
    ModuleElement v(*this);
    for (auto& q : v.comps_) q = q * p;
    return v;
}

ModuleElement ModuleElement::times_term(const Monomial& m, const Scalar& c) const {
    ModuleElement v(*this);
    for (auto& q : v.comps_) q = q.times_term(m, c);
    return v;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    return parent_ == o.parent_ && comps_ == o.comps_;
}

ModuleElement ModuleElement::with_parent(const GradedFreeModule& m) const {
    if (m.rank() != parent_.rank())
        throw std::invalid_argument("with_parent: rank mismatch");
    return ModuleElement(m, comps_);
}

std::string ModuleElement::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << ", ";
        os << comps_[i].str();
    }
    os << ")";
    return os.str();
}

ModuleHom ModuleHom::from_columns(const GradedFreeModule& source,
                                  const GradedFreeModule& target,
                                  std::vector<ModuleElement> images) {
    if (static_cast<int>(images.size()) != source.rank())
        throw std::invalid_argument("hom_from_columns: rank mismatch");
    for (int j = 0; j < source.rank(); ++j) {
        const ModuleElement& col = images[static_cast<size_t>(j)];
        if (!(col.parent() == target))
            throw std::invalid_argument("hom_from_columns: image not in target");
        for (int i = 0; i < target.rank(); ++i) {
            const Polynomial& e = col.component(i);
            if (e.is_zero()) continue;
            HomDegree h = e.homogeneous_degree();
            int expected = source.twist(j) - target.twist(i);
            if (h.kind != HomDegree::Value || h.degree != expected)
                throw std::invalid_argument(
                    "hom_from_columns: entry (" + std::to_string(i) + "," +
                    std::to_string(j) + ") expected degree " + std::to_string(expected) +
                    ", got " +
                    (h.kind == HomDegree::Value ? std::to_string(h.degree)
                                                : std::string("inhomogeneous")));
        }
    }
    ModuleHom f;
    f.source_ = source;
    f.target_ = target;
    f.cols_ = std::move(images);
    return f;
}

ModuleHom ModuleHom::identity(const GradedFreeModule& m) {
    std::vector<ModuleElement> cols;
    cols.reserve(static_cast<size_t>(m.rank()));
    for (int i = 0; i < m.rank(); ++i) cols.push_back(ModuleElement::basis(m, i));
    return from_columns(m, m, std::move(cols));
}

ModuleHom ModuleHom::zero_hom(const GradedFreeModule& source,
                              const GradedFreeModule& target) {
    std::vector<ModuleElement> cols(static_cast<size_t>(source.rank()),
                                    ModuleElement::zero(target));
    ModuleHom f;
    f.source_ = source;
    f.target_ = target;
    f.cols_ = std::move(cols);
    return f;
}

ModuleElement ModuleHom::apply(const ModuleElement& v) const {
    if (!(v.parent() == source_))
        throw std::invalid_argument("apply: element not in source");
    ModuleElement out(target_);
    for (int j = 0; j < source_.rank(); ++j) {
        const Polynomial& c = v.component(j);
        if (c.is_zero()) continue;
        out = out + cols_[static_cast<size_t>(j)].times_poly(c);
    }
    return out;
}

bool ModuleHom::is_zero() const {
    for (const auto& c : cols_)
        if (!c.is_zero()) return false;
    return true;
}

bool ModuleHom::entries_in_maximal_ideal() const {
    for (const auto& col : cols_)
        for (const auto& p : col.components())
            for (const auto& t : p.terms())
                if (t.mono.is_one()) return false;
    return true;
}

ModuleHom ModuleHom::twisted(int d) const {
    GradedFreeModule s = source_.twisted(d), t = target_.twisted(d);
    std::vector<ModuleElement> cols;
    cols.reserve(cols_.size());
    for (const auto& c : cols_) cols.push_back(c.with_parent(t));
    return from_columns(s, t, std::move(cols));
}

ModuleHom ModuleHom::dual() const {
    GradedFreeModule s = target_.dual(), t = source_.dual();
    std::vector<ModuleElement> cols;
    cols.reserve(static_cast<size_t>(s.rank()));
    for (int j = 0; j < s.rank(); ++j) {
        std::vector<Polynomial> comps;
        comps.reserve(static_cast<size_t>(t.rank()));
        for (int i = 0; i < t.rank(); ++i) comps.push_back(entry(j, i));
        cols.emplace_back(t, std::move(comps));
    }
    return from_columns(s, t, std::move(cols));
}

ModuleHom ModuleHom::direct_sum(const ModuleHom& o) const {
    GradedFreeModule s = source_.direct_sum(o.source_);
    GradedFreeModule t = target_.direct_sum(o.target_);
    std::vector<ModuleElement> cols;
    cols.reserve(static_cast<size_t>(s.rank()));
    Polynomial z(source_.ring);
    for (int j = 0; j < source_.rank(); ++j) {
        std::vector<Polynomial> comps = cols_[static_cast<size_t>(j)].components();
        comps.insert(comps.end(), static_cast<size_t>(o.target_.rank()), z);
        cols.emplace_back(t, std::move(comps));
    }
    for (int j = 0; j < o.source_.rank(); ++j) {
        std::vector<Polynomial> comps(static_cast<size_t>(target_.rank()), z);
        const auto& oc = o.cols_[static_cast<size_t>(j)].components();
        comps.insert(comps.end(), oc.begin(), oc.end());
        cols.emplace_back(t, std::move(comps));
    }
    return from_columns(s, t, std::move(cols));
}

bool ModuleHom::operator==(const ModuleHom& o) const {
    return source_ == o.source_ && target_ == o.target_ && cols_ == o.cols_;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: shape mismatch");
    std::vector<ModuleElement> cols;
    cols.reserve(static_cast<size_t>(f.source().rank()));
    for (int j = 0; j < f.source().rank(); ++j) cols.push_back(g.apply(f.column(j)));
    return ModuleHom::from_columns(f.source(), g.target(), std::move(cols));
}

int ModuleOrder::compare(const Monomial& m1, int c1, const Monomial& m2, int c2) const {
    int b1 = block_of(c1), b2 = block_of(c2);
    if (b1 != b2) return b1 < b2 ? 1 : -1;
    if (term_over_position) {
        int c = compare_monomials(m1, m2, mono);
        if (c != 0) return c;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return compare_monomials(m1, m2, mono);
}

ModuleOrder ModuleOrder::eliminate_first(int eliminated, int total, OrderKind k) {
    ModuleOrder o;
    o.mono = k;
    o.term_over_position = true;
    o.blocks.assign(static_cast<size_t>(total), 1);
    for (int i = 0; i < eliminated; ++i) o.blocks[static_cast<size_t>(i)] = 0;
    return o;
}

}  // namespace ssideal
