#include "ssideal/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace ssideal {

int default_degree_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("SSIDEAL_DEGREE_CAP")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 40;
    }();
    return cap;
}

FlatElement flatten(const ModuleElement& v, const ModuleOrder& order) {
    FlatElement f;
    for (int c = 0; c < v.parent().rank(); ++c)
        for (const auto& t : v.component(c).terms()) f.push_back({c, t.mono, t.coeff});
    std::sort(f.begin(), f.end(), [&](const MTerm& a, const MTerm& b) {
        return order.compare(a.mono, a.comp, b.mono, b.comp) > 0;
    });
    return f;
}

ModuleElement unflatten(const FlatElement& f, const GradedFreeModule& ambient) {
    std::vector<std::vector<Term>> comps(static_cast<size_t>(ambient.rank()));
    for (const auto& t : f) comps[static_cast<size_t>(t.comp)].push_back({t.mono, t.coeff});
    std::vector<Polynomial> polys;
    polys.reserve(comps.size());
    for (auto& terms : comps)
        polys.push_back(Polynomial::from_terms(ambient.ring, std::move(terms)));
    return ModuleElement(ambient, std::move(polys));
}

namespace {

// r -= c * m * g, merging sorted term lists
FlatElement sub_scaled(const FlatElement& r, const Scalar& c, const Monomial& m,
                       const FlatElement& g, const ModuleOrder& order) {
    FlatElement out;
    out.reserve(r.size() + g.size());
    size_t i = 0, j = 0;
    while (i < r.size() && j < g.size()) {
        Monomial gm = g[j].mono.times(m);
        int cmp = order.compare(r[i].mono, r[i].comp, gm, g[j].comp);
        if (cmp > 0) {
            out.push_back(r[i++]);
        } else if (cmp < 0) {
            out.push_back({g[j].comp, gm, -(c * g[j].coeff)});
            ++j;
        } else {
            Scalar s = r[i].coeff - c * g[j].coeff;
            if (!s.is_zero()) out.push_back({r[i].comp, r[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back(r[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].comp, g[j].mono.times(m), -(c * g[j].coeff)});
    return out;
}

FlatElement scaled_monic(FlatElement f) {
    if (f.empty()) return f;
    Scalar inv = f.front().coeff.inverse();
    for (auto& t : f) t.coeff = t.coeff * inv;
    return f;
}

// full normal form of u against monic basis elements
FlatElement normal_form_flat(FlatElement u, const std::vector<FlatElement>& basis,
                             const ModuleOrder& order) {
    FlatElement done;
    while (!u.empty()) {
        const MTerm& head = u.front();
        const FlatElement* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            const MTerm& lt = g.front();
            if (lt.comp == head.comp && lt.mono.divides(head.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            done.push_back(head);
            u.erase(u.begin());
        } else {
            Monomial q = reducer->front().mono.divided_into(head.mono);
            u = sub_scaled(u, head.coeff, q, *reducer, order);
        }
    }
    return done;
}

int internal_degree(const MTerm& t, const GradedFreeModule& ambient) {
    return t.mono.degree() + ambient.twist(t.comp);
}

struct SPair {
    int degree;  // internal degree of the S-pair
    Monomial lcm;
    int comp;
    int i, j;
};

struct SPairLess {
    OrderKind mono_order;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = compare_monomials(a.lcm, b.lcm, mono_order);
        if (c != 0) return c < 0;
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Buchberger with the chain criterion; input elements must be homogeneous.
std::vector<FlatElement> buchberger(std::vector<FlatElement> input,
                                    const GradedFreeModule& ambient,
                                    const ModuleOrder& order, int degree_cap) {
    if (degree_cap < 0) degree_cap = default_degree_cap();
    const bool is_ideal = ambient.rank() == 1;

    std::vector<FlatElement> gb;
    std::set<SPair, SPairLess> queue(SPairLess{order.mono});
    std::set<std::pair<int, int>> done;

    auto push_pairs = [&](int k) {
        const FlatElement& g = gb[static_cast<size_t>(k)];
        for (int i = 0; i < k; ++i) {
            const FlatElement& h = gb[static_cast<size_t>(i)];
            if (h.front().comp != g.front().comp) continue;
            Monomial l = Monomial::lcm(h.front().mono, g.front().mono);
            if (is_ideal && h.front().mono.coprime_with(g.front().mono)) {
                done.insert({i, k});  // product criterion (ideals only)
                continue;
            }
            queue.insert({l.degree() + ambient.twist(g.front().comp), l,
                          g.front().comp, i, k});
        }
    };

    // deterministic seed order: by (internal degree of lead, input position)
    std::stable_sort(input.begin(), input.end(),
                     [&](const FlatElement& a, const FlatElement& b) {
                         if (a.empty() || b.empty()) return b.empty() < a.empty();
                         return internal_degree(a.front(), ambient) <
                                internal_degree(b.front(), ambient);
                     });
    for (auto& f : input) {
        if (f.empty()) continue;
        FlatElement r = normal_form_flat(std::move(f), gb, order);
        if (r.empty()) continue;
        gb.push_back(scaled_monic(std::move(r)));
        push_pairs(static_cast<int>(gb.size()) - 1);
    }

    while (!queue.empty()) {
        SPair p = *queue.begin();
        queue.erase(queue.begin());
        if (p.degree > degree_cap) throw DegreeCapExceeded(p.degree, degree_cap);
        done.insert({p.i, p.j});
        // chain criterion
        bool skip = false;
        for (int k = 0; k < static_cast<int>(gb.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            const MTerm& lt = gb[static_cast<size_t>(k)].front();
            if (lt.comp != p.comp || !lt.mono.divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (done.count({key1.first, key1.second}) &&
                done.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;
        const FlatElement& gi = gb[static_cast<size_t>(p.i)];
        const FlatElement& gj = gb[static_cast<size_t>(p.j)];
        Monomial qi = gi.front().mono.divided_into(p.lcm);
        Monomial qj = gj.front().mono.divided_into(p.lcm);
        FlatElement s;
        for (const auto& t : gi) s.push_back({t.comp, t.mono.times(qi), t.coeff});
        s = sub_scaled(s, Scalar::one(ambient.ring.field), qj, gj, order);
        FlatElement r = normal_form_flat(std::move(s), gb, order);
        if (!r.empty()) {
            gb.push_back(scaled_monic(std::move(r)));
            push_pairs(static_cast<int>(gb.size()) - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    // (equal leads cannot occur: every insertion was fully reduced first)
    std::vector<size_t> idx(gb.size());
    for (size_t i = 0; i < gb.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        const MTerm& ta = gb[a].front();
        const MTerm& tb = gb[b].front();
        int c = order.compare(ta.mono, ta.comp, tb.mono, tb.comp);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<FlatElement> kept;
    for (size_t id : idx) {
        const MTerm& lt = gb[id].front();
        bool divisible = false;
        for (const auto& k : kept)
            if (k.front().comp == lt.comp && k.front().mono.divides(lt.mono)) {
                divisible = true;
                break;
            }
        if (!divisible) kept.push_back(gb[id]);
    }
    // tail-reduce to the unique reduced GB
    std::vector<FlatElement> reduced = kept;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<FlatElement> others;
        others.reserve(reduced.size() - 1);
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = normal_form_flat(reduced[i], others, order);
        reduced[i] = scaled_monic(std::move(reduced[i]));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const FlatElement& a, const FlatElement& b) {
                  return order.compare(a.front().mono, a.front().comp,
                                       b.front().mono, b.front().comp) < 0;
              });
    return reduced;
}

std::shared_ptr<const GBData> compute_gb(const GradedFreeModule& ambient,
                                         const std::vector<ModuleElement>& gens,
                                         const ModuleOrder& order, int degree_cap) {
    std::vector<FlatElement> input;
    input.reserve(gens.size());
    for (const auto& g : gens) input.push_back(flatten(g, order));
    auto data = std::make_shared<GBData>();
    data->order = order;
    data->basis = buchberger(std::move(input), ambient, order, degree_cap);
    data->lead_ideals.assign(static_cast<size_t>(ambient.rank()), {});
    for (const auto& g : data->basis)
        data->lead_ideals[static_cast<size_t>(g.front().comp)].push_back(g.front().mono);
    data->lead_numerators.reserve(data->lead_ideals.size());
    for (auto& li : data->lead_ideals) {
        li = minimalize_monomials(std::move(li));
        data->lead_numerators.push_back(monomial_ideal_numerator(li, ambient.ring.nvars));
    }
    return data;
}

bool same_order(const ModuleOrder& a, const ModuleOrder& b) {
    return a.mono == b.mono && a.term_over_position == b.term_over_position &&
           a.blocks == b.blocks;
}

}  // namespace

struct Submodule::CacheBox {
    std::mutex mu;
    std::vector<std::shared_ptr<const GBData>> entries;
};

Submodule::Submodule(GradedFreeModule ambient, std::vector<ModuleElement> generators)
    : ambient_(std::move(ambient)),
      gens_(std::move(generators)),
      cache_(std::make_shared<CacheBox>()) {
    for (const auto& g : gens_) {
        if (!(g.parent() == ambient_))
            throw std::invalid_argument("submodule generator not in ambient module");
        if (!g.homogeneous_degree().is_homogeneous())
            throw std::invalid_argument("submodule generator not homogeneous");
    }
}

bool Submodule::has_cached_gb() const {
    if (!cache_) return false;
    std::lock_guard<std::mutex> lock(cache_->mu);
    return !cache_->entries.empty();
}

Submodule Submodule::ideal(const Ring& ring, std::vector<Polynomial> gens) {
    GradedFreeModule amb(ring, {0});
    std::vector<ModuleElement> elems;
    elems.reserve(gens.size());
    for (auto& p : gens) elems.push_back(ModuleElement(amb, {std::move(p)}));
    return Submodule(amb, std::move(elems));
}

const GBData& Submodule::gb(const ModuleOrder& order, int degree_cap) const {
    if (!cache_) throw std::logic_error("gb() on a default-constructed submodule");
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        for (const auto& c : cache_->entries)
            if (same_order(c->order, order)) return *c;
    }
    auto data = compute_gb(ambient_, gens_, order, degree_cap);
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& c : cache_->entries)  // another caller may have raced us
        if (same_order(c->order, order)) return *c;
    cache_->entries.push_back(std::move(data));
    return *cache_->entries.back();
}

Submodule Submodule::plus(const Submodule& o) const {
    if (!(ambient_ == o.ambient_))
        throw std::invalid_argument("submodule sum: ambient mismatch");
    std::vector<ModuleElement> gens = gens_;
    gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
    return Submodule(ambient_, std::move(gens));
}

Submodule groebner_basis(const Submodule& N, const ModuleOrder& order, int degree_cap) {
    Submodule copy = N;
    copy.gb(order, degree_cap);
    return copy;
}

MembershipResult membership(const ModuleElement& v, const Submodule& N) {
    if (!(v.parent() == N.ambient()))
        throw std::invalid_argument("membership: ambient mismatch");
    const GBData& gb = N.gb();
    FlatElement r = normal_form_flat(flatten(v, gb.order), gb.basis, gb.order);
    ModuleElement nf = unflatten(r, N.ambient());
    return MembershipResult{r.empty(), std::move(nf)};
}

KernelSolver::KernelSolver(ModuleHom f, int degree_cap) : f_(std::move(f)) {
    const GradedFreeModule& T = f_.target();
    const GradedFreeModule& S = f_.source();
    GradedFreeModule graph_amb = T.direct_sum(S);
    order_ = ModuleOrder::eliminate_first(T.rank(), graph_amb.rank(),
                                          T.ring.order);
    std::vector<FlatElement> input;
    input.reserve(static_cast<size_t>(S.rank()));
    Polynomial zero(T.ring);
    for (int j = 0; j < S.rank(); ++j) {
        std::vector<Polynomial> comps = f_.column(j).components();
        for (int k = 0; k < S.rank(); ++k)
            comps.push_back(k == j ? Polynomial::constant(T.ring, Scalar::one(T.ring.field))
                                   : zero);
        input.push_back(flatten(ModuleElement(graph_amb, std::move(comps)), order_));
    }
    graph_gb_ = buchberger(std::move(input), graph_amb, order_, degree_cap);
    std::vector<ModuleElement> kgens;
    for (const auto& g : graph_gb_) {
        if (g.front().comp < T.rank()) continue;  // has a target-block lead
        std::vector<Polynomial> comps(static_cast<size_t>(S.rank()), zero);
        FlatElement shifted;
        for (const auto& t : g) shifted.push_back({t.comp - T.rank(), t.mono, t.coeff});
        kgens.push_back(unflatten(shifted, S));
    }
    kernel_ = Submodule(S, std::move(kgens));
}

std::optional<ModuleElement> KernelSolver::lift(const ModuleElement& v) const {
    const GradedFreeModule& T = f_.target();
    const GradedFreeModule& S = f_.source();
    if (!(v.parent() == T)) throw std::invalid_argument("lift: element not in target");
    GradedFreeModule graph_amb = T.direct_sum(S);
    std::vector<Polynomial> comps = v.components();
    comps.insert(comps.end(), static_cast<size_t>(S.rank()), Polynomial(T.ring));
    FlatElement r = normal_form_flat(flatten(ModuleElement(graph_amb, std::move(comps)), order_),
                                     graph_gb_, order_);
    // remainder (0, w) means v = f(-w); any leftover target part means v ∉ im f
    FlatElement src_part;
    for (const auto& t : r) {
        if (t.comp < T.rank()) return std::nullopt;
        src_part.push_back({t.comp - T.rank(), t.mono, -t.coeff});
    }
    return unflatten(src_part, S);
}

Submodule kernel(const ModuleHom& f, int degree_cap) {
    return KernelSolver(f, degree_cap).kernel();
}

Submodule intersect(const Submodule& A, const Submodule& B, int degree_cap) {
    if (!(A.ambient() == B.ambient()))
        throw std::invalid_argument("intersect: ambient mismatch");
    const GradedFreeModule& M = A.ambient();
    GradedFreeModule dbl = M.direct_sum(M);
    ModuleOrder order = ModuleOrder::eliminate_first(M.rank(), dbl.rank(),
                                                     M.ring.order);
    std::vector<FlatElement> input;
    Polynomial zero(M.ring);
    for (const auto& a : A.generators()) {
        std::vector<Polynomial> comps = a.components();
        const auto& ac = a.components();
        comps.insert(comps.end(), ac.begin(), ac.end());
        input.push_back(flatten(ModuleElement(dbl, std::move(comps)), order));
    }
    for (const auto& b : B.generators()) {
        std::vector<Polynomial> comps = b.components();
        comps.insert(comps.end(), static_cast<size_t>(M.rank()), zero);
        input.push_back(flatten(ModuleElement(dbl, std::move(comps)), order));
    }
    auto gb = buchberger(std::move(input), dbl, order, degree_cap);
    std::vector<ModuleElement> gens;
    for (const auto& g : gb) {
        if (g.front().comp < M.rank()) continue;
        FlatElement shifted;
        for (const auto& t : g) shifted.push_back({t.comp - M.rank(), t.mono, t.coeff});
        gens.push_back(unflatten(shifted, M));
    }
    return Submodule(M, std::move(gens));
}

bool submodule_equal(const Submodule& A, const Submodule& B) {
    if (!(A.ambient() == B.ambient()))
        throw std::invalid_argument("submodule_equal: ambient mismatch");
    for (const auto& g : A.generators())
        if (!membership(g, B).in) return false;
    for (const auto& g : B.generators())
        if (!membership(g, A).in) return false;
    return true;
}

std::vector<ModuleElement> minimal_generators(const GradedFreeModule& ambient,
                                              const std::vector<ModuleElement>& gens) {
    // sort by internal degree, keep input order within a degree
    std::vector<std::pair<int, size_t>> keyed;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        HomDegree h = gens[i].homogeneous_degree();
        if (h.kind != HomDegree::Value)
            throw std::invalid_argument("minimal_generators: inhomogeneous generator");
        keyed.push_back({h.degree, i});
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    ModuleOrder order = ModuleOrder::top_grevlex();
    order.mono = ambient.ring.order;
    std::vector<ModuleElement> kept;
    size_t pos = 0;
    while (pos < keyed.size()) {
        int d = keyed[pos].first;
        size_t end = pos;
        while (end < keyed.size() && keyed[end].first == d) ++end;
        // reduce this degree class against everything kept so far
        Submodule low(ambient, kept);
        const GBData& lowgb = low.gb(order);
        std::vector<FlatElement> pivots;
        for (size_t k = pos; k < end; ++k) {
            const ModuleElement& g = gens[keyed[k].second];
            FlatElement r = normal_form_flat(flatten(g, order), lowgb.basis, order);
            // Gaussian elimination over the field within this degree
            while (!r.empty()) {
                const FlatElement* pivot = nullptr;
                for (const auto& p : pivots)
                    if (p.front().comp == r.front().comp && p.front().mono == r.front().mono) {
                        pivot = &p;
                        break;
                    }
                if (!pivot) break;
                r = sub_scaled(r, r.front().coeff, Monomial::one(ambient.ring.nvars),
                               *pivot, order);
            }
            if (!r.empty()) {
                pivots.push_back(scaled_monic(std::move(r)));
                kept.push_back(g);
            }
        }
        pos = end;
    }
    return kept;
}

mpz_class free_module_slice_dim(const GradedFreeModule& m, int d) {
    mpz_class s = 0;
    for (int a : m.twists) s += poly_ring_slice_dim(m.ring.nvars, d - a);
    return s;
}

mpz_class submodule_slice_dim(const Submodule& N, int d) {
    const GBData& gb = N.gb();
    const GradedFreeModule& amb = N.ambient();
    mpz_class s = 0;
    for (int c = 0; c < amb.rank(); ++c) {
        int e = d - amb.twist(c);
        if (e < 0) continue;
        // monomials of degree e inside the lead ideal of component c
        s += poly_ring_slice_dim(amb.ring.nvars, e) -
             series_coefficient(gb.lead_numerators[static_cast<size_t>(c)],
                                amb.ring.nvars, e);
    }
    return s;
}

int rank_of_submodule(const Submodule& N) {
    const GradedFreeModule& amb = N.ambient();
    const Ring& ring = amb.ring;
    size_t rows = static_cast<size_t>(amb.rank());
    size_t cols = N.generators().size();
    std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols, Polynomial(ring)));
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < rows; ++i)
            a[i][j] = N.generators()[j].component(static_cast<int>(i));

    // Bareiss fraction-free elimination with sparsest-pivot selection
    Polynomial prev = Polynomial::constant(ring, 1);
    size_t r = 0;
    while (r < rows && r < cols) {
        size_t pr = rows, pc = cols;
        size_t best_terms = SIZE_MAX;
        int best_deg = 0;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = r; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                size_t nt = a[i][j].term_count();
                int dg = a[i][j].total_degree();
                if (nt < best_terms || (nt == best_terms && dg < best_deg)) {
                    best_terms = nt;
                    best_deg = dg;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;  // remaining block is zero
        std::swap(a[r], a[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][r], a[i][pc]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = r + 1; j < cols; ++j) {
                Polynomial num = a[r][r] * a[i][j] - a[i][r] * a[r][j];
                a[i][j] = num.is_zero() ? num : num.exact_divide(prev);
            }
            a[i][r] = Polynomial(ring);
        }
        prev = a[r][r];
        ++r;
    }
    return static_cast<int>(r);
}

int krull_dimension(const Submodule& I) {
    if (I.ambient().rank() != 1)
        throw std::invalid_argument("krull_dimension: ambient must have rank 1");
    const GBData& gb = I.gb();
    return monomial_quotient_dimension(gb.lead_ideals[0], I.ambient().ring.nvars);
}

}  // namespace ssideal
