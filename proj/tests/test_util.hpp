#pragma once

#include <map>
#include <random>
#include <vector>

#include "ssideal/free_module.hpp"
#include "ssideal/groebner.hpp"

namespace ssideal::testutil {

inline Ring rational_ring(int n, OrderKind order = OrderKind::Grevlex) {
    return Ring{n, Field::rationals(), order};
}

/// Random polynomial with small integer coefficients, degree <= max_deg.
inline Polynomial random_polynomial(std::mt19937& rng, const Ring& ring, int max_deg,
                                    int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> var(0, ring.nvars - 1);
    std::vector<Term> terms;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        int d = deg(rng);
        std::vector<int> exps(static_cast<size_t>(ring.nvars), 0);
        for (int j = 0; j < d; ++j) ++exps[static_cast<size_t>(var(rng))];
        int c = coef(rng);
        if (c == 0) c = 1;
        terms.push_back({Monomial(exps), Scalar::from_integer(mpz_class(c), ring.field)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

/// Random homogeneous polynomial of exact degree d (never the zero polynomial
/// unless d < 0).
inline Polynomial random_homogeneous(std::mt19937& rng, const Ring& ring, int d,
                                     int max_terms) {
    if (d < 0) return Polynomial(ring);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> var(0, ring.nvars - 1);
    std::vector<Term> terms;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<int> exps(static_cast<size_t>(ring.nvars), 0);
        for (int j = 0; j < d; ++j) ++exps[static_cast<size_t>(var(rng))];
        int c = coef(rng);
        if (c == 0) c = 1;
        terms.push_back({Monomial(exps), Scalar::from_integer(mpz_class(c), ring.field)});
    }
    Polynomial p = Polynomial::from_terms(ring, std::move(terms));
    if (p.is_zero())
        p = Polynomial::from_term(ring, monomials_of_degree(ring.nvars, d).front(),
                                  Scalar::one(ring.field));
    return p;
}

/// Random homogeneous degree-0 hom between small twisted modules.
inline ModuleHom random_hom(std::mt19937& rng, const Ring& ring, int max_rank = 3,
                            int max_twist_gap = 3) {
    std::uniform_int_distribution<int> rank_dist(1, max_rank);
    std::uniform_int_distribution<int> twist_dist(0, 2);
    std::uniform_int_distribution<int> gap_dist(0, max_twist_gap);
    std::uniform_int_distribution<int> zero_dist(0, 2);
    int rs = rank_dist(rng), rt = rank_dist(rng);
    std::vector<int> ts, tt;
    for (int i = 0; i < rt; ++i) tt.push_back(twist_dist(rng));
    for (int j = 0; j < rs; ++j) ts.push_back(twist_dist(rng) + gap_dist(rng));
    GradedFreeModule source(ring, ts), target(ring, tt);
    std::vector<ModuleElement> cols;
    for (int j = 0; j < rs; ++j) {
        std::vector<Polynomial> comps;
        for (int i = 0; i < rt; ++i) {
            int d = source.twist(j) - target.twist(i);
            if (d < 0 || zero_dist(rng) == 0)
                comps.push_back(Polynomial(ring));
            else
                comps.push_back(random_homogeneous(rng, ring, d, 2));
        }
        cols.emplace_back(target, std::move(comps));
    }
    return ModuleHom::from_columns(source, target, std::move(cols));
}

/// Exact rank of the degree-d graded piece of a hom, by dense Gaussian
/// elimination over Q on monomial bases. Independent of the Groebner path.
inline int dense_slice_rank(const ModuleHom& f, int d) {
    const Ring& ring = f.source().ring;
    struct Key {
        int comp;
        Monomial mono;
        bool operator<(const Key& o) const {
            if (comp != o.comp) return comp < o.comp;
            return mono < o.mono;
        }
    };
    std::map<Key, size_t> row_index;
    std::vector<std::map<Key, mpq_class>> sparse_cols;
    for (int j = 0; j < f.source().rank(); ++j) {
        int e = d - f.source().twist(j);
        if (e < 0) continue;
        for (const auto& m : monomials_of_degree(ring.nvars, e)) {
            std::map<Key, mpq_class> col;
            for (int i = 0; i < f.target().rank(); ++i)
                for (const auto& t : f.entry(i, j).terms())
                    col[Key{i, t.mono.times(m)}] += t.coeff.rational();
            for (const auto& [key, val] : col) row_index.emplace(key, row_index.size());
            sparse_cols.push_back(std::move(col));
        }
    }
    size_t nrows = row_index.size();
    std::vector<std::vector<mpq_class>> m(sparse_cols.size(),
                                          std::vector<mpq_class>(nrows, mpq_class(0)));
    for (size_t c = 0; c < sparse_cols.size(); ++c)
        for (const auto& [key, val] : sparse_cols[c]) m[c][row_index[key]] = val;
    size_t rank = 0;
    for (size_t col = 0; col < nrows && rank < m.size(); ++col) {
        size_t sel = m.size();
        for (size_t i = rank; i < m.size(); ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            mpq_class factor = m[i][col] / m[rank][col];
            for (size_t jj = col; jj < nrows; ++jj) m[i][jj] -= factor * m[rank][jj];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace ssideal::testutil
