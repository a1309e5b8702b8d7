#include "ssideal/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace ssideal {

bool FreeResolution::is_minimal() const {
    for (const auto& f : maps)
        if (!f.entries_in_maximal_ideal()) return false;
    return true;
}

long long GradedBettiTable::total(int i) const {
    long long s = 0;
    for (const auto& [key, v] : entries)
        if (key.first == i) s += v;
    return s;
}

std::string GradedBettiTable::str() const {
    std::ostringstream os;
    for (const auto& [key, v] : entries)
        os << "beta(" << key.first << "," << key.second << ") = " << v << "\n";
    return os.str();
}

GradedBettiTable betti_table(const FreeResolution& res) {
    GradedBettiTable t;
    for (int i = 0; i <= res.length(); ++i) {
        if (i == res.length() && res.module_at(i).rank() == 0) break;
        for (int a : res.module_at(i).twists) ++t.entries[{i, a}];
    }
    return t;
}

IntPoly hilbert_numerator(const GradedBettiTable& table) {
    IntPoly q;
    for (const auto& [key, v] : table.entries) {
        mpz_class c(static_cast<long>(v));
        if (key.first % 2 != 0) c = -c;
        q.add_term(key.second, c);
    }
    return q;
}

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;  // rows × cols

Matrix to_matrix(const ModuleHom& f) {
    Matrix m(static_cast<size_t>(f.target().rank()),
             std::vector<Polynomial>(static_cast<size_t>(f.source().rank()),
                                     Polynomial(f.source().ring)));
    for (int j = 0; j < f.source().rank(); ++j)
        for (int i = 0; i < f.target().rank(); ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = f.entry(i, j);
    return m;
}

ModuleHom from_matrix(const Matrix& m, const GradedFreeModule& source,
                      const GradedFreeModule& target) {
    std::vector<ModuleElement> cols;
    cols.reserve(static_cast<size_t>(source.rank()));
    for (int j = 0; j < source.rank(); ++j) {
        std::vector<Polynomial> comps;
        comps.reserve(static_cast<size_t>(target.rank()));
        for (int i = 0; i < target.rank(); ++i) comps.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        cols.emplace_back(target, std::move(comps));
    }
    return ModuleHom::from_columns(source, target, std::move(cols));
}

// is the entry a nonzero constant?
bool unit_entry(const Polynomial& p) {
    return !p.is_zero() && p.term_count() == 1 && p.leading_term().mono.is_one();
}

struct ComplexData {
    // mats[k] : F_{k+1} -> F_k, modules[k] = F_k
    std::vector<Matrix> mats;
    std::vector<GradedFreeModule> modules;
};

void erase_row(Matrix& m, size_t r) { m.erase(m.begin() + static_cast<long>(r)); }

void erase_col(Matrix& m, size_t c) {
    for (auto& row : m) row.erase(row.begin() + static_cast<long>(c));
}

// Pivot out a unit at (r, c) of mats[k] and delete the split-off pair of
// basis elements from F_{k+1} and F_k.
void pivot_out(ComplexData& cx, size_t k, size_t r, size_t c) {
    Matrix& m = cx.mats[k];
    Scalar u = m[r][c].leading_term().coeff;
    size_t rows = m.size(), cols = m[0].size();

    // column operations clear row r; they are source basis changes of F_{k+1}
    for (size_t j = 0; j < cols; ++j) {
        if (j == c || m[r][j].is_zero()) continue;
        Polynomial lambda = m[r][j].scaled(u.inverse());
        for (size_t i = 0; i < rows; ++i) m[i][j] = m[i][j] - m[i][c] * lambda;
        if (k + 1 < cx.mats.size()) {
            Matrix& next = cx.mats[k + 1];
            for (size_t jj = 0; jj < next[0].size(); ++jj)
                next[c][jj] = next[c][jj] + lambda * next[j][jj];
        }
    }
    // row operations clear column c; they are target basis changes of F_k
    for (size_t i = 0; i < rows; ++i) {
        if (i == r || m[i][c].is_zero()) continue;
        Polynomial mu = m[i][c].scaled(u.inverse());
        for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - mu * m[r][j];
        if (k > 0) {
            Matrix& prev = cx.mats[k - 1];
            for (size_t ii = 0; ii < prev.size(); ++ii)
                prev[ii][r] = prev[ii][r] + prev[ii][i] * mu;
        }
    }
    // the matching row/column of the neighbours is now forced to zero
    if (k + 1 < cx.mats.size()) {
        for (const auto& e : cx.mats[k + 1][c])
            if (!e.is_zero()) throw std::logic_error("minimalize: nonzero row after pivot");
        erase_row(cx.mats[k + 1], c);
    }
    if (k > 0) {
        for (auto& row : cx.mats[k - 1])
            if (!row[r].is_zero()) throw std::logic_error("minimalize: nonzero column after pivot");
        erase_col(cx.mats[k - 1], r);
    }
    erase_row(m, r);
    erase_col(m, c);
    auto& src = cx.modules[k + 1].twists;
    src.erase(src.begin() + static_cast<long>(c));
    auto& tgt = cx.modules[k].twists;
    tgt.erase(tgt.begin() + static_cast<long>(r));
}

}  // namespace

std::vector<ModuleHom> minimalize_complex(std::vector<ModuleHom> maps) {
    if (maps.empty()) return maps;
    ComplexData cx;
    cx.modules.push_back(maps.front().target());
    for (const auto& f : maps) {
        cx.mats.push_back(to_matrix(f));
        cx.modules.push_back(f.source());
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < cx.mats.size() && !changed; ++k) {
            Matrix& m = cx.mats[k];
            for (size_t i = 0; i < m.size() && !changed; ++i)
                for (size_t j = 0; j < (m.empty() ? 0 : m[0].size()) && !changed; ++j)
                    if (unit_entry(m[i][j])) {
                        pivot_out(cx, k, i, j);
                        changed = true;
                    }
        }
    }
    std::vector<ModuleHom> out;
    out.reserve(maps.size());
    for (size_t k = 0; k < cx.mats.size(); ++k)
        out.push_back(from_matrix(cx.mats[k], cx.modules[k + 1], cx.modules[k]));
    return out;
}

FreeResolution minimal_free_resolution(const ModuleHom& presentation, int max_length,
                                       int degree_cap) {
    // split off units, then re-choose columns as a minimal generating set
    std::vector<ModuleHom> start = minimalize_complex({presentation});
    ModuleHom phi = start.front();
    {
        std::vector<ModuleElement> cols =
            minimal_generators(phi.target(), phi.columns());
        std::vector<int> twists;
        twists.reserve(cols.size());
        for (const auto& c : cols) twists.push_back(c.homogeneous_degree().value_or(0));
        GradedFreeModule f1(phi.target().ring, std::move(twists));
        phi = ModuleHom::from_columns(f1, phi.target(), std::move(cols));
    }

    FreeResolution res;
    res.maps.push_back(phi);
    res.augmentation = "coker of the presentation";
    while (res.length() < max_length) {
        const ModuleHom& last = res.maps.back();
        if (last.source().rank() == 0 || last.is_zero()) break;
        Submodule ker = kernel(last, degree_cap);
        std::vector<ModuleElement> gens = minimal_generators(last.source(), ker.generators());
        if (gens.empty()) break;
        std::vector<int> twists;
        twists.reserve(gens.size());
        for (const auto& g : gens) twists.push_back(g.homogeneous_degree().value_or(0));
        GradedFreeModule next(last.source().ring, std::move(twists));
        res.maps.push_back(ModuleHom::from_columns(next, last.source(), std::move(gens)));
    }
    return res;
}

int complex_degree_window(const std::vector<ModuleHom>& maps, int margin) {
    int d = 0;
    for (const auto& f : maps) {
        for (int a : f.source().twists) d = std::max(d, a);
        for (int a : f.target().twists) d = std::max(d, a);
    }
    return d + margin;
}

ExactnessReport certify_complex(const std::vector<ModuleHom>& maps, int max_degree) {
    ExactnessReport rep;
    for (size_t k = 0; k + 1 < maps.size(); ++k) {
        if (!compose(maps[k], maps[k + 1]).is_zero()) {
            rep.compositions_zero = false;
            rep.detail = "composition " + std::to_string(k) + " o " + std::to_string(k + 1) +
                         " is nonzero";
            return rep;
        }
    }
    for (size_t k = 0; k + 1 < maps.size(); ++k) {
        // exactness at F_{k+1}: dim ker(maps[k])_d == dim im(maps[k+1])_d
        Submodule im_lower = Submodule::image_of(maps[k]);
        Submodule im_upper = Submodule::image_of(maps[k + 1]);
        for (int d = 0; d <= max_degree; ++d) {
            mpz_class ker_dim = free_module_slice_dim(maps[k].source(), d) -
                                submodule_slice_dim(im_lower, d);
            mpz_class im_dim = submodule_slice_dim(im_upper, d);
            if (ker_dim != im_dim) {
                rep.exact = false;
                rep.detail = "spot " + std::to_string(k + 1) + " degree " +
                             std::to_string(d) + ": dim ker = " + ker_dim.get_str() +
                             ", dim im = " + im_dim.get_str();
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace ssideal
