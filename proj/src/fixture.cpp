#include "ssideal/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ssideal/parse.hpp"

namespace ssideal {

namespace {

// ------- minimal TOML subset: [section], key = string | int | array -------

struct TomlValue {
    enum Kind { String, Integer, Array } kind = String;
    std::string s;
    long i = 0;
    std::vector<TomlValue> items;
};

struct TomlDoc {
    // section -> key -> value, in file order for determinism
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, TomlValue>>>> sections;

    const std::vector<std::pair<std::string, TomlValue>>* find(const std::string& name) const {
        for (const auto& [sec, kv] : sections)
            if (sec == name) return &kv;
        return nullptr;
    }
};

void skip_space(const std::string& s, size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t' || s[p] == '\r' || s[p] == '\n'))
        ++p;
    if (p < s.size() && s[p] == '#') {
        while (p < s.size() && s[p] != '\n') ++p;
        skip_space(s, p);
    }
}

TomlValue parse_value(const std::string& s, size_t& p) {
    skip_space(s, p);
    if (p >= s.size()) throw FixtureError("fixture: expected a value");
    TomlValue v;
    if (s[p] == '"') {
        ++p;
        size_t start = p;
        while (p < s.size() && s[p] != '"') ++p;
        if (p >= s.size()) throw FixtureError("fixture: unterminated string");
        v.kind = TomlValue::String;
        v.s = s.substr(start, p - start);
        ++p;
        return v;
    }
    if (s[p] == '[') {
        ++p;
        v.kind = TomlValue::Array;
        skip_space(s, p);
        while (p < s.size() && s[p] != ']') {
            v.items.push_back(parse_value(s, p));
            skip_space(s, p);
            if (p < s.size() && s[p] == ',') {
                ++p;
                skip_space(s, p);
            }
        }
        if (p >= s.size()) throw FixtureError("fixture: unterminated array");
        ++p;
        return v;
    }
    if (s[p] == '-' || std::isdigit(static_cast<unsigned char>(s[p]))) {
        size_t start = p;
        if (s[p] == '-') ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        v.kind = TomlValue::Integer;
        v.i = std::stol(s.substr(start, p - start));
        return v;
    }
    if (s.compare(p, 4, "true") == 0) {
        v.kind = TomlValue::Integer;
        v.i = 1;
        p += 4;
        return v;
    }
    if (s.compare(p, 5, "false") == 0) {
        v.kind = TomlValue::Integer;
        v.i = 0;
        p += 5;
        return v;
    }
    throw FixtureError("fixture: unrecognized value near '" + s.substr(p, 12) + "'");
}

TomlDoc parse_toml(const std::string& text) {
    TomlDoc doc;
    size_t p = 0;
    std::string current;
    doc.sections.push_back({"", {}});
    while (true) {
        skip_space(text, p);
        if (p >= text.size()) break;
        if (text[p] == '[') {
            ++p;
            size_t start = p;
            while (p < text.size() && text[p] != ']') ++p;
            if (p >= text.size()) throw FixtureError("fixture: unterminated section header");
            current = text.substr(start, p - start);
            ++p;
            doc.sections.push_back({current, {}});
            continue;
        }
        size_t start = p;
        while (p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) ||
                                   text[p] == '_'))
            ++p;
        if (p == start) throw FixtureError("fixture: expected a key near '" +
                                           text.substr(p, 12) + "'");
        std::string key = text.substr(start, p - start);
        skip_space(text, p);
        if (p >= text.size() || text[p] != '=')
            throw FixtureError("fixture: expected '=' after key " + key);
        ++p;
        TomlValue v = parse_value(text, p);
        doc.sections.back().second.push_back({key, std::move(v)});
    }
    return doc;
}

long require_int(const TomlValue& v, const std::string& key) {
    if (v.kind != TomlValue::Integer)
        throw FixtureError("fixture: key '" + key + "' must be an integer");
    return v.i;
}

std::string require_string(const TomlValue& v, const std::string& key) {
    if (v.kind != TomlValue::String)
        throw FixtureError("fixture: key '" + key + "' must be a string");
    return v.s;
}

std::vector<std::string> require_string_array(const TomlValue& v, const std::string& key) {
    if (v.kind != TomlValue::Array)
        throw FixtureError("fixture: key '" + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& item : v.items) out.push_back(require_string(item, key));
    return out;
}

std::vector<int> require_int_array(const TomlValue& v, const std::string& key) {
    if (v.kind != TomlValue::Array)
        throw FixtureError("fixture: key '" + key + "' must be an array");
    std::vector<int> out;
    for (const auto& item : v.items)
        out.push_back(static_cast<int>(require_int(item, key)));
    return out;
}

}  // namespace

FixtureFile parse_fixture(const std::string& text) {
    TomlDoc doc = parse_toml(text);
    FixtureFile fx;
    bool saw_ring = false, saw_params = false;
    for (const auto& [sec, kv] : doc.sections) {
        if (sec.empty()) {
            if (!kv.empty()) throw FixtureError("fixture: top-level keys are not allowed");
            continue;
        }
        if (sec == "ring") {
            saw_ring = true;
            for (const auto& [k, v] : kv) {
                if (k == "n") fx.n = static_cast<int>(require_int(v, k));
                else if (k == "field") {
                    std::string f = require_string(v, k);
                    if (f == "rationals") fx.field = Field::rationals();
                    else if (f.rfind("prime:", 0) == 0)
                        fx.field = Field::prime(std::stoul(f.substr(6)));
                    else throw FixtureError("fixture: unknown field '" + f + "'");
                } else throw FixtureError("fixture: unknown key ring." + k);
            }
        } else if (sec == "parameters") {
            saw_params = true;
            for (const auto& [k, v] : kv) {
                if (k == "t") fx.t = static_cast<int>(require_int(v, k));
                else if (k == "c") fx.c = static_cast<int>(require_int(v, k));
                else if (k == "d") fx.d = static_cast<int>(require_int(v, k));
                else if (k == "m_kind") {
                    std::string m = require_string(v, k);
                    if (m == "E_only") fx.kind = MKind::EOnly;
                    else if (m == "E_plus_E") fx.kind = MKind::EPlusE;
                    else throw FixtureError("fixture: unknown m_kind '" + m + "'");
                } else throw FixtureError("fixture: unknown key parameters." + k);
            }
        } else if (sec == "witness") {
            for (const auto& [k, v] : kv) {
                if (k == "betas") fx.betas = require_string_array(v, k);
                else if (k == "a") fx.a_expr = require_string(v, k);
                else if (k == "b") fx.b_expr = require_string(v, k);
                else throw FixtureError("fixture: unknown key witness." + k);
            }
        } else if (sec == "sequence") {
            for (const auto& [k, v] : kv) {
                if (k == "F_twists") fx.f_twists = require_int_array(v, k);
                else if (k == "G_twists") fx.g_twists = require_int_array(v, k);
                else if (k == "f") fx.f_exprs = require_string_array(v, k);
                else throw FixtureError("fixture: unknown key sequence." + k);
            }
        } else if (sec == "expected") {
            for (const auto& [k, v] : kv) {
                if (k == "ideal") fx.expected_ideal = require_string_array(v, k);
                else if (k == "codim") fx.expected_codim = static_cast<int>(require_int(v, k));
                else if (k == "spot_t") fx.expected_spot_t = static_cast<int>(require_int(v, k));
                else if (k == "spot_total")
                    fx.expected_spot_total = require_int(v, k);
                else if (k == "nontrivial") fx.expected_nontrivial = require_int(v, k) != 0;
                else throw FixtureError("fixture: unknown key expected." + k);
            }
        } else if (sec == "variants") {
            for (const auto& [k, v] : kv) fx.variants[k] = require_string_array(v, k);
        } else {
            throw FixtureError("fixture: unknown section [" + sec + "]");
        }
    }
    if (!saw_ring || !saw_params)
        throw FixtureError("fixture: [ring] and [parameters] are required");
    if (fx.n < 1) throw FixtureError("fixture: ring.n must be positive");
    return fx;
}

FixtureFile load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture(buf.str());
}

namespace {

// component-tagged Koszul expression -> element of K_{t+1} (⊕ K_{n-1}(d))
ModuleElement parse_witness_element(const KoszulComplex& kc, const GradedFreeModule& dom,
                                    MKind kind, int t, int d, const std::string& text) {
    int first_rank = kc.module(t + 1).rank();
    ModuleElement out(dom);
    for (const auto& term : parse_expression(text, kc.ring())) {
        if (!term.atom || term.atom->kind != BasisAtom::KoszulE)
            throw FixtureError("witness element must be a sum of e[...] terms: " + text);
        Subset J = term.atom->indices;
        int k = static_cast<int>(J.size());
        ModuleElement basis(dom);
        if (k == t + 1) {
            basis = embed_block(dom, kc.basis_element(t + 1, J), 0);
        } else if (kind == MKind::EPlusE && k == kc.n() - 1) {
            ModuleElement b = ModuleElement::basis(kc.module(kc.n() - 1).twisted(d),
                                                   kc.index_of(kc.n() - 1, J));
            basis = embed_block(dom, b, first_rank);
        } else {
            throw FixtureError("subset size " + std::to_string(k) +
                               " matches neither t+1 nor n-1: " + text);
        }
        out = out + basis.times_poly(term.coeff);
    }
    return out;
}

// form expression: sum of coeff * A[...] or coeff * B[i,j]
PhiPair parse_phi(const KoszulComplex& kc, int t, int d, const std::string& a_expr,
                  const std::optional<std::string>& b_expr, MKind kind) {
    std::vector<std::pair<Subset, Polynomial>> acoef;
    for (const auto& term : parse_expression(a_expr, kc.ring())) {
        if (!term.atom || term.atom->kind != BasisAtom::FamilyA)
            throw FixtureError("a must be a combination of A[...] generators");
        acoef.push_back({term.atom->indices, term.coeff});
    }
    std::vector<std::pair<std::pair<int, int>, Polynomial>> bcoef;
    if (b_expr) {
        for (const auto& term : parse_expression(*b_expr, kc.ring())) {
            if (!term.atom || term.atom->kind != BasisAtom::FamilyB)
                throw FixtureError("b must be a combination of B[i,j] generators");
            if (term.atom->indices.size() != 2)
                throw FixtureError("B[...] takes exactly two indices");
            bcoef.push_back(
                {{term.atom->indices[0], term.atom->indices[1]}, term.coeff});
        }
    }
    return assemble_phi(kc, t, d, acoef, bcoef, kind == MKind::EPlusE);
}

ModuleElement parse_g_element(const Ring& ring, const GradedFreeModule& G,
                              const std::string& text) {
    ModuleElement out(G);
    for (const auto& term : parse_expression(text, ring)) {
        if (!term.atom || term.atom->kind != BasisAtom::GenM)
            throw FixtureError("sequence.f entries must be sums of coeff*m<k>: " + text);
        int k = term.atom->indices[0];
        if (k < 1 || k > G.rank())
            throw FixtureError("m" + std::to_string(k) + " out of range");
        out = out + ModuleElement::basis(G, k - 1).times_poly(term.coeff);
    }
    return out;
}

}  // namespace

FixtureOutcome verify_fixture(const FixtureFile& fx, const FixtureRunOptions& opts) {
    FixtureOutcome out;
    Ring ring{fx.n, fx.field, OrderKind::Grevlex};
    KoszulComplex kc(ring);
    GradedFreeModule dom = witness_domain(kc, fx.kind, fx.t, fx.d);

    PhiPair phi = parse_phi(kc, fx.t, fx.d, fx.a_expr, fx.b_expr, fx.kind);
    {
        CheckResult c;
        c.check = "phi_assembled";
        c.pass = phi.c == fx.c;
        c.lhs = "phi degree " + std::to_string(phi.c + fx.n) + " (c = " +
                std::to_string(phi.c) + ")";
        c.rhs = "declared c = " + std::to_string(fx.c);
        out.report.add(std::move(c));
        if (!out.report.checks.back().pass) {
            out.pass = false;
            return out;
        }
    }

    // resolve beta variants: homogeneity first; if several readings survive,
    // the kernel condition decides
    std::vector<std::string> beta_exprs = fx.betas;
    auto kernel_holds = [&](const std::vector<std::string>& exprs) {
        std::vector<ModuleElement> bs;
        for (const auto& s : exprs)
            bs.push_back(parse_witness_element(kc, dom, fx.kind, fx.t, fx.d, s));
        BourbakiWitness cand(fx.kind, fx.t, fx.d, std::move(bs), phi.a, phi.b);
        return kernel_condition_check(kc, cand, opts.tail).kernel_equal;
    };
    for (const auto& [key, alts] : fx.variants) {
        if (key.rfind("beta_", 0) != 0) continue;
        size_t idx = std::stoul(key.substr(5));
        if (idx < 1 || idx > beta_exprs.size())
            throw FixtureError("variant key " + key + " out of range");
        std::vector<std::string> homogeneous;
        std::string note;
        for (const auto& alt : alts) {
            ModuleElement cand = parse_witness_element(kc, dom, fx.kind, fx.t, fx.d, alt);
            if (cand.homogeneous_degree().kind != HomDegree::Value)
                note += "rejected (inhomogeneous): " + alt + "; ";
            else
                homogeneous.push_back(alt);
        }
        std::string chosen;
        if (homogeneous.size() == 1) {
            chosen = homogeneous.front();
        } else {
            for (const auto& alt : homogeneous) {
                std::vector<std::string> trial = beta_exprs;
                trial[idx - 1] = alt;
                bool holds = false;
                try {
                    holds = kernel_holds(trial);
                } catch (const WitnessInvariantViolation&) {
                }
                if (holds) {
                    chosen = alt;
                    note += "selected by the kernel condition; ";
                    break;
                }
                note += "kernel condition fails: " + alt + "; ";
            }
        }
        CheckResult c;
        c.check = "variant_" + key;
        c.pass = !chosen.empty();
        c.lhs = chosen.empty() ? "no admissible reading" : chosen;
        c.rhs = std::to_string(alts.size()) + " readings shipped";
        c.notes = note;
        out.report.add(std::move(c));
        if (chosen.empty()) {
            out.pass = false;
            return out;
        }
        beta_exprs[idx - 1] = chosen;
    }

    std::vector<ModuleElement> betas;
    for (const auto& s : beta_exprs)
        betas.push_back(parse_witness_element(kc, dom, fx.kind, fx.t, fx.d, s));
    BourbakiWitness witness(fx.kind, fx.t, fx.d, std::move(betas), phi.a, phi.b);

    // gate on the kernel condition; the full report row is produced inside
    // verify_long_bourbaki, so only failures are recorded here
    try {
        KernelConditionResult kres = kernel_condition_check(kc, witness, opts.tail);
        if (!kres.kernel_equal) {
            out.report.append(kres.report);
            out.pass = false;
            return out;
        }
    } catch (const WitnessInvariantViolation& e) {
        CheckResult c;
        c.check = "witness_invariant";
        c.pass = false;
        c.lhs = "beta in E_{t+2} (+ E_n(d))";
        c.rhs = "beta outside the kernel tail";
        c.notes = e.what();
        out.report.add(std::move(c));
        out.pass = false;
        return out;
    }

    BourbakiSequence seq = assemble_sequence(kc, witness);
    if (fx.g_twists) {
        CheckResult c;
        c.check = "G_twists";
        c.pass = seq.G.twists == *fx.g_twists;
        c.lhs = "computed G";
        c.rhs = "declared G";
        out.report.add(std::move(c));
    }
    if (fx.f_twists) {
        std::vector<int> got = seq.F.twists, want = *fx.f_twists;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CheckResult c;
        c.check = "F_twists";
        c.pass = got == want;
        c.lhs = "computed F (sorted)";
        c.rhs = "declared F (sorted)";
        out.report.add(std::move(c));
    }

    // declared f generators (with variants) against the kernel oracle
    if (!fx.f_exprs.empty()) {
        Submodule ker_g = kernel(seq.g);
        std::vector<ModuleElement> fgens;
        bool ok = true;
        for (size_t i = 0; i < fx.f_exprs.size(); ++i) {
            std::vector<std::string> alts{fx.f_exprs[i]};
            auto it = fx.variants.find("f_" + std::to_string(i + 1));
            if (it != fx.variants.end()) alts = it->second;
            std::string chosen, note;
            for (const auto& alt : alts) {
                ModuleElement cand = parse_g_element(ring, seq.G, alt);
                if (membership(cand, ker_g).in) {
                    chosen = alt;
                    fgens.push_back(std::move(cand));
                    break;
                }
                note += "not a syzygy: " + alt + "; ";
            }
            CheckResult c;
            c.check = "f_generator_" + std::to_string(i + 1);
            c.pass = !chosen.empty();
            c.lhs = chosen.empty() ? "no reading lies in Ker(g)" : chosen;
            c.rhs = "member of Ker(g)";
            c.notes = note;
            ok = ok && c.pass;
            out.report.add(std::move(c));
        }
        if (ok) {
            CheckResult c;
            c.check = "f_generates_kernel";
            c.pass = submodule_equal(Submodule(seq.G, fgens), ker_g);
            c.lhs = "<declared f generators>";
            c.rhs = "Ker(g)";
            out.report.add(std::move(c));
        }
    }

    Report vrep = verify_long_bourbaki(kc, seq, opts.tail);
    out.report.append(vrep);
    if (!seq.verified) {
        out.pass = false;
        out.sequence = std::move(seq);
        return out;
    }

    if (fx.kind == MKind::EPlusE) {
        Triviality tr = nontriviality_check(kc, witness, &out.report);
        if (opts.expect_nontrivial || fx.expected_nontrivial) {
            bool want_nontrivial =
                opts.expect_nontrivial || fx.expected_nontrivial.value_or(false);
            CheckResult c;
            c.check = "expected_triviality";
            c.pass = (tr == Triviality::NonTrivial) == want_nontrivial;
            c.lhs = tr == Triviality::NonTrivial ? "non_trivial" : "trivial";
            c.rhs = want_nontrivial ? "non_trivial" : "trivial";
            out.report.add(std::move(c));
        }
        NumericalConditions cond = numerical_conditions(seq.params);
        CheckResult c;
        c.check = "numerical_conditions";
        c.pass = cond.all();
        c.lhs = "q = " + cond.lhs1.get_str() + ", sum b - sum a = " + cond.lhs2.get_str() +
                ", sum b^2 - sum a^2 = " + cond.lhs3.get_str();
        c.rhs = cond.rhs1.get_str() + ", " + cond.rhs2.get_str() + ", " +
                cond.rhs3.get_str();
        out.report.add(std::move(c));
    }

    IdealData ideal = extract_ideal(kc, seq);
    {
        CheckResult c;
        c.check = "ideal_codim";
        c.pass = !fx.expected_codim || ideal.codim == *fx.expected_codim;
        c.lhs = "codim " + std::to_string(ideal.codim);
        c.rhs = fx.expected_codim ? "codim " + std::to_string(*fx.expected_codim)
                                  : "(not declared)";
        std::string gens = "I = (";
        for (size_t i = 0; i < ideal.generators.size(); ++i) {
            if (i) gens += ", ";
            gens += ideal.generators[i].str();
        }
        c.notes = gens + ")";
        out.report.add(std::move(c));
    }
    if (!fx.expected_ideal.empty()) {
        std::vector<Polynomial> gens;
        for (const auto& s : fx.expected_ideal) gens.push_back(parse_polynomial(s, ring));
        Submodule expected = Submodule::ideal(ring, std::move(gens));
        CheckResult c;
        c.check = "ideal_generators";
        c.pass = submodule_equal(ideal.as_submodule, expected);
        c.lhs = std::to_string(ideal.generators.size()) + " computed generators";
        c.rhs = std::to_string(fx.expected_ideal.size()) + " declared generators";
        out.report.add(std::move(c));
    }

    {
        MappingConeResult cone = mapping_cone_resolution(kc, seq);
        out.report.append(cone.report);
        IntPoly q_mono =
            monomial_ideal_numerator(ideal.as_submodule.gb().lead_ideals[0], fx.n);
        CheckResult c;
        c.check = "hilbert_two_oracles";
        c.pass = cone.q_from_cone == q_mono;
        c.lhs = "cone Betti numerator " + cone.q_from_cone.str();
        c.rhs = "monomial recursion " + q_mono.str();
        out.report.add(std::move(c));
    }

    {
        SingleSpotResult spot = single_spot_check(ideal.as_submodule, opts.degree_cap);
        CheckResult c;
        c.check = "single_spot";
        c.pass = true;
        if (fx.expected_spot_t)
            c.pass = spot.yes && spot.t == *fx.expected_spot_t &&
                     (!fx.expected_spot_total || spot.spot.total() == *fx.expected_spot_total);
        c.lhs = spot.yes ? "yes(t = " + std::to_string(spot.t) +
                               ", |N| = " + std::to_string(spot.spot.total()) + ")"
                         : "no: " + spot.reason;
        c.rhs = fx.expected_spot_t
                    ? "yes(t = " + std::to_string(*fx.expected_spot_t) + ")"
                    : "(engine-computed)";
        c.notes = spot.yes ? "N: " + spot.spot.str() : "";
        out.report.add(std::move(c));
    }

    out.sequence = std::move(seq);
    out.ideal = std::move(ideal);
    out.pass = out.report.all_pass();
    return out;
}

}  // namespace ssideal
