// Acceptance battery: every criterion prints one pass/fail line with its
// runtime; the binary exits nonzero if any criterion fails. All arithmetic is
// exact over Q; every tolerance here is equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "ssideal/bourbaki.hpp"
#include "ssideal/cohomology.hpp"
#include "ssideal/fixture.hpp"
#include "ssideal/invariants.hpp"
#include "ssideal/parse.hpp"

#ifndef SSIDEAL_FIXTURE_DIR
#define SSIDEAL_FIXTURE_DIR "fixtures"
#endif

using namespace ssideal;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    bool in_budget = budget_seconds <= 0 || secs < budget_seconds;
    if (!in_budget) detail += " [over runtime budget]";
    if (ok && in_budget) {
        std::printf("[PASS] criterion %2d: %s (%.2fs)\n", number, label.c_str(), secs);
    } else {
        std::printf("[FAIL] criterion %2d: %s (%.2fs) %s\n", number, label.c_str(), secs,
                    detail.c_str());
        ++failures;
    }
}

std::string fixture_path(const std::string& name) {
    return std::string(SSIDEAL_FIXTURE_DIR) + "/" + name;
}

Ring r6() { return Ring{6, Field::rationals(), OrderKind::Grevlex}; }

Submodule example1_ideal(const Ring& ring) {
    std::vector<Polynomial> gens;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j)
            gens.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, j));
    return Submodule::ideal(ring, gens);
}

bool report_check(const Report& rep, const std::string& name, std::string& detail) {
    for (const auto& c : rep.checks)
        if (c.check == name && c.pass) return true;
    detail += " missing/failed check " + name + ";";
    return false;
}

}  // namespace

int main() {
    // 1. Example 1 end-to-end
    criterion(1, "Example 1 end-to-end: kernel equality, exact sequence, ideal, spot (1,K)",
              30.0, [&](std::string& detail) {
        FixtureFile fx = load_fixture(fixture_path("example1.toml"));
        FixtureOutcome out = verify_fixture(fx, FixtureRunOptions{});
        bool ok = out.pass;
        ok = report_check(out.report, "kernel_condition", detail) && ok;
        ok = report_check(out.report, "exact_at_G", detail) && ok;
        ok = report_check(out.report, "exact_at_M", detail) && ok;
        ok = report_check(out.report, "f_injective", detail) && ok;
        ok = report_check(out.report, "ideal_generators", detail) && ok;
        ok = report_check(out.report, "ideal_codim", detail) && ok;
        ok = report_check(out.report, "single_spot", detail) && ok;
        if (!out.pass) detail += " full report not clean;";
        return ok;
    });

    // 2. Example 2
    criterion(2, "Example 2: non-trivial type, exact numerical conditions, same ideal",
              60.0, [&](std::string& detail) {
        FixtureFile fx = load_fixture(fixture_path("example2.toml"));
        FixtureRunOptions opts;
        opts.expect_nontrivial = true;
        FixtureOutcome out = verify_fixture(fx, opts);
        bool ok = out.pass;
        ok = report_check(out.report, "nontriviality", detail) && ok;
        ok = report_check(out.report, "expected_triviality", detail) && ok;
        ok = report_check(out.report, "numerical_conditions", detail) && ok;
        if (!out.ideal) {
            detail += " no ideal extracted;";
            return false;
        }
        BourbakiParameters p{6, 1, 0, 0, {3, 3, 6}, {2, 2, 2, 2, 2, 2, 5, 5, 5, 5, 5, 5}};
        NumericalConditions cond = numerical_conditions(p);
        if (!(cond.lhs1 == 12 && cond.rhs1 == 3 + 5 + 4 && cond.lhs2 == 30 &&
              cond.rhs2 == 30 && cond.lhs3 == 120 && cond.rhs3 == 120)) {
            detail += " closed-form values off;";
            ok = false;
        }
        if (!submodule_equal(out.ideal->as_submodule, example1_ideal(r6()))) {
            detail += " ideal differs from Example 1;";
            ok = false;
        }
        return ok;
    });

    // 3. Example 3
    criterion(3, "Example 3: corrected witness verifies, ideal and conditions exact",
              120.0, [&](std::string& detail) {
        FixtureFile fx = load_fixture(fixture_path("example3.toml"));
        FixtureOutcome out = verify_fixture(fx, FixtureRunOptions{});
        bool ok = out.pass;
        ok = report_check(out.report, "variant_beta_4", detail) && ok;
        ok = report_check(out.report, "kernel_condition", detail) && ok;
        ok = report_check(out.report, "ideal_generators", detail) && ok;
        ok = report_check(out.report, "ideal_codim", detail) && ok;
        ok = report_check(out.report, "numerical_conditions", detail) && ok;
        BourbakiParameters p{6, 0, 2, 1, {10, 7, 7}, {5, 6, 6, 6, 6, 8, 4, 4}};
        NumericalConditions cond = numerical_conditions(p);
        if (!(cond.lhs2 == 21 && cond.rhs2 == 21 && cond.lhs3 == 67 && cond.rhs3 == 67)) {
            detail += " closed-form values off;";
            ok = false;
        }
        return ok;
    });

    // 4. rank E_t by fraction-free elimination
    criterion(4, "rank E_t = C(n-1,t-1) for 1 <= t <= n <= 7 (28 exact equalities)", 0,
              [&](std::string& detail) {
        int checked = 0;
        for (int n = 1; n <= 7; ++n) {
            Ring ring{n, Field::rationals(), OrderKind::Grevlex};
            KoszulComplex kc(ring);
            for (int t = 1; t <= n; ++t) {
                Submodule et = Submodule::image_of(kc.differential(t));
                int got = rank_of_submodule(et);
                long long want = binom_safe_ll(n - 1, t - 1);
                ++checked;
                if (got != want) {
                    detail += " rank E_" + std::to_string(t) + " at n=" +
                              std::to_string(n) + " gave " + std::to_string(got) + ";";
                    return false;
                }
            }
        }
        detail = std::to_string(checked) + " equalities";
        return checked == 28;
    });

    // 5. closed-form identities
    criterion(5, "alternating-sum identities for 4 <= n <= 20 (442 cases, exact)", 0,
              [&](std::string& detail) {
        IdentityReport rep = identity_suite(20);
        int identity_cases = 0;
        for (int n = 4; n <= 20; ++n) identity_cases += 2 * (n + 1);
        detail = std::to_string(identity_cases) + " identity cases";
        if (!rep.ok()) {
            detail += "; first mismatch: " + rep.mismatches.front();
            return false;
        }
        return identity_cases == 442;
    });

    // 6. Q-derivative propositions on 500 draws
    criterion(6, "Q(1), Q'(1), Q''(1) agree with closed-form conditions on 500 draws", 0,
              [&](std::string& detail) {
        std::mt19937 rng(20260810);
        int checked = 0, bad = 0;
        while (checked < 500) {
            BourbakiParameters p;
            p.n = 4 + static_cast<int>(rng() % 7);
            p.t = static_cast<int>(rng() % static_cast<unsigned>(p.n - 3));
            p.d = static_cast<int>(rng() % 3);
            p.c = p.d + static_cast<int>(rng() % 4);
            int np = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < np; ++i)
                p.a_twists.push_back(1 + static_cast<int>(rng() % 10));
            long long qn = np + binom_safe_ll(p.n - 1, p.t) + p.n - 2;
            int mode = static_cast<int>(rng() % 5);
            if (mode == 0) {
                long long qq = qn + 1 + static_cast<int>(rng() % 3);
                for (long long i = 0; i < qq; ++i)
                    p.b_twists.push_back(1 + static_cast<int>(rng() % 10));
            } else if (mode <= 2) {
                for (long long i = 0; i < qn; ++i)
                    p.b_twists.push_back(1 + static_cast<int>(rng() % 10));
            } else {
                for (long long i = 0; i + 1 < qn; ++i)
                    p.b_twists.push_back(1 + static_cast<int>(rng() % 10));
                NumericalConditions pre = numerical_conditions(p);
                mpz_class need = pre.rhs2 - pre.lhs2;
                if (need < 1 || !need.fits_sint_p()) continue;
                p.b_twists.push_back(static_cast<int>(need.get_si()));
            }
            ++checked;
            NumericalConditions cond = numerical_conditions(p);
            IntPoly q = q_polynomial(p);
            bool q1 = q.eval_one() == 0;
            bool q2 = q.derivative().eval_one() == 0;
            bool q3 = q.derivative().derivative().eval_one() == 0;
            if (cond.cond1 && !q1) ++bad;
            if (cond.cond1 && (q2 != cond.cond2)) ++bad;
            if (cond.cond1 && cond.cond2 && (q3 != cond.cond3)) ++bad;
        }
        detail = std::to_string(checked) + " draws, " + std::to_string(bad) + " mismatches";
        return bad == 0;
    });

    // 7. Hilbert two-oracle agreement
    criterion(7, "mapping-cone numerator equals monomial recursion (Examples 1-2)", 0,
              [&](std::string& detail) {
        IntPoly pinned;
        pinned.add_term(0, 1);
        pinned.add_term(2, -9);
        pinned.add_term(3, 18);
        pinned.add_term(4, -15);
        pinned.add_term(5, 6);
        pinned.add_term(6, -1);
        for (const char* name : {"example1.toml", "example2.toml"}) {
            FixtureFile fx = load_fixture(fixture_path(name));
            FixtureOutcome out = verify_fixture(fx, FixtureRunOptions{});
            if (!out.pass || !out.ideal) {
                detail += std::string(" ") + name + " did not verify;";
                return false;
            }
            if (!report_check(out.report, "hilbert_two_oracles", detail)) return false;
            IntPoly q_mono = monomial_ideal_numerator(
                out.ideal->as_submodule.gb().lead_ideals[0], 6);
            if (!(q_mono == pinned)) {
                detail += std::string(" ") + name + " numerator differs from the pinned Q;";
                return false;
            }
        }
        return true;
    });

    // 8. Corollary depthzero
    criterion(8, "t = 0: Ker(phi in A) = E_2 for n = 4,5,6 and witnesses are refused", 0,
              [&](std::string& detail) {
        for (int n = 4; n <= 6; ++n) {
            Ring ring{n, Field::rationals(), OrderKind::Grevlex};
            KoszulComplex kc(ring);
            Subset L;
            for (int i = 1; i <= n; ++i) L.push_back(i);
            DualForm a = family_A_generator(kc, 0, L);
            Submodule ker = kernel(a.as_hom(kc));
            Submodule e2 = Submodule::image_of(kc.differential(2));
            if (!submodule_equal(ker, e2)) {
                detail += " kernel != E_2 at n=" + std::to_string(n) + ";";
                return false;
            }
            // any candidate beta is either inside E_2 (refused with the
            // documented error) or breaks the kernel equality
            GradedFreeModule dom = witness_domain(kc, MKind::EOnly, 0, 0);
            ModuleElement inside =
                kc.differential(2).column(0).with_parent(dom);
            BourbakiWitness refused(MKind::EOnly, 0, 0, {inside}, a, std::nullopt);
            bool threw = false;
            try {
                kernel_condition_check(kc, refused);
            } catch (const WitnessInvariantViolation&) {
                threw = true;
            }
            if (!threw) {
                detail += " witness inside E_2 was not refused at n=" + std::to_string(n) + ";";
                return false;
            }
            BourbakiWitness outside(MKind::EOnly, 0, 0,
                                    {ModuleElement::basis(dom, 0)}, a, std::nullopt);
            KernelConditionResult res = kernel_condition_check(kc, outside);
            if (res.kernel_equal) {
                detail += " outside-witness kernel equality unexpectedly held;";
                return false;
            }
        }
        return true;
    });

    // 9. Theorem main1 on M = E_2 ⊕ E_5
    criterion(9, "M = E_2+E_5 at n=6: Ext profile and all main1 clauses", 0,
              [&](std::string& detail) {
        Ring ring = r6();
        KoszulComplex kc(ring);
        ModuleHom pres = kc.differential(3).direct_sum(kc.differential(6));
        ExtProfile ext = ext_profile(pres);
        bool ok = ext.projective_dimension == 4;
        auto finite_total_one = [&](int j) {
            auto it = ext.ext.find(j);
            return it != ext.ext.end() && it->second.kind == SubquotientProfile::Finite &&
                   it->second.h.total() == 1;
        };
        if (!finite_total_one(4)) {
            detail += " Ext^4 != K;";
            ok = false;
        }
        if (!finite_total_one(1)) {
            detail += " Ext^1 not finite of total dimension 1;";
            ok = false;
        }
        for (int j = 2; j <= 3; ++j)
            if (!ext.ext.at(j).is_zero()) {
                detail += " Ext^" + std::to_string(j) + " nonzero;";
                ok = false;
            }
        GradedHilbertFunction N;
        N.values = ext.ext.at(1).h.dual().values;
        Report rep = theorem_main1_check(pres, 1, N);
        if (!rep.all_pass()) {
            detail += " main1 clauses failed;";
            ok = false;
        }
        return ok;
    });

    // 10. property suite
    criterion(10, "d∘d = 0 (n<=7), resolution exactness certified, byte-identical reports",
              0, [&](std::string& detail) {
        for (int n = 2; n <= 7; ++n) {
            Ring ring{n, Field::rationals(), OrderKind::Grevlex};
            KoszulComplex kc(ring);
            for (int k = 2; k <= n; ++k)
                if (!compose(kc.differential(k - 1), kc.differential(k)).is_zero()) {
                    detail += " d∘d != 0;";
                    return false;
                }
        }
        // exactness certificate on returned resolutions
        Ring ring = r6();
        Submodule I = example1_ideal(ring);
        std::vector<int> twists;
        for (const auto& g : I.generators())
            twists.push_back(g.homogeneous_degree().value_or(0));
        ModuleHom pres = ModuleHom::from_columns(GradedFreeModule(ring, twists),
                                                 I.ambient(), I.generators());
        FreeResolution res = minimal_free_resolution(pres, 7);
        ExactnessReport ex = certify_complex(res.maps, complex_degree_window(res.maps));
        if (!ex.ok()) {
            detail += " resolution certificate failed: " + ex.detail + ";";
            return false;
        }
        // determinism of the full fixture reports
        for (const char* name : {"example1.toml", "example2.toml"}) {
            FixtureFile fx = load_fixture(fixture_path(name));
            std::string j1 = verify_fixture(fx, FixtureRunOptions{}).report.to_json();
            std::string j2 = verify_fixture(fx, FixtureRunOptions{}).report.to_json();
            if (j1 != j2) {
                detail += std::string(" ") + name + " reports differ across runs;";
                return false;
            }
        }
        return true;
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria pass\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
