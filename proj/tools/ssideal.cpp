#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ssideal/fixture.hpp"
#include "ssideal/invariants.hpp"
#include "ssideal/koszul.hpp"
#include "ssideal/parse.hpp"

using namespace ssideal;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitEngineAbort = 3;

int run_verify(const std::string& path, const std::string& tail_name,
               bool expect_nontrivial, const std::string& report_path) {
    FixtureFile fx;
    try {
        fx = load_fixture(path);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    FixtureRunOptions opts;
    opts.expect_nontrivial = expect_nontrivial;
    if (tail_name == "Et1")
        opts.tail = KernelTail::Et1;
    else if (tail_name == "Et2")
        opts.tail = KernelTail::Et2;
    else {
        std::cerr << "parse error: --kernel-tail must be Et1 or Et2\n";
        return kExitParseError;
    }
    try {
        FixtureOutcome outcome = verify_fixture(fx, opts);
        std::cout << outcome.report.to_text();
        if (!report_path.empty()) {
            std::ofstream out(report_path);
            out << outcome.report.to_json() << "\n";
        } else {
            std::cout << outcome.report.to_json() << "\n";
        }
        return outcome.pass ? kExitPass : kExitCheckFailure;
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "engine abort: " << e.what() << "\n";
        return kExitEngineAbort;
    } catch (const FixtureError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }
}

int run_numerical(int n, int t, int c, int d, const std::vector<int>& a,
                  const std::vector<int>& b) {
    BourbakiParameters p{n, t, c, d, a, b};
    NumericalConditions cond = numerical_conditions(p);
    Report rep;
    auto row = [&](const std::string& name, bool pass, const mpz_class& lhs,
                   const mpz_class& rhs) {
        CheckResult r;
        r.check = name;
        r.pass = pass;
        r.lhs = lhs.get_str();
        r.rhs = rhs.get_str();
        if (!pass) r.notes = "delta = " + mpz_class(lhs - rhs).get_str();
        rep.add(std::move(r));
    };
    row("cond1_rank", cond.cond1, cond.lhs1, cond.rhs1);
    row("cond2_degree_sum", cond.cond2, cond.lhs2, cond.rhs2);
    row("cond3_degree_square_sum", cond.cond3, cond.lhs3, cond.rhs3);
    IntPoly q = q_polynomial(p);
    CheckResult qr;
    qr.check = "q_polynomial";
    qr.pass = true;
    qr.lhs = "Q(1) = " + q.eval_one().get_str() +
             ", Q'(1) = " + q.derivative().eval_one().get_str() +
             ", Q''(1) = " + q.derivative().derivative().eval_one().get_str();
    qr.rhs = "Q = " + q.str();
    rep.add(std::move(qr));
    std::cout << rep.to_text();
    std::cout << rep.to_json() << "\n";
    return cond.all() ? kExitPass : kExitCheckFailure;
}

int run_identities(int max_n) {
    IdentityReport rep = identity_suite(max_n);
    std::cout << "checked " << rep.cases << " identity instances up to n = " << max_n
              << "\n";
    for (const auto& m : rep.mismatches) std::cout << "mismatch: " << m << "\n";
    std::cout << (rep.ok() ? "all identities hold\n" : "MISMATCHES FOUND\n");
    return rep.ok() ? kExitPass : kExitCheckFailure;
}

int run_koszul(int n, int k, bool show_differential) {
    if (n < 1 || n > 12 || k < 0 || k > n) {
        std::cerr << "bounds: need 1 <= n <= 12 and 0 <= k <= n\n";
        return kExitParseError;
    }
    Ring ring{n, Field::rationals(), OrderKind::Grevlex};
    KoszulComplex kc(ring);
    GradedFreeModule m = kc.module(k);
    std::cout << "K_" << k << ": rank " << m.rank() << ", twists all " << k << "\n";
    if (show_differential && k >= 1) {
        // terms in formula order: d_k(e_J) = Σ_j (-1)^{j+1} x_{i_j} e_{J \ i_j}
        for (const Subset& J : kc.basis(k)) {
            std::cout << "d_" << k << "(e" << subset_str(J) << ") =";
            for (size_t j = 0; j < J.size(); ++j) {
                Subset face;
                for (size_t l = 0; l < J.size(); ++l)
                    if (l != j) face.push_back(J[l]);
                bool neg = j % 2 == 1;
                std::cout << (j == 0 ? (neg ? " -" : " ") : (neg ? " - " : " + ")) << "x"
                          << J[j] << " e" << subset_str(face);
            }
            std::cout << "\n";
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded commutative algebra toolkit for long Bourbaki sequences"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "verify a fixture file");
    std::string path, tail = "Et2", report_path;
    bool expect_nontrivial = false;
    verify->add_option("file", path, "fixture file")->required();
    verify->add_option("--kernel-tail", tail, "kernel tail reading (Et1|Et2)")
        ->default_val("Et2");
    verify->add_flag("--expect-nontrivial", expect_nontrivial,
                     "fail unless the sequence is of non-trivial type");
    verify->add_option("--report", report_path, "write the JSON report to this file");

    auto* numerical = app.add_subcommand("numerical", "evaluate the codim-3 conditions");
    int n = 0, t = 0, c = 0, d = 0;
    std::vector<int> a_list, b_list;
    numerical->add_option("--n", n)->required();
    numerical->add_option("--t", t)->required();
    numerical->add_option("--c", c)->default_val(0);
    numerical->add_option("--d", d)->default_val(0);
    numerical->add_option("--a", a_list, "twists a_1..a_p")->delimiter(',');
    numerical->add_option("--b", b_list, "twists b_1..b_q")->delimiter(',');

    auto* identities = app.add_subcommand("identities", "sweep the binomial identities");
    int max_n = 20;
    identities->add_option("--max-n", max_n)->default_val(20);

    auto* koszul = app.add_subcommand("koszul", "inspect a Koszul module");
    int kn = 0, kk = 0;
    bool show_diff = false;
    koszul->add_option("--n", kn)->required();
    koszul->add_option("--k", kk)->required();
    koszul->add_flag("--show-differential", show_diff);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    try {
        if (verify->parsed())
            return run_verify(path, tail, expect_nontrivial, report_path);
        if (numerical->parsed()) return run_numerical(n, t, c, d, a_list, b_list);
        if (identities->parsed()) return run_identities(max_n);
        if (koszul->parsed()) return run_koszul(kn, kk, show_diff);
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "engine abort: " << e.what() << "\n";
        return kExitEngineAbort;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitParseError;
}
