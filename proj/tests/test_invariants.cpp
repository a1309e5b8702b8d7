#include <doctest.h>

#include <random>

#include "ssideal/invariants.hpp"

using namespace ssideal;

TEST_CASE("binom_safe") {
    CHECK(binom_safe(5, 1) == 5);
    CHECK(binom_safe(4, -1) == 0);
    CHECK(binom_safe(6, 3) == 20);
    CHECK(binom_safe(-1, 0) == 0);
    CHECK(binom_safe(3, 5) == 0);
}

TEST_CASE("identity suite sweeps clean up to n = 20") {
    IdentityReport rep = identity_suite(20);
    for (const auto& m : rep.mismatches) MESSAGE(m);
    CHECK(rep.ok());
    // spec's worked values at n=6, t=1
    // Σ_{i=2}^6 (-1)^i C(6,i) i = 6 = C(4,0) + C(5,1)·1
    mpz_class s = 0;
    for (int i = 2; i <= 6; ++i) {
        mpz_class term = binom_safe(6, i) * i;
        if (i % 2 != 0) term = -term;
        s += term;
    }
    CHECK(s == 6);
    CHECK(binom_safe(4, 0) + binom_safe(5, 1) * 1 == 6);
    // Σ_{i=2}^6 (-1)^i C(6,i) i^2 = 6 = 20 - 12 - 2
    mpz_class s2 = 0;
    for (int i = 2; i <= 6; ++i) {
        mpz_class term = binom_safe(6, i) * i * i;
        if (i % 2 != 0) term = -term;
        s2 += term;
    }
    CHECK(s2 == 6);
    CHECK(binom_safe(5, 1) * 4 - binom_safe(4, 1) * 3 - 2 * binom_safe(3, 0) == 6);
}

namespace {

BourbakiParameters example2_params() {
    BourbakiParameters p;
    p.n = 6;
    p.t = 1;
    p.c = 0;
    p.d = 0;
    p.a_twists = {3, 3, 6};
    p.b_twists = {2, 2, 2, 2, 2, 2, 5, 5, 5, 5, 5, 5};
    return p;
}

BourbakiParameters example3_params() {
    BourbakiParameters p;
    p.n = 6;
    p.t = 0;
    p.c = 2;
    p.d = 1;
    p.a_twists = {10, 7, 7};
    p.b_twists = {5, 6, 6, 6, 6, 8, 4, 4};
    return p;
}

}  // namespace

TEST_CASE("numerical conditions on the paper's fixtures") {
    NumericalConditions c2 = numerical_conditions(example2_params());
    CHECK(c2.cond1);
    CHECK(c2.lhs1 == 12);
    CHECK(c2.rhs1 == 3 + 5 + 4);
    CHECK(c2.cond2);
    CHECK(c2.lhs2 == 30);
    CHECK(c2.rhs2 == 30);
    CHECK(c2.cond3);
    CHECK(c2.lhs3 == 120);
    CHECK(c2.rhs3 == 120);

    NumericalConditions c3 = numerical_conditions(example3_params());
    CHECK(c3.cond1);
    CHECK(c3.lhs1 == 8);
    CHECK(c3.rhs1 == 3 + 1 + 4);
    CHECK(c3.cond2);
    CHECK(c3.lhs2 == 21);
    CHECK(c3.cond3);
    CHECK(c3.lhs3 == 67);

    // strict equality: a single perturbed b breaks condition 2
    BourbakiParameters p = example2_params();
    p.b_twists[3] += 1;
    NumericalConditions broken = numerical_conditions(p);
    CHECK_FALSE(broken.cond2);
    CHECK(broken.lhs2 - broken.rhs2 == 1);
}

TEST_CASE("q_polynomial matches the derivative propositions on the fixtures") {
    for (const auto& p : {example2_params(), example3_params()}) {
        IntPoly q = q_polynomial(p);
        CHECK(q.eval_one() == 0);
        CHECK(q.derivative().eval_one() == 0);
        CHECK(q.derivative().derivative().eval_one() == 0);
    }
}

TEST_CASE("derivative evaluations agree with the closed-form conditions on 500 draws") {
    std::mt19937 rng(424242);
    int checked = 0;
    int mismatches = 0;
    while (checked < 500) {
        BourbakiParameters p;
        p.n = 4 + static_cast<int>(rng() % 7);  // n in [4,10]
        p.t = static_cast<int>(rng() % static_cast<unsigned>(p.n - 3));  // t <= n-4
        p.d = static_cast<int>(rng() % 3);
        p.c = p.d + static_cast<int>(rng() % 4);
        int np = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < np; ++i)
            p.a_twists.push_back(1 + static_cast<int>(rng() % 10));
        long long qn = np + binom_safe_ll(p.n - 1, p.t) + p.n - 2;
        int mode = static_cast<int>(rng() % 5);
        if (mode == 0) {
            // violate condition 1
            long long qq = qn + 1 + static_cast<int>(rng() % 3);
            for (long long i = 0; i < qq; ++i)
                p.b_twists.push_back(1 + static_cast<int>(rng() % 10));
        } else if (mode <= 2) {
            // free draw with condition 1 enforced
            for (long long i = 0; i < qn; ++i)
                p.b_twists.push_back(1 + static_cast<int>(rng() % 10));
        } else {
            // engineer condition 2 via the last b
            for (long long i = 0; i + 1 < qn; ++i)
                p.b_twists.push_back(1 + static_cast<int>(rng() % 10));
            NumericalConditions pre = numerical_conditions(p);
            mpz_class need = pre.rhs2 - pre.lhs2;  // value the last b must add
            if (need < 1 || !need.fits_sint_p()) continue;  // redraw
            p.b_twists.push_back(static_cast<int>(need.get_si()));
        }
        ++checked;

        NumericalConditions cond = numerical_conditions(p);
        IntPoly q = q_polynomial(p);
        bool q1_zero = q.eval_one() == 0;
        bool q2_zero = q.derivative().eval_one() == 0;
        bool q3_zero = q.derivative().derivative().eval_one() == 0;

        if (cond.cond1 && !q1_zero) ++mismatches;          // Prop Q(1)=0
        if (cond.cond1 && (q2_zero != cond.cond2)) ++mismatches;  // Prop Q'(1)=0
        if (cond.cond1 && cond.cond2 && (q3_zero != cond.cond3)) ++mismatches;  // Q''(1)=0
    }
    CHECK(checked == 500);
    CHECK(mismatches == 0);
}
