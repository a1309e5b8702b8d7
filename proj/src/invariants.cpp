#include "ssideal/invariants.hpp"

namespace ssideal {

mpz_class binom_safe(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

long long binom_safe_ll(long n, long k) {
    mpz_class r = binom_safe(n, k);
    if (!r.fits_slong_p()) throw std::overflow_error("binom_safe_ll overflow");
    return r.get_si();
}

IntPoly q_polynomial(const BourbakiParameters& p) {
    IntPoly q = IntPoly::one();
    q.add_term(p.n - 1 + p.c - p.d, -mpz_class(p.n));
    q.add_term(p.n + p.c - p.d, 1);
    for (int b : p.b_twists) q.add_term(b + p.c, 1);
    for (int a : p.a_twists) q.add_term(a + p.c, -1);
    for (int i = p.t + 1; i <= p.n; ++i) {
        mpz_class c = binom_safe(p.n, i);
        if ((i + p.t) % 2 != 0) c = -c;  // (-1)^t (-1)^i
        q.add_term(p.c + i, c);
    }
    return q;
}

NumericalConditions numerical_conditions(const BourbakiParameters& p) {
    NumericalConditions r;
    long n = p.n, t = p.t, c = p.c, d = p.d;

    r.lhs1 = p.q();
    r.rhs1 = mpz_class(p.p()) + binom_safe(n - 1, t) + n - 2;
    r.cond1 = r.lhs1 == r.rhs1;

    mpz_class sum_b = 0, sum_a = 0, sum_b2 = 0, sum_a2 = 0;
    for (int b : p.b_twists) {
        sum_b += b;
        sum_b2 += mpz_class(b) * b;
    }
    for (int a : p.a_twists) {
        sum_a += a;
        sum_a2 += mpz_class(a) * a;
    }

    r.lhs2 = sum_b - sum_a;
    r.rhs2 = mpz_class(n) * n - (2 + d) * n + c + d + binom_safe(n - 2, t - 1) +
             binom_safe(n - 1, t) * t;
    r.cond2 = r.lhs2 == r.rhs2;

    r.lhs3 = sum_b2 - sum_a2;
    r.rhs3 = mpz_class(n) * n * n - (3 + 2 * d) * mpz_class(n) * n +
             (mpz_class(d) * d + 4 * d + 1) * n - mpz_class(c) * c - mpz_class(d) * d +
             binom_safe(n - 1, t) * (t + 1) * (t + 1) -
             binom_safe(n - 2, t) * (2 * t + 1) - 2 * binom_safe(n - 3, t - 1);
    r.cond3 = r.lhs3 == r.rhs3;
    return r;
}

IdentityReport identity_suite(int n_max) {
    if (n_max < 4) throw std::invalid_argument("identity_suite: n_max must be >= 4");
    IdentityReport rep;
    for (int n = 4; n <= n_max; ++n) {
        for (int t = 0; t <= n; ++t) {
            // brute-force alternating sums
            mpz_class s1 = 0, s2 = 0;
            for (int i = t + 1; i <= n; ++i) {
                mpz_class term = binom_safe(n, i);
                if (i % 2 != 0) term = -term;
                s1 += term * i;
                s2 += term * i * i;
            }
            if ((t + 1) % 2 != 0) {
                s1 = -s1;
                s2 = -s2;
            }
            mpz_class closed1 = binom_safe(n - 2, t - 1) + binom_safe(n - 1, t) * t;
            ++rep.cases;
            if (s1 != closed1)
                rep.mismatches.push_back("sum-i identity at (n,t)=(" + std::to_string(n) +
                                         "," + std::to_string(t) + "): " + s1.get_str() +
                                         " vs " + closed1.get_str());
            mpz_class closed2 = binom_safe(n - 1, t) * (t + 1) * (t + 1) -
                                binom_safe(n - 2, t) * (2 * t + 1) -
                                2 * binom_safe(n - 3, t - 1);
            ++rep.cases;
            if (s2 != closed2)
                rep.mismatches.push_back("sum-i^2 identity at (n,t)=(" + std::to_string(n) +
                                         "," + std::to_string(t) + "): " + s2.get_str() +
                                         " vs " + closed2.get_str());
            // rank recursion α(n,t) - α(n-1,t) = α(n-1,t-1), where
            // α(n,t) = (-1)^{t-1} Σ_{i=0}^{t-1} (-1)^i C(n,i) = rank E_t
            auto alpha = [](int nn, int tt) {
                mpz_class s = 0;
                for (int i = 0; i <= tt - 1; ++i) {
                    mpz_class term = binom_safe(nn, i);
                    if (i % 2 != 0) term = -term;
                    s += term;
                }
                if ((tt - 1) % 2 != 0) s = -s;
                return s;
            };
            ++rep.cases;
            if (alpha(n, t) - alpha(n - 1, t) != alpha(n - 1, t - 1))
                rep.mismatches.push_back("alpha recursion at (n,t)=(" + std::to_string(n) +
                                         "," + std::to_string(t) + ")");
            ++rep.cases;
            if (alpha(n, t) != binom_safe(n - 1, t - 1))
                rep.mismatches.push_back("rank E_t closed form at (n,t)=(" +
                                         std::to_string(n) + "," + std::to_string(t) + ")");
        }
    }
    return rep;
}

}  // namespace ssideal
