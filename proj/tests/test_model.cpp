#include <doctest.h>

#include <cmath>

#include "lindsq/errors.hpp"
#include "lindsq/model.hpp"
#include "oracles.hpp"

using namespace lindsq;
using testutil::Rng;

namespace {

// quadratic-formula oracle for k t^2 - (mu+nu) t + k = 0, smaller root
double quadratic_oracle(double mu, double nu, double k) {
    if (k == 0.0) return 0.0;
    const double sum = mu + nu;
    const double disc = sum * sum - 4.0 * k * k;
    return (sum - std::sqrt(disc)) / (2.0 * k);
}

}  // namespace

TEST_CASE("validate: inequality checks") {
    CHECK_NOTHROW((void)validated(ModelParams{1.0, 3.0, 1.0, {1.0, 0.0}}));
    CHECK_THROWS_AS((void)validated(ModelParams{1.0, 1.0, 1.0, {0.0, 0.0}}), validation_error);
    CHECK_THROWS_AS((void)validated(ModelParams{1.0, 2.0, 1.0, {1.5, 0.0}}), validation_error);
    CHECK_THROWS_AS((void)validated(ModelParams{1.0, 2.0, -0.1, {0.0, 0.0}}), validation_error);
}

TEST_CASE("validate: messages name the violated inequality") {
    try {
        (void)validated(ModelParams{1.0, 2.0, 1.0, {1.5, 0.0}});
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("positivity") != std::string::npos);
    }
}

TEST_CASE("solve_squeeze: mu=3, nu=1, k=1 gives t_h = 2 - sqrt(3)") {
    const SqueezeSolution s = solve_squeeze(ModelParams{1.0, 3.0, 1.0, {1.0, 0.0}});
    CHECK(std::abs(s.t_h - quadratic_oracle(3.0, 1.0, 1.0)) <= 1e-15);
    CHECK(std::abs(s.t_h - 0.26794919243112270) <= 1e-12);
    CHECK(s.phi == 0.0);
}

TEST_CASE("solve_squeeze: kappa = 0 needs no squeezing") {
    const SqueezeSolution s = solve_squeeze(ModelParams{1.0, 3.0, 1.0, {0.0, 0.0}});
    CHECK(s.t_h == 0.0);
    CHECK(s.c == 1.0);
    CHECK(s.s == 0.0);
    CHECK(s.phi == 0.0);
}

TEST_CASE("solve_squeeze: boundary mu*nu = k^2") {
    const SqueezeSolution s = solve_squeeze(ModelParams{1.0, 2.0, 0.5, {1.0, 0.0}});
    CHECK(std::abs(s.t_h - 0.5) <= 1e-14);
}

TEST_CASE("solve_squeeze: cached hyperbolics are consistent") {
    Rng rng(301);
    for (int rep = 0; rep < 50; ++rep) {
        const ModelParams p = rng.params();
        const SqueezeSolution s = solve_squeeze(p);
        CHECK(s.t_h >= 0.0);
        CHECK(s.t_h < 1.0);
        CHECK(std::abs(s.c * s.c - s.s * s.s - 1.0) <= 1e-12);
        CHECK(std::abs(s.s - s.c * s.t_h) <= 1e-12);
        CHECK(std::abs(std::tanh(s.abs_eps) - s.t_h) <= 1e-12);
    }
}

TEST_CASE("solve_squeeze: root product is 1 and residual vanishes only at the root") {
    Rng rng(302);
    for (int rep = 0; rep < 50; ++rep) {
        const ModelParams p = rng.params();
        const double k = std::abs(p.kappa);
        if (k < 1e-9) continue;
        const SqueezeSolution s = solve_squeeze(p);
        const double sum = p.mu + p.nu;
        const double other = (sum + std::sqrt(sum * sum - 4.0 * k * k)) / (2.0 * k);
        CHECK(std::abs(s.t_h * other - 1.0) <= 1e-12);

        CHECK(std::abs(squeeze_residual(p, s.t_h)) <= 1e-10 * sum);
        for (double delta : {-0.01, 0.01}) {
            const double t_pert = s.t_h + delta;
            if (t_pert <= 0.0 || t_pert >= 0.999) continue;
            CHECK(std::abs(squeeze_residual(p, t_pert)) > 1e-10 * sum);
        }
    }
}

TEST_CASE("solve_squeeze: stable for k much smaller than mu+nu") {
    const ModelParams p{1.0, 4.0, 1.0, {1e-9, 0.0}};
    const SqueezeSolution s = solve_squeeze(p);
    // smaller root ~ k/(mu+nu)
    CHECK(s.t_h == doctest::Approx(2e-10).epsilon(1e-6));
}

TEST_CASE("transformed_coeffs: mu=3, nu=1, k=1") {
    const ModelParams p{1.0, 3.0, 1.0, {1.0, 0.0}};
    const SqueezeSolution s = solve_squeeze(p);
    const TransformedCoeffs tc = transformed_coeffs(p, s);
    // substitute t_h = 2 - sqrt(3): mu' = 1 + sqrt(3), nu' = sqrt(3) - 1
    CHECK(std::abs(tc.mu_p - 2.7320508075688772) <= 1e-12);
    CHECK(std::abs(tc.nu_p - 0.73205080756887729) <= 1e-12);
}

TEST_CASE("transformed_coeffs: identity transformation at kappa = 0") {
    const ModelParams p{1.0, 3.0, 1.0, {0.0, 0.0}};
    const TransformedCoeffs tc = transformed_coeffs(p, solve_squeeze(p));
    CHECK(tc.mu_p == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(tc.nu_p == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("transformed_coeffs: boundary mu*nu = k^2 removes the second term") {
    const ModelParams p{1.0, 2.0, 0.5, {1.0, 0.0}};
    const TransformedCoeffs tc = transformed_coeffs(p, solve_squeeze(p));
    CHECK(std::abs(tc.nu_p) <= 1e-10);
    CHECK(std::abs(tc.mu_p - 1.5) <= 1e-10);
}

TEST_CASE("transformed_coeffs: inconsistent solution is rejected") {
    const ModelParams p{1.0, 3.0, 1.0, {1.0, 0.0}};
    SqueezeSolution wrong = solve_squeeze(p);
    const double t = wrong.t_h + 0.05;
    wrong.t_h = t;
    wrong.c = 1.0 / std::sqrt(1.0 - t * t);
    wrong.s = t * wrong.c;
    CHECK_THROWS_AS((void)transformed_coeffs(p, wrong), numeric_error);
}

TEST_CASE("coefficient identities over random valid parameters") {
    Rng rng(303);
    for (int rep = 0; rep < 100; ++rep) {
        const ModelParams p = rng.params();
        const SqueezeSolution s = solve_squeeze(p);
        const TransformedCoeffs tc = transformed_coeffs(p, s);
        CHECK(std::abs((tc.mu_p - tc.nu_p) - (p.mu - p.nu)) <= 1e-10 * (p.mu + p.nu));
        CHECK(tc.nu_p >= -1e-12 * (p.mu + p.nu));
        CHECK(tc.mu_p >= tc.nu_p);

        // sqrt(a^2 - bc) for the dissipative triple equals (mu - nu)/2
        const double a = -0.5 * (tc.mu_p + tc.nu_p);
        const double w2 = a * a - tc.nu_p * tc.mu_p;
        CHECK(std::abs(std::sqrt(w2) - 0.5 * (p.mu - p.nu)) <= 1e-10 * (p.mu + p.nu));
    }
}

TEST_CASE("nu_p tends to zero as mu*nu approaches k^2") {
    Rng rng(304);
    for (int rep = 0; rep < 20; ++rep) {
        ModelParams p = rng.params();
        if (p.nu <= 1e-6) continue;
        p.kappa = std::polar(std::sqrt(p.mu * p.nu) * (1.0 - 1e-10), rng.uniform(-3.0, 3.0));
        const TransformedCoeffs tc = transformed_coeffs(p, solve_squeeze(p));
        CHECK(std::abs(tc.nu_p) <= 1e-6 * (p.mu + p.nu));
    }
}

TEST_CASE("raw coefficients C and D vanish exactly at the solution") {
    Rng rng(305);
    for (int rep = 0; rep < 30; ++rep) {
        const ModelParams p = rng.params();
        const SqueezeSolution s = solve_squeeze(p);
        const RawCoeffs raw = raw_transformed_coeffs(p, s);
        CHECK(std::abs(raw.c) <= 1e-10 * (p.mu + p.nu));
        CHECK(std::abs(raw.d) <= 1e-10 * (p.mu + p.nu));
        // A and B reduce to the transformed rates
        const TransformedCoeffs tc = transformed_coeffs(p, s);
        CHECK(std::abs(raw.a - complexd{tc.mu_p, 0.0}) <= 1e-10 * (p.mu + p.nu));
        CHECK(std::abs(raw.b - complexd{tc.nu_p, 0.0}) <= 1e-10 * (p.mu + p.nu));
    }
}

TEST_CASE("discriminant identity over random draws") {
    Rng rng(306);
    for (int rep = 0; rep < 200; ++rep) {
        const ModelParams p = rng.params();
        const double k = std::abs(p.kappa);
        const double lhs = (p.mu + p.nu) * (p.mu + p.nu) - 4.0 * k * k;
        const double rhs = (p.mu - p.nu) * (p.mu - p.nu) + 4.0 * (p.mu * p.nu - k * k);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        CHECK(lhs >= -1e-12 * std::max(1.0, (p.mu + p.nu) * (p.mu + p.nu)));
    }
}
