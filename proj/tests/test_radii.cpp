#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <random>

#include "srho/criteria.hpp"
#include "srho/radii.hpp"

using namespace srho;

namespace {

// independent bisection of the disc-containment condition
double disc_bisect(const std::function<double(double)>& center,
                   const std::function<double(double)>& radius, int n) {
    const Constants k;
    const auto fits = [&](double r) {
        const double rho = std::pow(r, n);
        const double c = center(rho), rd = radius(rho);
        if (!(c > k.c0) || !(c < k.c1)) return false;
        return rd <= std::min(c - k.c0, k.c1 - c);
    };
    double lo = 0.0, hi = 1.0 - 1e-12;
    if (fits(hi)) return 1.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (fits(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

TEST_CASE("starlike order radius") {
    const Constants k;
    CHECK(starlike_order_radius(k.c0).radius == Catch::Approx(1.0).margin(1e-12));
    const RadiusReport r = starlike_order_radius(std::cos(0.5));
    CHECK(r.radius == Catch::Approx(0.25).margin(1e-12));
    CHECK(r.residual <= 1e-10);
    CHECK(starlike_order_radius(1.0 - 1e-12).radius <= 1e-10);
    CHECK_THROWS_AS(starlike_order_radius(0.4), ZetaOutOfRange);
    CHECK_THROWS_AS(starlike_order_radius(1.0), ZetaOutOfRange);
}

TEST_CASE("M(beta) radius") {
    const Constants k;
    CHECK(mbeta_radius(k.c1).radius == 1.0);
    CHECK(mbeta_radius(2.0).radius == 1.0);
    const RadiusReport r = mbeta_radius(std::cosh(0.8));
    CHECK(r.radius == Catch::Approx(0.64).margin(1e-12));
    CHECK(r.residual <= 1e-10);
    CHECK_THROWS_AS(mbeta_radius(1.0), BetaOutOfRange);
}

TEST_CASE("convexity radius") {
    const RadiusReport r0 = convexity_radius(0.0);
    CHECK(r0.radius > 0.5);
    CHECK(r0.radius < 0.7);
    CHECK(r0.residual <= 1e-10);

    // the defining expression at r = 0 equals 2
    CHECK(2.0 * (1.0 - 0.0) * std::cos(0.0) - 0.0 * std::tan(0.0) == 2.0);

    double prev = r0.radius;
    for (double alpha : {0.2, 0.5, 0.8, 1.0 - 1e-9}) {
        const double r = convexity_radius(alpha).radius;
        CHECK(r < prev);
        prev = r;
    }
    CHECK_THROWS_AS(convexity_radius(1.0), AlphaOutOfRange);
    CHECK_THROWS_AS(convexity_radius(-0.1), AlphaOutOfRange);
}

TEST_CASE("Janowski subordination bound") {
    CHECK(janowski_subordinate_ok(0.45, 0.0));
    CHECK_FALSE(janowski_subordinate_ok(0.47, 0.0));
    CHECK(janowski_subordinate_ok(-0.85, -0.9));
    CHECK_FALSE(janowski_subordinate_ok(-0.8, -0.9));
    CHECK_THROWS_AS(janowski_subordinate_ok(0.3, 0.5), ParamOrder);

    // the two-case closed form of the parameter bound, transcribed
    const Constants k;
    for (int i = 0; i < 21; ++i) {
        const double B = -0.95 + 1.9 * i / 20.0;
        for (int j = 0; j < 21; ++j) {
            const double A = -0.95 + 1.9 * j / 20.0;
            if (!(B < A) || A > 1.0) continue;
            const double bound = (2.0 * (1.0 - A * B) <= (k.c0 + k.c1) * (1.0 - B * B))
                                     ? 1.0 - (1.0 - B) * k.c0
                                     : (1.0 + B) * k.c1 - 1.0;
            if (std::abs(A - bound) < 1e-6) continue;
            CHECK(janowski_subordinate_ok(A, B) == (A <= bound));
        }
    }
}

TEST_CASE("Janowski radius cases") {
    const Constants k;
    const RadiusReport r1 = janowski_radius({1.0, 0.0, 1});
    CHECK(r1.radius == Catch::Approx(1.0 - k.c0).margin(1e-12));
    CHECK(r1.radius == Catch::Approx(0.459698).margin(1e-6));

    CHECK(janowski_radius({0.5, 0.25, 1}).radius == 1.0);

    const RadiusReport r2 = janowski_radius({0.5, -0.5, 1});
    const double oracle = disc_bisect(
        [](double rho) { return (1.0 + 0.25 * rho * rho) / (1.0 - 0.25 * rho * rho); },
        [](double rho) { return rho / (1.0 - 0.25 * rho * rho); }, 1);
    CHECK(r2.radius == Catch::Approx(oracle).margin(1e-8));
    CHECK(r2.case_label.substr(0, 2) == "R2");

    CHECK_THROWS_AS(janowski_radius({-0.1, -0.5, 1}), UnsupportedSigns);
    CHECK_THROWS_AS(janowski_radius({0.5, 0.7, 1}), ParamOrder);

    // selection by the midpoint-crossing radius equals min(R0, R2)
    for (double A : {0.3, 0.6, 1.0}) {
        for (double B : {-0.9, -0.5, -0.2}) {
            const RadiusReport rep = janowski_radius({A, B, 1});
            double R0 = 0.0, R2 = 0.0;
            for (const auto& [key, val] : rep.params) {
                if (key == "R0") R0 = val;
                if (key == "R2") R2 = val;
            }
            CHECK(rep.radius == Catch::Approx(std::min(R0, R2)).margin(1e-12));
        }
    }
}

TEST_CASE("M_n(beta) radius") {
    const Constants k;
    CHECK(mn_beta_radius(1.0 + 1e-12, 1).radius == Catch::Approx(1.0).margin(1e-9));
    const RadiusReport r = mn_beta_radius(k.c1, 1);
    CHECK(r.radius == Catch::Approx((1.0 - k.c0) / (2.0 * k.c1 - 1.0 - k.c0)).margin(1e-15));
    CHECK(r.radius == Catch::Approx(0.297375).margin(1e-5));
    CHECK(mn_beta_radius(k.c1, 2).radius == Catch::Approx(std::sqrt(r.radius)).margin(1e-12));
    CHECK_THROWS_AS(mn_beta_radius(0.9, 1), BetaOutOfRange);
}

TEST_CASE("ratio-class radii") {
    const Constants k;
    const RadiusReport h1 = ratio_class_radius(RatioClass::F1_Half, 1);
    CHECK(h1.radius == Catch::Approx((1.0 - k.c0) / (3.0 - k.c0)).margin(1e-15));
    CHECK(h1.radius == Catch::Approx(0.186892).margin(2e-6));

    const RadiusReport z1 = ratio_class_radius(RatioClass::F1_0, 1);
    CHECK(z1.radius == Catch::Approx(0.143259).margin(1e-4));

    const RadiusReport f2_1 = ratio_class_radius(RatioClass::F2, 1);
    // for n = 1 the covered disc reaches the right side first: the certified
    // radius is the right-tangency root (c1-1)/(c1+1), not the left one
    CHECK(f2_1.radius == Catch::Approx((k.c1 - 1.0) / (k.c1 + 1.0)).margin(1e-12));
    CHECK(f2_1.case_label.find("cosh") != std::string::npos);

    const RadiusReport f2_2 = ratio_class_radius(RatioClass::F2, 2);
    CHECK(f2_2.case_label.find("cos 1") != std::string::npos);

    for (int n : {1, 2, 3}) {
        const double dn = n;
        CHECK(ratio_class_radius(RatioClass::F1_0, n).radius ==
              Catch::Approx(disc_bisect([](double) { return 1.0; },
                                        [dn](double rho) {
                                            return dn * rho * (3.0 + rho) / (1.0 - rho * rho);
                                        },
                                        n))
                  .margin(1e-8));
        CHECK(ratio_class_radius(RatioClass::F1_Half, n).radius ==
              Catch::Approx(disc_bisect([](double) { return 1.0; },
                                        [dn](double rho) { return 2.0 * dn * rho / (1.0 - rho); },
                                        n))
                  .margin(1e-8));
        CHECK(ratio_class_radius(RatioClass::F2, n).radius ==
              Catch::Approx(disc_bisect(
                                [](double rho) { return 1.0 / (1.0 - rho * rho); },
                                [dn](double rho) {
                                    return (dn * rho * rho + (1.0 + dn) * rho) / (1.0 - rho * rho);
                                },
                                n))
                  .margin(1e-8));
    }
}

TEST_CASE("F3 radius") {
    const Constants k;
    const RadiusReport mid = f3_radius(-k.c0, 2);
    const double rho_mid = (1.0 - k.c0) / (1.0 + 8.0 - k.c0);
    CHECK(mid.radius == Catch::Approx(std::sqrt(rho_mid)).margin(1e-6));

    const RadiusReport r = f3_radius(1.0, 1);
    double R0 = 0.0, R1 = 0.0;
    for (const auto& [key, val] : r.params) {
        if (key == "R0") R0 = val;
        if (key == "R1") R1 = val;
    }
    // frozen from the disc-containment bisection oracle (tangency of
    // (1+A rho^2)/(1-rho^2) -+ (4n+1+A) rho/(1-rho^2) with cos 1 / cosh 1)
    CHECK(R0 == Catch::Approx(0.0781856).margin(1e-6));
    CHECK(R1 == Catch::Approx(0.0872843).margin(1e-6));
    CHECK(r.radius >= std::min(R0, R1) - 1e-9);
    CHECK(r.radius <= std::max(R0, R1) + 1e-9);

    // the claimed ordering R0 < R1 over a parameter grid
    for (double A : {-1.0, -0.7, -k.c0, -0.3, 0.0, 0.5, 1.0}) {
        for (int n : {1, 2, 3}) {
            const RadiusReport rep = f3_radius(A, n);
            double r0 = 0.0, r1 = 0.0;
            for (const auto& [key, val] : rep.params) {
                if (key == "R0") r0 = val;
                if (key == "R1") r1 = val;
            }
            CHECK(r0 < r1);
            CHECK(rep.radius == Catch::Approx(r0).margin(1e-6));
        }
    }
    CHECK_THROWS_AS(f3_radius(1.2, 1), AOutOfRange);
}

TEST_CASE("family thresholds") {
    const Constants k;
    CHECK(family_threshold(ThresholdFamily::MonomialPerturb, 2) ==
          Catch::Approx((1.0 - k.c0) / (2.0 - k.c0)).margin(1e-15));
    CHECK(family_threshold(ThresholdFamily::MonomialPerturb, 2) ==
          Catch::Approx(0.314926).margin(1e-6));
    CHECK(family_threshold(ThresholdFamily::KoebeType) ==
          Catch::Approx((k.c1 - 1.0) / (k.c1 + 1.0)).margin(1e-15));
    CHECK(family_threshold(ThresholdFamily::KoebeType) == Catch::Approx(0.2135523).margin(1e-6));
    CHECK(family_threshold(ThresholdFamily::HalfKoebe) ==
          Catch::Approx((k.c1 - 1.0) / k.c1).margin(1e-15));
    CHECK(family_threshold(ThresholdFamily::ExpLine) == Catch::Approx(1.0 - k.c0).margin(1e-15));
    CHECK_THROWS_AS(family_threshold(ThresholdFamily::MonomialPerturb, 1), BadN);
}

TEST_CASE("radii are monotone in their parameters") {
    const Constants k;
    double prev = 2.0;
    for (int i = 0; i < 20; ++i) {
        const double zeta = k.c0 + (0.999 - k.c0) * i / 19.0;
        const double r = starlike_order_radius(zeta).radius;
        CHECK(r < prev + 1e-15);
        prev = r;
    }
    prev = 2.0;
    for (int i = 0; i < 20; ++i) {
        const double beta = 1.01 + 3.0 * i / 19.0;
        const double r = mn_beta_radius(beta, 1).radius;
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("randomized radius formulas match the disc oracle") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> uu(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double A = 0.05 + 0.95 * uu(rng);
        const bool neg = trial % 2 == 0;
        const double B = neg ? -0.98 * uu(rng) - 0.01 : uu(rng) * (A - 0.01);
        const int n = 1 + static_cast<int>(uu(rng) * 3.0);
        const RadiusReport rep = janowski_radius({A, B, n});
        const double oracle = disc_bisect(
            [&](double rho) { return (1.0 - A * B * rho * rho) / (1.0 - B * B * rho * rho); },
            [&](double rho) { return (A - B) * rho / (1.0 - B * B * rho * rho); }, n);
        CHECK(rep.radius == Catch::Approx(oracle).margin(1e-7));
    }
    for (int trial = 0; trial < 50; ++trial) {
        const double beta = 1.02 + 3.0 * uu(rng);
        const int n = 1 + static_cast<int>(uu(rng) * 3.0);
        const RadiusReport rep = mn_beta_radius(beta, n);
        const double oracle = disc_bisect(
            [&](double rho) {
                return (1.0 + (1.0 - 2.0 * beta) * rho * rho) / (1.0 - rho * rho);
            },
            [&](double rho) { return 2.0 * (beta - 1.0) * rho / (1.0 - rho * rho); }, n);
        CHECK(rep.radius == Catch::Approx(oracle).margin(1e-7));
    }
}

TEST_CASE("threshold formula meets the coefficient bound") {
    // worst-t factor of the sufficiency sum for f = z + a2 z^2 equals the
    // monomial threshold
    const Constants k;
    double worst = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double t = -std::acos(-1.0) + 2.0 * std::acos(-1.0) * i / 20000.0;
        const BoundaryPoint p = boundary_point(Sigma(1.0), t);
        const Complex rho(p.x, p.y);
        worst = std::max(worst, std::abs((Complex(2.0) - rho) / (rho - Complex(1.0))));
    }
    const double threshold = family_threshold(ThresholdFamily::MonomialPerturb, 2);
    CHECK(std::abs(1.0 / worst - threshold) <= 1e-9);
}
