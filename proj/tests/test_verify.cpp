#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "srho/family.hpp"
#include "srho/radii.hpp"
#include "srho/verify.hpp"

using namespace srho;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("verify_subordination accepts the paper members and rejects escapees") {
    const Sigma one(1.0);
    SamplingPlan plan;
    plan.angles = 256;

    CHECK(verify_subordination(FamilySpec::phi_n(2), one, plan).pass);
    CHECK(verify_subordination(FamilySpec::phi_n(3), one, plan).pass);
    CHECK(verify_subordination(FamilySpec::fun1(), one, plan).pass);
    CHECK(verify_subordination(FamilySpec::fun2(), one, plan).pass);

    // z + z^3/4 is the truncated display of phi_3, not a member itself:
    // its z f'/f reaches (4-3)/(4-1) = 1/3 < cos 1 near z = +-i
    CHECK_FALSE(verify_subordination(FamilySpec::tilde_cubic(), one, plan).pass);

    // z/(1-z): z f'/f = 1/(1-z) is unbounded, escapes the bounded region
    CHECK_FALSE(verify_subordination(FamilySpec::half_koebe(1.0), one, plan).pass);
}

TEST_CASE("verify_subordination through a truncated series") {
    const Sigma one(1.0);
    SamplingPlan plan;
    plan.angles = 128;
    const VerificationReport rep = verify_subordination(build_phi_n(2), one, plan);
    CHECK(rep.pass);
    CHECK(rep.samples_checked == 5u * 128u);  // radii above 0.95 skipped
}

TEST_CASE("zero of f inside the sampled disc is inconclusive") {
    const Sigma one(1.0);
    SamplingPlan plan;
    plan.radii = {1.0 / 1.3};
    plan.angles = 128;  // includes the angle pi, hitting the zero exactly
    const VerificationReport rep = verify_subordination(FamilySpec::monomial(2, 1.3), one, plan);
    CHECK(rep.inconclusive);
    CHECK_FALSE(rep.pass);

    // a series checked only at radii beyond its accuracy domain is
    // inconclusive, not a vacuous pass
    SamplingPlan far;
    far.radii = {0.99};
    far.angles = 64;
    const VerificationReport none = verify_subordination(build_phi_n(2), one, far);
    CHECK(none.inconclusive);
    CHECK_FALSE(none.pass);
    CHECK(none.samples_checked == 0);
}

TEST_CASE("disc inclusion oracle matches the inscribed radius") {
    SamplingPlan plan;
    plan.angles = 1024;
    for (double sv : {0.5, 1.0, kPi / 2.0}) {
        const Sigma sigma(sv);
        const double lo = std::cos(sv), hi = std::cosh(sv);
        for (int i = 0; i < 20; ++i) {
            const double c = lo + (hi - lo) * (i + 0.5) / 20.0;
            const double rmax = inscribed_radius(sigma, c).radius;
            for (double scale : {0.3, 0.9, 0.999, 1.01, 1.3}) {
                const double r = scale * rmax;
                const bool expect = r <= rmax;
                const auto rep = verify_region_inclusion(
                    InnerRegion::disc(Complex(c, 0.0), r * (1.0 - 1e-6)), sigma, plan);
                CHECK(rep.pass == expect);
            }
        }
    }
}

TEST_CASE("winding-number oracle agrees with analytic membership") {
    for (double sv : {0.5, 1.0}) {
        const Sigma sigma(sv);
        const auto poly = boundary_polygon(sigma, 4096);
        double xmin = 1e300, xmax = -1e300, ymax = 0.0;
        for (const auto& [x, y] : poly) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymax = std::max(ymax, std::abs(y));
        }
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> ux(xmin - 0.05, xmax + 0.05);
        std::uniform_real_distribution<double> uy(-ymax - 0.05, ymax + 0.05);
        int compared = 0;
        for (int i = 0; i < 2000; ++i) {
            const double x = ux(rng), y = uy(rng);
            if (polygon_distance(x, y, poly) < 1e-4) continue;
            ++compared;
            CHECK(contains(sigma, Complex(x, y)) == (winding_number(x, y, poly) != 0));
        }
        CHECK(compared > 1500);
    }
}

TEST_CASE("Janowski image inclusion agrees with the parameter bound") {
    const Sigma one(1.0);
    const Constants k;
    SamplingPlan plan;
    plan.angles = 512;
    for (int i = 0; i < 21; ++i) {
        const double B = -0.9 + 1.7 * i / 20.0;
        for (int j = 0; j < 21; ++j) {
            const double A = -0.9 + 1.85 * j / 20.0;
            if (!(B < A) || A > 1.0) continue;
            const double bound = (2.0 * (1.0 - A * B) <= (k.c0 + k.c1) * (1.0 - B * B))
                                     ? 1.0 - (1.0 - B) * k.c0
                                     : (1.0 + B) * k.c1 - 1.0;
            if (std::abs(A - bound) < 1e-6) continue;
            const bool expect = janowski_subordinate_ok(A, B);
            CHECK(verify_region_inclusion(InnerRegion::janowski(A, B), one, plan).pass == expect);
        }
    }
}

TEST_CASE("sqrt-kappa, ellipse, hpl and limacon inclusions") {
    const Sigma one(1.0);
    const Constants k;
    SamplingPlan plan;
    plan.margin_in = 1e-6;

    const auto at_threshold =
        verify_region_inclusion(InnerRegion::sqrt_kappa(1.0 - k.c0 * k.c0), one, plan);
    CHECK(at_threshold.pass);
    CHECK(std::abs(at_threshold.worst_margin) <= 1e-6);
    CHECK_FALSE(verify_region_inclusion(InnerRegion::sqrt_kappa(0.9), one, plan).pass);

    CHECK(verify_region_inclusion(InnerRegion::ellipse(k.c1 / (k.c1 - 1.0)), one, plan).pass);
    CHECK_FALSE(verify_region_inclusion(InnerRegion::ellipse(1.5), one, plan).pass);

    CHECK(verify_region_inclusion(InnerRegion::disc(Complex(1.0), 0.05), one, plan).pass);

    // hpl at sigma = pi/3: the threshold is s = 1 (image boundary touches cos sigma)
    const Sigma third(kPi / 3.0);
    CHECK(verify_region_inclusion(InnerRegion::hpl(1.0), third, plan).pass);
    CHECK_FALSE(verify_region_inclusion(InnerRegion::hpl(0.9), third, plan).pass);

    // limacon at sigma = 1: threshold 1 - sqrt(c0) ~ 0.2649
    CHECK(verify_region_inclusion(InnerRegion::limacon(0.3), one, plan).pass);
    CHECK_FALSE(verify_region_inclusion(InnerRegion::limacon(0.2), one, plan).pass);

    CHECK_THROWS_AS(InnerRegion::sqrt_kappa(1.5), BadParams);
    CHECK_THROWS_AS(InnerRegion::limacon(0.9), BadParams);
}

TEST_CASE("sharpness probes") {
    const Constants k;
    SamplingPlan plan;
    plan.angles = 1024;

    const RadiusReport starlike = starlike_order_radius(std::cos(0.5));
    CHECK(sharpness_probe(starlike, plan).pass);
    const Complex q = family_qvalue(starlike.extremal, Complex(-starlike.radius, 0.0));
    CHECK(std::abs(q.real() - std::cos(0.5)) <= 1e-12);
    CHECK(std::abs(q.imag()) <= 1e-14);

    CHECK(sharpness_probe(mbeta_radius(1.2), plan).pass);
    CHECK(sharpness_probe(mbeta_radius(2.0), plan).pass);  // radius 1: containment only

    CHECK(sharpness_probe(janowski_radius({1.0, 0.0, 1}), plan).pass);
    CHECK(sharpness_probe(janowski_radius({0.5, -0.5, 1}), plan).pass);
    CHECK(sharpness_probe(mn_beta_radius(k.c1, 1), plan).pass);
    CHECK(sharpness_probe(ratio_class_radius(RatioClass::F1_0, 1), plan).pass);
    CHECK(sharpness_probe(ratio_class_radius(RatioClass::F1_Half, 1), plan).pass);
    CHECK(sharpness_probe(ratio_class_radius(RatioClass::F2, 2), plan).pass);
    CHECK(sharpness_probe(f3_radius(1.0, 1), plan).pass);

    // known non-sharp witness: for n = 1 the F2 disc is right-tangent while
    // the witness only attains the left extreme, so no escape is observed
    CHECK_FALSE(sharpness_probe(ratio_class_radius(RatioClass::F2, 1), plan).pass);

    // convexity carries no sharpness claim: containment-only probe
    CHECK(sharpness_probe(convexity_radius(0.0), plan).pass);
}

TEST_CASE("mn-beta escape happens on the positive real axis") {
    const Constants k;
    const RadiusReport rep = mn_beta_radius(k.c1, 1);
    const double r_out = rep.radius * 1.01;
    const Complex w = family_qvalue(rep.extremal, Complex(r_out, 0.0));
    CHECK(w.imag() == 0.0);
    CHECK(w.real() < k.c0);  // escaped through the left edge
}

TEST_CASE("subordination fails for the example families beyond threshold") {
    const Sigma one(1.0);
    SamplingPlan plan;
    plan.angles = 512;
    const double thr = family_threshold(ThresholdFamily::ExpLine);
    CHECK(verify_subordination(FamilySpec::exp_line(thr * 0.99), one, plan).pass);
    CHECK_FALSE(verify_subordination(FamilySpec::exp_line(thr * 1.05), one, plan).pass);
}
