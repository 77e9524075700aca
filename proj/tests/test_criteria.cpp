#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "srho/criteria.hpp"
#include "srho/family.hpp"
#include "srho/radii.hpp"

using namespace srho;

namespace {

CoeffList single(double a2) {
    CoeffList c;
    c.tail = {Complex(a2)};
    return c;
}

}  // namespace

TEST_CASE("convolution non-vanishing on the monomial family") {
    CHECK(convolution_nonvanishing(CoeffList{}, 128, 64).pass);  // f = z, E = 1

    CHECK(convolution_nonvanishing(single(0.3), 128, 64).pass);

    const VerificationReport bad = convolution_nonvanishing(single(0.9), 128, 64);
    CHECK_FALSE(bad.pass);
    CHECK(bad.worst_margin <= 1e-9);
    // the zero sits on the negative real axis at -(1-c0)/((2-c0) 0.9)
    const Constants k;
    const double z0 = (1.0 - k.c0) / ((2.0 - k.c0) * 0.9);
    CHECK(std::abs(bad.witness - Complex(-z0)) <= 1e-6);

    CHECK_THROWS_AS(convolution_nonvanishing(single(0.5), 32, 64), BadParams);
}

TEST_CASE("coefficient sufficiency bound") {
    const CoeffSufficiency zero = coeff_sufficient(CoeffList{}, 128);
    CHECK(zero.pass);
    CHECK(zero.worst_sum == 0.0);

    CHECK(coeff_sufficient(single(0.3), 720).pass);
    CHECK_FALSE(coeff_sufficient(single(0.32), 720).pass);

    // worst t is the negative-real boundary end (rho_t = cos 1)
    const Constants k;
    const CoeffSufficiency s = coeff_sufficient(single(0.3), 720);
    CHECK(s.worst_sum == Catch::Approx(0.3 * (2.0 - k.c0) / (1.0 - k.c0)).margin(1e-4));
    CHECK(std::abs(std::abs(s.worst_t) - std::acos(-1.0)) <= 0.02);
}

TEST_CASE("coefficient sufficiency is monotone under scaling") {
    CoeffList c;
    c.tail = {Complex(0.05), Complex(0.02, 0.01), Complex(-0.03)};
    bool failed = false;
    for (double scale = 1.0; scale <= 40.0; scale *= 1.5) {
        CoeffList scaled;
        for (const auto& a : c.tail) scaled.tail.push_back(scale * a);
        const bool pass = coeff_sufficient(scaled, 128).pass;
        if (failed) CHECK_FALSE(pass);
        if (!pass) failed = true;
    }
    CHECK(failed);  // large scalings must eventually fail
}

TEST_CASE("L2 coefficient inequality") {
    const Constants k;
    CHECK(coeff_l2_check(CoeffList{}).pass);

    // f = z + z^3/4
    CoeffList cubic;
    cubic.tail = {Complex(0.0), Complex(0.25)};
    const L2Check l = coeff_l2_check(cubic);
    CHECK(l.pass);
    CHECK(l.lhs == Catch::Approx((9.0 - k.c1 * k.c1) / 16.0).margin(1e-12));
    CHECK(l.lhs == Catch::Approx(0.413681).margin(1e-5));

    // f = z + 0.9 z^5 violates the inequality
    CoeffList quintic;
    quintic.tail = {Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.9)};
    const L2Check q = coeff_l2_check(quintic);
    CHECK_FALSE(q.pass);
    CHECK(q.lhs == Catch::Approx((25.0 - k.c1 * k.c1) * 0.81).margin(1e-10));
    CHECK(q.rhs == Catch::Approx(k.c1 * k.c1 - 1.0).margin(1e-15));

    for (int n = 2; n <= 5; ++n)
        CHECK(coeff_l2_check(CoeffList::from_series(build_phi_n(n, 12))).pass);
}

TEST_CASE("Fekete-Szego bound") {
    CHECK(fekete_szego_bound(Complex(7.0 / 12.0)) == 0.25);
    CHECK(fekete_szego_bound(Complex(0.0)) == 0.25);
    CHECK(fekete_szego_bound(Complex(2.0)) == Catch::Approx(17.0 / 48.0).margin(1e-16));

    // equality for tilde f = z + z^3/4 at mu = 0
    const TaylorSeries tilde = family_series(FamilySpec::tilde_cubic(), 6);
    CHECK(std::abs(tilde.at(3) - Complex(0.0) * tilde.at(2) * tilde.at(2)) ==
          Catch::Approx(0.25).margin(1e-16));

    // constant on the unit disc around 7/12
    for (int i = 0; i < 10; ++i) {
        const double th = 2.0 * std::acos(-1.0) * i / 10.0;
        const Complex mu = Complex(7.0 / 12.0) + std::polar(1.0, th);
        CHECK(fekete_szego_bound(mu) == Catch::Approx(0.25).margin(1e-15));
    }
}

TEST_CASE("convolution check matches the sufficiency threshold scaling") {
    // phi_2 truncated: a genuine member, both checks must pass
    const CoeffList phi = CoeffList::from_series(build_phi_n(2, 16));
    CHECK(convolution_nonvanishing(phi, 128, 64).pass);
    CHECK(coeff_l2_check(phi).pass);
}

TEST_CASE("convolution and subordination agree 10% below every threshold") {
    const Sigma one(1.0);
    SamplingPlan plan;
    plan.angles = 256;
    const std::vector<FamilySpec> members = {
        FamilySpec::monomial(2, 0.9 * family_threshold(ThresholdFamily::MonomialPerturb, 2)),
        FamilySpec::koebe_type(0.9 * family_threshold(ThresholdFamily::KoebeType)),
        FamilySpec::half_koebe(0.9 * family_threshold(ThresholdFamily::HalfKoebe)),
        FamilySpec::exp_line(0.9 * family_threshold(ThresholdFamily::ExpLine)),
    };
    for (const auto& spec : members) {
        CHECK(verify_subordination(spec, one, plan).pass);
        CHECK(convolution_nonvanishing(CoeffList::from_series(family_series(spec, 32)), 128, 64)
                  .pass);
    }
}
