#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "srho/criteria.hpp"
#include "srho/family.hpp"
#include "srho/radii.hpp"
#include "srho/region.hpp"
#include "srho/series.hpp"
#include "srho/verify.hpp"

namespace srho {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

namespace suite_detail {

inline double pi() { return std::acos(-1.0); }

// Independent disc-containment bisection: largest r in (0,1] such that the
// disc with the given center/radius profile (as functions of rho = r^n)
// stays inside the sigma = 1 region.
inline double certified_disc_radius(const std::function<double(double)>& center,
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

struct Check {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << (log.str().empty() ? "" : "; ") << what;
        }
    }
};

}  // namespace suite_detail

/// 1. Paper-constant reproduction (runtime < 5 s).
inline CriterionResult criterion1() {
    using namespace suite_detail;
    const auto start = std::chrono::steady_clock::now();
    Check c;

    const ArgBound ab = max_argument(Sigma(1.0));
    c.require(std::abs(ab.m - 0.506053) <= 1e-4, "m != 0.506053 +- 1e-4");
    c.require(std::abs(ab.t_star - 1.91672) <= 1e-3, "t2 != 1.91672 +- 1e-3");

    const ParabolicBound pb = st_p_gamma();
    c.require(std::abs(pb.gamma0 - 0.0654238) <= 1e-5, "gamma0 != 0.0654238 +- 1e-5");
    c.require(std::abs(pb.tau_tilde - 0.832934) <= 1e-3, "tau != 0.832934 +- 1e-3");

    const GrowthBounds g = growth_distortion(1.0);
    c.require(std::abs(g.lower - 0.619) <= 1e-3, "-phi(-1) != 0.619 +- 1e-3");

    const double beta = ab.m / (pi() / 2.0);
    c.require(std::abs(beta - 0.322163) <= 1e-4, "beta != 0.322163 +- 1e-4");

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(secs < 5.0, "runtime >= 5 s");

    std::ostringstream d;
    d << "m=" << ab.m << " t2=" << ab.t_star << " gamma0=" << pb.gamma0
      << " tau=" << pb.tau_tilde << " lower=" << g.lower << " beta=" << beta << " (" << secs
      << " s)";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {1, "paper-constant reproduction", c.ok, d.str()};
}

/// 2. Inscribed-disc property over sigma in {0.5, 1, pi/2}, 50 centers each.
inline CriterionResult criterion2() {
    using namespace suite_detail;
    Check c;
    int centers = 0;
    for (double sv : {0.5, 1.0, pi() / 2.0}) {
        const Sigma sigma(sv);
        const double lo = std::cos(sv) + 1e-3, hi = std::cosh(sv) - 1e-3;
        for (int i = 0; i < 50; ++i) {
            const double cc = lo + (hi - lo) * i / 49.0;
            const double r = inscribed_radius(sigma, cc).radius;
            ++centers;
            bool inside_ok = true;
            bool outside_hit = false;
            for (int a = 0; a < 720; ++a) {
                const double th = 2.0 * pi() * a / 720.0;
                const Complex in = Complex(cc, 0.0) + std::polar(r * (1.0 - 1e-6), th);
                const Complex out = Complex(cc, 0.0) + std::polar(r * (1.0 + 1e-3), th);
                if (!contains(sigma, in)) inside_ok = false;
                if (!contains(sigma, out)) outside_hit = true;
            }
            if (!inside_ok || !outside_hit) {
                std::ostringstream w;
                w << "sigma=" << sv << " c=" << cc << (inside_ok ? " no outside escape" : " inside probe failed");
                c.require(false, w.str());
            }
        }
    }
    std::ostringstream d;
    d << centers << " centers, zero exceptions required";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {2, "inscribed-disc probes", c.ok, d.str()};
}

/// 3. Analytic membership vs winding-number polygon oracle.
inline CriterionResult criterion3() {
    using namespace suite_detail;
    Check c;
    int compared = 0, skipped = 0;
    unsigned seed = 20260810u;
    for (double sv : {0.5, 1.0}) {
        const Sigma sigma(sv);
        const auto poly = boundary_polygon(sigma, 4096);
        double xmin = 1e300, xmax = -1e300, ymax = 0.0;
        for (const auto& [x, y] : poly) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymax = std::max(ymax, std::abs(y));
        }
        std::mt19937 rng(seed++);
        std::uniform_real_distribution<double> ux(xmin - 0.05, xmax + 0.05);
        std::uniform_real_distribution<double> uy(-ymax - 0.05, ymax + 0.05);
        for (int i = 0; i < 10000; ++i) {
            const double x = ux(rng), y = uy(rng);
            if (polygon_distance(x, y, poly) < 1e-4) {
                ++skipped;
                continue;
            }
            ++compared;
            const bool analytic = contains(sigma, Complex(x, y));
            const bool winding = winding_number(x, y, poly) != 0;
            if (analytic != winding) {
                std::ostringstream w;
                w << "disagreement at sigma=" << sv << " u=(" << x << "," << y << ")";
                c.require(false, w.str());
            }
        }
    }
    std::ostringstream d;
    d << compared << " points compared, " << skipped << " in the 1e-4 boundary band";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {3, "membership oracle equivalence", c.ok, d.str()};
}

/// 4. Radius residuals and independent disc-containment bisections.
inline CriterionResult criterion4() {
    using namespace suite_detail;
    const Constants k;
    Check c;

    for (double zeta : {std::cos(0.5), 0.9, 0.99})
        c.require(starlike_order_radius(zeta).residual <= 1e-10, "starlike residual");
    c.require(mbeta_radius(1.2).residual <= 1e-10, "mbeta residual");
    for (double alpha : {0.0, 0.3, 0.7})
        c.require(convexity_radius(alpha).residual <= 1e-10, "convexity residual");

    // Janowski n = 1, 25 (A,B) pairs
    for (double A : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        for (double B : {-0.9, -0.45, 0.0, 0.1, 0.15}) {
            const RadiusReport rep = janowski_radius({A, B, 1});
            const double oracle = certified_disc_radius(
                [&](double rho) { return (1.0 - A * B * rho * rho) / (1.0 - B * B * rho * rho); },
                [&](double rho) { return (A - B) * rho / (1.0 - B * B * rho * rho); }, 1);
            if (std::abs(rep.radius - oracle) > 1e-6) {
                std::ostringstream w;
                w << "janowski(" << A << "," << B << ") formula " << rep.radius << " vs oracle "
                  << oracle;
                c.require(false, w.str());
            }
        }
    }

    for (double beta : {1.1, k.c1, 2.0}) {
        const RadiusReport rep = mn_beta_radius(beta, 1);
        const double oracle = certified_disc_radius(
            [&](double rho) {
                return (1.0 + (1.0 - 2.0 * beta) * rho * rho) / (1.0 - rho * rho);
            },
            [&](double rho) { return 2.0 * (beta - 1.0) * rho / (1.0 - rho * rho); }, 1);
        c.require(std::abs(rep.radius - oracle) <= 1e-6, "mn-beta vs oracle");
    }

    for (int n : {1, 2, 3}) {
        const double dn = n;
        const RadiusReport f10 = ratio_class_radius(RatioClass::F1_0, n);
        c.require(std::abs(f10.radius -
                           certified_disc_radius(
                               [](double) { return 1.0; },
                               [dn](double rho) { return dn * rho * (3.0 + rho) / (1.0 - rho * rho); },
                               n)) <= 1e-6,
                  "f1(0) vs oracle");
        const RadiusReport f1h = ratio_class_radius(RatioClass::F1_Half, n);
        c.require(std::abs(f1h.radius - certified_disc_radius(
                                            [](double) { return 1.0; },
                                            [dn](double rho) { return 2.0 * dn * rho / (1.0 - rho); },
                                            n)) <= 1e-6,
                  "f1(1/2) vs oracle");
        const RadiusReport f2 = ratio_class_radius(RatioClass::F2, n);
        c.require(std::abs(f2.radius - certified_disc_radius(
                                           [](double rho) { return 1.0 / (1.0 - rho * rho); },
                                           [dn](double rho) {
                                               return (dn * rho * rho + (1.0 + dn) * rho) /
                                                      (1.0 - rho * rho);
                                           },
                                           n)) <= 1e-6,
                  "f2 vs oracle");
    }

    std::ostringstream d;
    d << "root residuals <= 1e-10; closed forms match disc bisections to 1e-6";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {4, "radius residuals and oracles", c.ok, d.str()};
}

/// 5. Sharpness of the named extremal functions.
inline CriterionResult criterion5() {
    using namespace suite_detail;
    const Constants k;
    Check c;
    const SamplingPlan plan{};

    const auto probe = [&](const RadiusReport& rep, const std::string& label) {
        const VerificationReport v = sharpness_probe(rep, plan);
        c.require(v.pass, label + " sharpness probe failed");
    };

    const RadiusReport rs = starlike_order_radius(std::cos(0.5));
    probe(rs, "starlike-order");
    const Complex q = family_qvalue(rs.extremal, Complex(-rs.radius, 0.0));
    c.require(std::abs(q.real() - std::cos(0.5)) <= 1e-8 && std::abs(q.imag()) <= 1e-12,
              "starlike-order boundary value");

    probe(mbeta_radius(1.2), "mbeta(1.2)");
    probe(mbeta_radius(2.0), "mbeta(2) radius-1 containment");
    probe(janowski_radius({1.0, 0.0, 1}), "janowski(1,0)");
    probe(janowski_radius({0.5, -0.5, 1}), "janowski(0.5,-0.5)");
    probe(mn_beta_radius(k.c1, 1), "mn-beta(cosh 1)");
    probe(ratio_class_radius(RatioClass::F1_0, 1), "f1(0)");
    probe(ratio_class_radius(RatioClass::F1_Half, 1), "f1(1/2)");
    probe(ratio_class_radius(RatioClass::F2, 2), "f2 n=2");
    probe(ratio_class_radius(RatioClass::F2, 3), "f2 n=3");
    probe(f3_radius(1.0, 1), "f3(A=1)");
    probe(f3_radius(-0.8, 1), "f3(A=-0.8)");

    std::ostringstream d;
    d << "containment at r(1-1e-4), escape at min(0.999, r(1+1e-2)); f2 probed at n=2,3 "
         "(its n=1 witness is tangent on the other side)";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {5, "extremal sharpness", c.ok, d.str()};
}

/// 6. Coefficient suite.
inline CriterionResult criterion6() {
    using namespace suite_detail;
    Check c;

    const TaylorSeries phi2 = build_phi_n(2, kDefaultOrder);
    c.require(std::abs(std::abs(phi2.at(2)) - 0.5) <= 1e-12, "|a2| != 1/2");
    c.require(std::abs(phi2.at(3)) <= 0.25, "|a3| > 1/4");
    c.require(std::abs(phi2.at(4)) <= 1.0 / 6.0 + 1e-12, "|a4| > 1/6");

    const TaylorSeries tilde = family_series(FamilySpec::tilde_cubic(), 8);
    const Complex fs = tilde.at(3) - Complex(0.0) * tilde.at(2) * tilde.at(2);
    c.require(std::abs(std::abs(fs) - 0.25) <= 1e-15, "Fekete-Szego equality at mu = 0");
    c.require(std::abs(fekete_szego_bound(Complex(0.0)) - 0.25) <= 1e-15, "FS bound at mu = 0");

    for (int n = 2; n <= 5; ++n) {
        TaylorSeries phi = build_phi_n(n, 12);
        const L2Check l2 = coeff_l2_check(CoeffList::from_series(phi));
        c.require(l2.pass, "L2 inequality for phi_n");
    }

    std::ostringstream d;
    d << "phi coefficients, Fekete-Szego equality, L2 inequality for n=2..5";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {6, "coefficient suite", c.ok, d.str()};
}

/// 7. Inclusion thresholds of the comparison classes.
inline CriterionResult criterion7() {
    using namespace suite_detail;
    const Constants k;
    Check c;
    const Sigma one(1.0);

    SamplingPlan plan{};
    plan.margin_in = 1e-6;
    c.require(verify_region_inclusion(InnerRegion::sqrt_kappa(1.0 - k.c0 * k.c0), one, plan).pass,
              "sqrt-kappa at threshold");
    c.require(!verify_region_inclusion(InnerRegion::sqrt_kappa(1.0 - k.c0 * k.c0 + 0.02), one, plan).pass,
              "sqrt-kappa beyond threshold");
    c.require(verify_region_inclusion(InnerRegion::ellipse(k.c1 / (k.c1 - 1.0)), one, plan).pass,
              "ellipse for k = c1/(c1-1)");

    const double gamma0 = st_p_gamma().gamma0;
    bool below_ok = true, above_hit = false;
    for (int j = 0; j <= 1024; ++j) {
        const double tau = (pi() / 2.0) * j / 1024.0;
        const double h = st_p_h(tau);
        if (!(h < gamma0 + 1e-4)) below_ok = false;
        if (h > gamma0 - 1e-3) above_hit = true;
    }
    c.require(below_ok, "parabolic condition fails at gamma0 + 1e-4");
    c.require(above_hit, "parabolic condition does not bind at gamma0 - 1e-3");

    std::ostringstream d;
    d << "sqrt-kappa, ellipse and parabolic-starlike thresholds";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {7, "inclusion thresholds", c.ok, d.str()};
}

/// 8. Criteria consistency across the four example families.
inline CriterionResult criterion8() {
    using namespace suite_detail;
    Check c;
    const Sigma one(1.0);
    SamplingPlan plan{};
    plan.angles = 512;

    struct Item {
        std::string name;
        double threshold;
        std::function<FamilySpec(double)> make;
    };
    const std::vector<Item> items = {
        {"monomial(2)", family_threshold(ThresholdFamily::MonomialPerturb, 2),
         [](double a) { return FamilySpec::monomial(2, a); }},
        {"koebe-type", family_threshold(ThresholdFamily::KoebeType),
         [](double a) { return FamilySpec::koebe_type(a); }},
        {"half-koebe", family_threshold(ThresholdFamily::HalfKoebe),
         [](double a) { return FamilySpec::half_koebe(a); }},
        {"exp-line", family_threshold(ThresholdFamily::ExpLine),
         [](double a) { return FamilySpec::exp_line(a); }},
    };
    for (const auto& item : items) {
        const FamilySpec below = item.make(item.threshold * 0.99);
        const FamilySpec above = item.make(item.threshold * 1.05);

        c.require(verify_subordination(below, one, plan).pass, item.name + " subordination below");
        c.require(!verify_subordination(above, one, plan).pass, item.name + " subordination above");

        const CoeffList cb = CoeffList::from_series(family_series(below, kDefaultOrder));
        const CoeffList ca = CoeffList::from_series(family_series(above, kDefaultOrder));
        c.require(convolution_nonvanishing(cb, 128, 64).pass, item.name + " convolution below");
        c.require(!convolution_nonvanishing(ca, 128, 64).pass, item.name + " convolution above");
    }

    std::ostringstream d;
    d << "subordination sampling, convolution check and threshold formula agree on all four "
         "families";
    if (!c.ok) d << " [" << c.log.str() << "]";
    return {8, "criteria consistency", c.ok, d.str()};
}

/// Runs all acceptance criteria, printing one pass/fail line per criterion.
/// A criterion that throws is reported as a failure, not a crash.
inline bool run_acceptance(std::ostream& os) {
    using Fn = CriterionResult (*)();
    const std::vector<std::pair<int, Fn>> battery = {
        {1, &criterion1}, {2, &criterion2}, {3, &criterion3}, {4, &criterion4},
        {5, &criterion5}, {6, &criterion6}, {7, &criterion7}, {8, &criterion8}};
    std::vector<CriterionResult> results;
    for (const auto& [id, fn] : battery) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back({id, "criterion threw", false, e.what()});
        }
    }
    bool all = true;
    for (const auto& r : results) {
        os << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": "
           << r.detail << "\n";
        all = all && r.pass;
    }
    os << (all ? "ACCEPTANCE: all criteria passed\n" : "ACCEPTANCE: FAILURES PRESENT\n");
    return all;
}

}  // namespace srho
