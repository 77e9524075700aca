#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "srho/errors.hpp"
#include "srho/family.hpp"
#include "srho/numerics.hpp"
#include "srho/region.hpp"

namespace srho {

enum class RadiusKind {
    StarlikeOrder,  // S*_rho restricted to |z| < r is starlike of order zeta
    MBeta,          // ... lies in M(beta)
    Convexity,      // ... is convex of order alpha
    Janowski,       // S*_n[A,B] members belong to S*_n(rho) for |z| < r
    MnBeta,         // M_n(beta) members ...
    F1Zero,         // F1(0) members ...
    F1Half,         // F1(1/2) members ...
    F2,             // F2 members ...
    F3,             // F3 members ...
};

struct JanowskiParams {
    double A;
    double B;
    int n = 1;

    void validate() const {
        if (n < 1) throw ParamOutOfDomain("JanowskiParams: n must be >= 1");
        if (!(B < A)) throw ParamOrder("JanowskiParams: need B < A");
        if (B < -1.0 || A > 1.0) throw ParamOutOfDomain("JanowskiParams: need -1 <= B < A <= 1");
    }
};

/// Computed radius constant together with the defining-equation residual,
/// the active case and the extremal witness.
struct RadiusReport {
    RadiusKind kind;
    std::string class_name;
    std::vector<std::pair<std::string, double>> params;
    double radius = 0.0;
    std::string case_label;
    double residual = 0.0;
    FamilySpec extremal;
};

namespace radii_detail {

// Disc covered by z f'/f for the Janowski-type classes at |z|^n = rho.
struct CenterRadius {
    double c;
    double r;
};

inline CenterRadius janowski_disc(double A, double B, double rho) {
    const double d = 1.0 - B * B * rho * rho;
    return {(1.0 - A * B * rho * rho) / d, (A - B) * rho / d};
}

// Binding inscribed radius at a real center (the two-sided form of the
// maximal-disc theorem); -inf when the center leaves the real section.
inline double inscribed_bound(double c) {
    const Constants k;
    if (!(c > k.c0) || !(c < k.c1)) return -std::numeric_limits<double>::infinity();
    return std::min(c - k.c0, k.c1 - c);
}

inline double nth_root(double x, int n) { return std::pow(x, 1.0 / n); }

}  // namespace radii_detail

/// Largest r such that every f in S*_rho is starlike of order zeta on
/// |z| < r: the least positive root of cos(sqrt r) = zeta.
inline RadiusReport starlike_order_radius(double zeta) {
    const Constants k;
    if (!(zeta >= k.c0) || !(zeta < 1.0))
        throw ZetaOutOfRange("starlike_order_radius: need cos(1) <= zeta < 1");
    const double a = std::acos(zeta);
    RadiusReport rep;
    rep.kind = RadiusKind::StarlikeOrder;
    rep.class_name = "starlike-order";
    rep.params = {{"zeta", zeta}};
    rep.radius = std::min(1.0, a * a);
    rep.residual = std::abs(std::cos(std::sqrt(rep.radius)) - zeta);
    rep.case_label = "least positive root of cos(sqrt r) = zeta";
    rep.extremal = FamilySpec::phi_n(2);
    return rep;
}

/// Largest r with S*_rho restricted to |z| < r inside M(beta); 1 for
/// beta >= cosh 1, otherwise the root of cosh(sqrt r) = beta.
inline RadiusReport mbeta_radius(double beta) {
    const Constants k;
    if (!(beta > 1.0)) throw BetaOutOfRange("mbeta_radius: need beta > 1");
    RadiusReport rep;
    rep.kind = RadiusKind::MBeta;
    rep.class_name = "mbeta";
    rep.params = {{"beta", beta}};
    rep.extremal = FamilySpec::phi_n(2);
    if (beta >= k.c1) {
        rep.radius = 1.0;
        rep.residual = 0.0;
        rep.case_label = "whole disc (beta >= cosh 1)";
        return rep;
    }
    const double a = std::acosh(beta);
    rep.radius = std::min(1.0, a * a);
    rep.residual = std::abs(std::cosh(std::sqrt(rep.radius)) - beta);
    rep.case_label = "smallest root of cosh(sqrt r) = beta";
    return rep;
}

/// Radius of convexity of order alpha: least positive root of
/// 2(1 - r^2) cos(sqrt r) - sqrt(r) tan(sqrt r) = alpha.
inline RadiusReport convexity_radius(double alpha, const NumericConfig& cfg = {}) {
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw AlphaOutOfRange("convexity_radius: need 0 <= alpha < 1");
    const auto eq = [alpha](double r) {
        const double s = std::sqrt(r);
        return 2.0 * (1.0 - r * r) * std::cos(s) - s * std::tan(s) - alpha;
    };
    RadiusReport rep;
    rep.kind = RadiusKind::Convexity;
    rep.class_name = "convexity";
    rep.params = {{"alpha", alpha}};
    rep.radius = find_least_root(eq, 0.0, 1.0 - 1e-12, cfg);
    rep.residual = std::abs(eq(rep.radius));
    rep.case_label = "least positive root (no sharpness claimed)";
    rep.extremal = FamilySpec::phi_n(2);
    return rep;
}

/// Exact subordination test for p(z) = (1 + A z)/(1 + B z) against
/// cosh(sqrt z): the Janowski disc must fit the maximal inscribed disc at
/// its center, which reproduces the two-case parameter bound.
inline bool janowski_subordinate_ok(double A, double B) {
    if (!(B < A)) throw ParamOrder("janowski_subordinate_ok: need B < A");
    if (!(B > -1.0) || !(A <= 1.0))
        throw ParamOutOfDomain("janowski_subordinate_ok: need -1 < B < A <= 1");
    const auto [c, r] = radii_detail::janowski_disc(A, B, 1.0);
    return r <= radii_detail::inscribed_bound(c);
}

/// Sharp S*_n(rho)-radius of S*_n[A,B].
inline RadiusReport janowski_radius(const JanowskiParams& p) {
    p.validate();
    if (p.B < 0.0 && p.A <= 0.0)
        throw UnsupportedSigns("janowski_radius: case B < 0, A <= 0 is not covered");
    const Constants k;
    using radii_detail::inscribed_bound;
    using radii_detail::janowski_disc;
    using radii_detail::nth_root;

    RadiusReport rep;
    rep.kind = RadiusKind::Janowski;
    rep.class_name = "janowski";
    rep.params = {{"A", p.A}, {"B", p.B}, {"n", static_cast<double>(p.n)}};
    rep.extremal = FamilySpec::janowski(p.n, p.A, p.B);

    const double rho0 = (1.0 - k.c0) / (p.A - p.B * k.c0);
    const double R0 = std::min(1.0, nth_root(rho0, p.n));
    if (p.B >= 0.0) {
        rep.radius = R0;
        rep.case_label = (R0 < 1.0) ? "R0 (tangent at cos 1)" : "R0 capped at 1";
        rep.params.emplace_back("R0", R0);
    } else {
        // midpoint-crossing radius; the center of the image disc passes
        // (c0+c1)/2 exactly at rho^2 = (c0+c1-2)/(B((c0+c1)B - 2A))
        const double cs = k.c0 + k.c1;
        const double rho1_sq = (cs - 2.0) / (p.B * (cs * p.B - 2.0 * p.A));
        const double R1 = nth_root(std::sqrt(rho1_sq), p.n);
        const double rho2 = (k.c1 - 1.0) / (p.A - p.B * k.c1);
        const double R2 = std::min(1.0, nth_root(rho2, p.n));
        rep.params.emplace_back("R0", R0);
        rep.params.emplace_back("R1", R1);
        rep.params.emplace_back("R2", R2);
        if (R0 <= R1) {
            rep.radius = R0;
            rep.case_label = (R0 < 1.0) ? "R0 (tangent at cos 1)" : "R0 capped at 1";
        } else {
            rep.radius = R2;
            rep.case_label = (R2 < 1.0) ? "R2 (tangent at cosh 1)" : "R2 capped at 1";
        }
    }
    if (rep.radius < 1.0) {
        const double rho = std::pow(rep.radius, p.n);
        const auto [c, r] = janowski_disc(p.A, p.B, rho);
        rep.residual = std::abs(r - inscribed_bound(c));
    }
    return rep;
}

/// Sharp S*_n(rho)-radius of M_n(beta): ((1-c0)/(2 beta - (1+c0)))^(1/n).
inline RadiusReport mn_beta_radius(double beta, int n) {
    if (!(beta > 1.0)) throw BetaOutOfRange("mn_beta_radius: need beta > 1");
    if (n < 1) throw ParamOutOfDomain("mn_beta_radius: need n >= 1");
    const Constants k;
    const double rho = (1.0 - k.c0) / (2.0 * beta - (1.0 + k.c0));
    RadiusReport rep;
    rep.kind = RadiusKind::MnBeta;
    rep.class_name = "mn-beta";
    rep.params = {{"beta", beta}, {"n", static_cast<double>(n)}};
    rep.radius = radii_detail::nth_root(rho, n);
    rep.extremal = FamilySpec::mbeta(n, beta);
    const double c = (1.0 + (1.0 - 2.0 * beta) * rho * rho) / (1.0 - rho * rho);
    const double r = 2.0 * (beta - 1.0) * rho / (1.0 - rho * rho);
    rep.residual = std::abs(r - (c - k.c0));
    rep.case_label = "tangent at cos 1";
    return rep;
}

enum class RatioClass { F1_0, F1_Half, F2 };

/// Sharp S*_n(rho)-radii for the ratio-of-functions classes. The covered
/// disc has center 1 (F1 variants) or 1/(1-rho^2) (F2); the reported radius
/// is the first rho at which the disc reaches the region boundary, taking
/// whichever side binds first.
inline RadiusReport ratio_class_radius(RatioClass cls, int n) {
    if (n < 1) throw ParamOutOfDomain("ratio_class_radius: need n >= 1");
    const Constants k;
    using radii_detail::nth_root;
    RadiusReport rep;
    rep.params = {{"n", static_cast<double>(n)}};
    switch (cls) {
        case RatioClass::F1_0: {
            // n rho (3 + rho)/(1 - rho^2) = 1 - c0, disc centered at 1
            const double a = n + 1.0 - k.c0, b = 3.0 * n, c = -(1.0 - k.c0);
            const double rho = (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
            rep.kind = RadiusKind::F1Zero;
            rep.class_name = "f1-0";
            rep.radius = nth_root(rho, n);
            rep.residual = std::abs(n * rho * (3.0 + rho) / (1.0 - rho * rho) - (1.0 - k.c0));
            rep.case_label = "tangent at cos 1";
            rep.extremal = FamilySpec::f1_witness(n, 0.0);
            return rep;
        }
        case RatioClass::F1_Half: {
            const double rho = (1.0 - k.c0) / (2.0 * n + 1.0 - k.c0);
            rep.kind = RadiusKind::F1Half;
            rep.class_name = "f1-half";
            rep.radius = nth_root(rho, n);
            rep.residual = std::abs(2.0 * n * rho / (1.0 - rho) - (1.0 - k.c0));
            rep.case_label = "tangent at cos 1";
            rep.extremal = FamilySpec::f1_half_witness(n);
            return rep;
        }
        case RatioClass::F2: {
            // left side:  (n - c0) rho^2 + (1+n) rho - (1 - c0) = 0
            // right side: (n + c1) rho^2 + (1+n) rho + (1 - c1) = 0
            const double bl = 1.0 + n;
            const double rho_left =
                (-bl + std::sqrt(bl * bl + 4.0 * (n - k.c0) * (1.0 - k.c0))) / (2.0 * (n - k.c0));
            const double rho_right =
                (-bl + std::sqrt(bl * bl + 4.0 * (n + k.c1) * (k.c1 - 1.0))) / (2.0 * (n + k.c1));
            const double rho = std::min(rho_left, rho_right);
            rep.kind = RadiusKind::F2;
            rep.class_name = "f2";
            rep.radius = nth_root(rho, n);
            rep.params.emplace_back("rho_left", rho_left);
            rep.params.emplace_back("rho_right", rho_right);
            const double c = 1.0 / (1.0 - rho * rho);
            const double r = (n * rho * rho + (1.0 + n) * rho) / (1.0 - rho * rho);
            rep.residual = std::abs(r - radii_detail::inscribed_bound(c));
            rep.case_label = (rho_left <= rho_right) ? "tangent at cos 1" : "tangent at cosh 1";
            rep.extremal = FamilySpec::f2_witness(n);
            return rep;
        }
    }
    throw BadParams("ratio_class_radius: unknown class");
}

/// Sharp S*_n(rho)-radius for F3. Reports the closed-form candidates R0
/// (left tangency) and R1 (right tangency) plus the certified radius: the
/// largest r whose covered disc, center (1+A rho^2)/(1-rho^2) and radius
/// (4n+1+A) rho/(1-rho^2), fits the region.
inline RadiusReport f3_radius(double A, int n, const NumericConfig& cfg = {}) {
    if (!(A >= -1.0) || !(A <= 1.0)) throw AOutOfRange("f3_radius: need -1 <= A <= 1");
    if (n < 1) throw ParamOutOfDomain("f3_radius: need n >= 1");
    (void)cfg;
    const Constants k;
    using radii_detail::inscribed_bound;
    using radii_detail::nth_root;

    const double q = 1.0 + A + 4.0 * n;
    double rho0;
    if (std::abs(A + k.c0) < 1e-12) {
        rho0 = (1.0 - k.c0) / (1.0 + 4.0 * n - k.c0);
    } else {
        // least positive root of (A+c0) rho^2 - q rho + (1-c0) = 0; the same
        // branch expression is the positive root for either sign of A+c0
        rho0 = (q - std::sqrt(q * q - 4.0 * (A + k.c0) * (1.0 - k.c0))) / (2.0 * (A + k.c0));
    }
    const double rho1 = (-q + std::sqrt(q * q + 4.0 * (A + k.c1) * (k.c1 - 1.0))) / (2.0 * (A + k.c1));

    const auto fits = [&](double rho) {
        const double c = (1.0 + A * rho * rho) / (1.0 - rho * rho);
        const double r = (4.0 * n + 1.0 + A) * rho / (1.0 - rho * rho);
        return r <= inscribed_bound(c);
    };
    double lo = 0.0, hi = 1.0 - 1e-12;
    if (fits(hi)) {
        lo = hi;
    } else {
        while (hi - lo > 1e-13) {
            const double mid = 0.5 * (lo + hi);
            (fits(mid) ? lo : hi) = mid;
        }
    }
    const double rho_cert = lo;

    RadiusReport rep;
    rep.kind = RadiusKind::F3;
    rep.class_name = "f3";
    rep.params = {{"A", A},
                  {"n", static_cast<double>(n)},
                  {"R0", nth_root(rho0, n)},
                  {"R1", nth_root(rho1, n)}};
    rep.radius = nth_root(rho_cert, n);
    const double c = (1.0 + A * rho_cert * rho_cert) / (1.0 - rho_cert * rho_cert);
    const double r = (4.0 * n + 1.0 + A) * rho_cert / (1.0 - rho_cert * rho_cert);
    rep.residual = std::abs(r - inscribed_bound(c));
    rep.case_label = (std::abs(rho_cert - rho0) <= std::abs(rho_cert - rho1))
                         ? "R0 (tangent at cos 1)"
                         : "R1 (tangent at cosh 1)";
    rep.extremal = FamilySpec::f3_witness(n, A);
    return rep;
}

enum class ThresholdFamily { MonomialPerturb, KoebeType, HalfKoebe, ExpLine };

/// Membership thresholds of the closed-form example families.
inline double family_threshold(ThresholdFamily fam, int n = 2) {
    const Constants k;
    switch (fam) {
        case ThresholdFamily::MonomialPerturb:
            if (n < 2) throw BadN("family_threshold: MonomialPerturb needs n >= 2");
            return (1.0 - k.c0) / (n - k.c0);
        case ThresholdFamily::KoebeType:
            return (k.c1 - 1.0) / (k.c1 + 1.0);
        case ThresholdFamily::HalfKoebe:
            return (k.c1 - 1.0) / k.c1;
        case ThresholdFamily::ExpLine:
            return 1.0 - k.c0;
    }
    throw BadParams("family_threshold: unknown family");
}

}  // namespace srho
