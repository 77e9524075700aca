#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "srho/errors.hpp"
#include "srho/family.hpp"
#include "srho/radii.hpp"
#include "srho/region.hpp"
#include "srho/series.hpp"

namespace srho {

struct SamplingPlan {
    std::vector<double> radii{0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999};
    int angles = 1024;
    double margin_in = 1e-9;
    double margin_out = 1e-3;

    void validate() const {
        if (radii.empty()) throw BadParams("SamplingPlan: radii must be nonempty");
        for (double r : radii)
            if (!(r > 0.0) || !(r < 1.0)) throw BadParams("SamplingPlan: radii must lie in (0,1)");
        if (angles < 64) throw BadParams("SamplingPlan: angles must be >= 64");
    }
};

/// Outcome of a sampling oracle. worst_margin is the maximum relative
/// boundary excess over all samples (negative = strictly inside); for the
/// convolution check it carries the minimum modulus instead.
struct VerificationReport {
    bool pass = false;
    bool inconclusive = false;
    double worst_margin = -std::numeric_limits<double>::infinity();
    Complex witness{};
    std::size_t samples_checked = 0;
};

namespace verify_detail {

inline double omega_margin(const Sigma& sigma, Complex u) {
    return arccosh_norm(u) / sigma.value() - 1.0;
}

inline double two_pi() { return 2.0 * std::acos(-1.0); }

}  // namespace verify_detail

/// Certifies z f'(z)/f(z) (closed form) maps the sampled circles into
/// Omega. Containment of the image certifies subordination because
/// rho_sigma is convex univalent and both sides take the value 1 at 0.
inline VerificationReport verify_subordination(const FamilySpec& f, const Sigma& sigma,
                                               const SamplingPlan& plan = {}) {
    plan.validate();
    VerificationReport rep;
    const bool f_can_vanish = (f.family == Family::MonomialPerturb);
    for (double r : plan.radii) {
        for (int j = 0; j < plan.angles; ++j) {
            const double th = -std::acos(-1.0) + verify_detail::two_pi() * j / plan.angles;
            const Complex z = std::polar(r, th);
            if (f_can_vanish && std::abs(family_eval(f, z)) < 1e-12) {
                rep.inconclusive = true;
                rep.witness = z;
                rep.pass = false;
                return rep;
            }
            const double m = verify_detail::omega_margin(sigma, family_qvalue(f, z));
            ++rep.samples_checked;
            if (m > rep.worst_margin) {
                rep.worst_margin = m;
                rep.witness = z;
            }
        }
    }
    rep.pass = rep.worst_margin < plan.margin_in;
    return rep;
}

/// Same oracle for a truncated series; radii above the series accuracy
/// domain (0.95) are skipped.
inline VerificationReport verify_subordination(const TaylorSeries& f, const Sigma& sigma,
                                               const SamplingPlan& plan = {}) {
    plan.validate();
    VerificationReport rep;
    for (double r : plan.radii) {
        if (r > 0.95) continue;
        for (int j = 0; j < plan.angles; ++j) {
            const double th = -std::acos(-1.0) + verify_detail::two_pi() * j / plan.angles;
            const Complex z = std::polar(r, th);
            const Complex fz = series_eval(f, z);
            if (std::abs(fz) < 1e-12) {
                rep.inconclusive = true;
                rep.witness = z;
                rep.pass = false;
                return rep;
            }
            const Complex w = z * series_eval_derivative(f, z) / fz;
            const double m = verify_detail::omega_margin(sigma, w);
            ++rep.samples_checked;
            if (m > rep.worst_margin) {
                rep.worst_margin = m;
                rep.witness = z;
            }
        }
    }
    if (rep.samples_checked == 0) {  // every radius was outside the series domain
        rep.inconclusive = true;
        rep.worst_margin = 0.0;
        rep.pass = false;
        return rep;
    }
    rep.pass = rep.worst_margin < plan.margin_in;
    return rep;
}

/// Inner regions whose containment in (or around) Omega the oracle checks.
/// Disc/Janowski/SqrtKappa/Ellipse are candidate subsets of Omega; for Hpl
/// and Limacon the roles flip: Omega itself is the inner region and its
/// boundary samples are tested against the named image region.
struct InnerRegion {
    enum class Kind { Disc, Janowski, SqrtKappa, EllipseK, Hpl, Limacon } kind;
    Complex center{};
    double radius = 0.0;
    double A = 0.0, B = 0.0;
    double kappa = 0.0;
    double k = 0.0;
    double s = 0.0;

    static InnerRegion disc(Complex c, double r) {
        if (!(r >= 0.0)) throw BadParams("InnerRegion::disc: radius must be >= 0");
        InnerRegion g{Kind::Disc};
        g.center = c;
        g.radius = r;
        return g;
    }
    static InnerRegion janowski(double A, double B) {
        if (!(B < A) || std::abs(B) >= 1.0 || A > 1.0)
            throw BadParams("InnerRegion::janowski: need -1 < B < A <= 1");
        InnerRegion g{Kind::Janowski};
        g.A = A;
        g.B = B;
        return g;
    }
    static InnerRegion sqrt_kappa(double kappa) {
        if (!(kappa > 0.0) || kappa > 1.0) throw BadParams("InnerRegion::sqrt_kappa: kappa in (0,1]");
        InnerRegion g{Kind::SqrtKappa};
        g.kappa = kappa;
        return g;
    }
    static InnerRegion ellipse(double k) {
        if (!(k > 1.0)) throw BadParams("InnerRegion::ellipse: need k > 1");
        InnerRegion g{Kind::EllipseK};
        g.k = k;
        return g;
    }
    static InnerRegion hpl(double s) {
        if (!(s > 0.0) || s > 1.0) throw BadParams("InnerRegion::hpl: s in (0,1]");
        InnerRegion g{Kind::Hpl};
        g.s = s;
        return g;
    }
    static InnerRegion limacon(double s) {
        if (!(s > 0.0) || s > 1.0 / std::sqrt(2.0) + 1e-12)
            throw BadParams("InnerRegion::limacon: s in (0, 1/sqrt 2]");
        InnerRegion g{Kind::Limacon};
        g.s = s;
        return g;
    }
};

inline VerificationReport verify_region_inclusion(const InnerRegion& inner, const Sigma& sigma,
                                                  const SamplingPlan& plan = {}) {
    plan.validate();
    VerificationReport rep;
    const double pi = std::acos(-1.0);
    const auto record = [&rep](double m, Complex u) {
        ++rep.samples_checked;
        if (m > rep.worst_margin) {
            rep.worst_margin = m;
            rep.witness = u;
        }
    };
    for (int j = 0; j < plan.angles; ++j) {
        const double th = -pi + verify_detail::two_pi() * j / plan.angles;
        switch (inner.kind) {
            case InnerRegion::Kind::Disc: {
                const Complex u = inner.center + std::polar(inner.radius, th);
                record(verify_detail::omega_margin(sigma, u), u);
                break;
            }
            case InnerRegion::Kind::Janowski: {
                const Complex e = std::polar(1.0, th);
                const Complex u = (Complex(1.0) + inner.A * e) / (Complex(1.0) + inner.B * e);
                record(verify_detail::omega_margin(sigma, u), u);
                break;
            }
            case InnerRegion::Kind::SqrtKappa: {
                const Complex u = std::sqrt(Complex(1.0) + inner.kappa * std::polar(1.0, th));
                record(verify_detail::omega_margin(sigma, u), u);
                break;
            }
            case InnerRegion::Kind::EllipseK: {
                const double k2 = inner.k * inner.k;
                const Complex u(k2 / (k2 - 1.0) + inner.k / (k2 - 1.0) * std::cos(th),
                                std::sin(th) / std::sqrt(k2 - 1.0));
                record(verify_detail::omega_margin(sigma, u), u);
                break;
            }
            case InnerRegion::Kind::Hpl: {
                // Omega boundary against the image of (1-z)^(-s):
                // u is in the image iff |1 - u^(-1/s)| < 1
                const BoundaryPoint p = boundary_point(sigma, th);
                const Complex u(p.x, p.y);
                const Complex w = Complex(1.0) - std::exp(-std::log(u) / inner.s);
                record(std::abs(w) - 1.0, u);
                break;
            }
            case InnerRegion::Kind::Limacon: {
                // Omega boundary against the image of (1+sz)^2:
                // u is in the image iff |sqrt(u) - 1| < s
                const BoundaryPoint p = boundary_point(sigma, th);
                const Complex u(p.x, p.y);
                record(std::abs(std::sqrt(u) - Complex(1.0)) / inner.s - 1.0, u);
                break;
            }
        }
    }
    rep.pass = rep.worst_margin < plan.margin_in;

    // cross-check the disc case against the maximal-disc closed form, away
    // from the tangency band where sampling and formula may legally differ
    if (inner.kind == InnerRegion::Kind::Disc && std::abs(inner.center.imag()) < 1e-15) {
        const double c = inner.center.real();
        const double lo = std::cos(sigma.value()), hi = std::cosh(sigma.value());
        if (c > lo && c < hi) {
            const double rmax = inscribed_radius(sigma, c).radius;
            if (std::abs(inner.radius - rmax) > 1e-6 * std::max(1.0, rmax)) {
                const bool formula_pass = inner.radius <= rmax;
                if (formula_pass != rep.pass)
                    throw NoConvergence("verify_region_inclusion: sampling disagrees with the disc formula");
            }
        }
    }
    return rep;
}

/// Target-region membership margin for a radius problem: the image of the
/// restricted class member must stay inside the region that defines the
/// problem (Omega for the S*_n(rho)-radii, the half-planes Re > zeta and
/// Re < beta for the starlike-order and M(beta) radii).
inline double radius_target_margin(const RadiusReport& rep, Complex w) {
    switch (rep.kind) {
        case RadiusKind::StarlikeOrder:
            return rep.params.at(0).second - w.real();  // zeta - Re w
        case RadiusKind::MBeta:
            return w.real() - rep.params.at(0).second;  // Re w - beta
        default:
            return verify_detail::omega_margin(Sigma(1.0), w);
    }
}

/// Sharpness probe: the extremal stays inside its target region just below
/// the reported radius and escapes just above it (containment only when
/// the radius is 1 or the problem carries no sharpness claim).
inline VerificationReport sharpness_probe(const RadiusReport& report, const SamplingPlan& plan = {}) {
    plan.validate();
    VerificationReport rep;
    const double pi = std::acos(-1.0);

    const bool convexity = (report.kind == RadiusKind::Convexity);
    const auto probe_value = [&](Complex z) -> double {
        if (convexity) {
            // 1 + z f''/f' for phi: rho(z) + z rho'(z)/rho(z), tested against
            // the half-plane Re > alpha
            const Sigma one(1.0);
            const Complex q = eval_rho(one, z);
            const Complex zq = 0.5 * std::sqrt(z) * std::sinh(std::sqrt(z));
            const double alpha = report.params.at(0).second;
            return alpha - (q + zq / q).real();
        }
        return radius_target_margin(report, family_qvalue(report.extremal, z));
    };

    const double r_in = std::min(0.999, report.radius * (1.0 - 1e-4));
    for (int j = 0; j < plan.angles; ++j) {
        const double th = -pi + verify_detail::two_pi() * j / plan.angles;
        const Complex z = std::polar(r_in, th);
        const double m = probe_value(z);
        ++rep.samples_checked;
        if (m > rep.worst_margin) {
            rep.worst_margin = m;
            rep.witness = z;
        }
    }
    const bool inside_ok = rep.worst_margin < plan.margin_in;

    const double r_out = std::min(0.999, report.radius * (1.0 + 1e-2));
    bool escape_ok = true;
    if (!convexity && report.radius < 1.0 && r_out > report.radius) {
        escape_ok = false;
        for (int j = 0; j < plan.angles && !escape_ok; ++j) {
            const double th = -pi + verify_detail::two_pi() * j / plan.angles;
            const Complex z = std::polar(r_out, th);
            if (probe_value(z) > plan.margin_in) {
                escape_ok = true;
                rep.witness = z;
            }
        }
    }
    rep.pass = inside_ok && escape_ok;
    return rep;
}

/// Sampled boundary polygon of Omega, vertices at uniform t in [-pi, pi).
inline std::vector<std::pair<double, double>> boundary_polygon(const Sigma& sigma, int n) {
    if (n < 3) throw BadParams("boundary_polygon: need at least 3 vertices");
    std::vector<std::pair<double, double>> poly;
    poly.reserve(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        const BoundaryPoint p = boundary_point(sigma, -pi + 2.0 * pi * i / n);
        poly.emplace_back(p.x, p.y);
    }
    return poly;
}

/// Winding number of the closed polygon around (px, py); nonzero = inside.
/// Independent membership oracle used to cross-check the analytic test.
inline int winding_number(double px, double py, const std::vector<std::pair<double, double>>& poly) {
    const auto is_left = [](double x1, double y1, double x2, double y2, double x, double y) {
        return (x2 - x1) * (y - y1) - (x - x1) * (y2 - y1);
    };
    int wn = 0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto [x1, y1] = poly[i];
        const auto [x2, y2] = poly[(i + 1) % n];
        if (y1 <= py) {
            if (y2 > py && is_left(x1, y1, x2, y2, px, py) > 0.0) ++wn;
        } else if (y2 <= py && is_left(x1, y1, x2, y2, px, py) < 0.0) {
            --wn;
        }
    }
    return wn;
}

/// Distance from (px, py) to the polygon (minimum over edges).
inline double polygon_distance(double px, double py,
                               const std::vector<std::pair<double, double>>& poly) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto [x1, y1] = poly[i];
        const auto [x2, y2] = poly[(i + 1) % n];
        const double dx = x2 - x1, dy = y2 - y1;
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0.0 ? ((px - x1) * dx + (py - y1) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double ex = px - (x1 + t * dx), ey = py - (y1 + t * dy);
        best = std::min(best, std::sqrt(ex * ex + ey * ey));
    }
    return best;
}

}  // namespace srho
