#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <ostream>

#include "srho/errors.hpp"
#include "srho/numerics.hpp"
#include "srho/series.hpp"

namespace srho {

/// Region parameter of rho_sigma(z) = cosh(sigma*sqrt(z)). Canonicalized to
/// |sigma| since rho_sigma = rho_{-sigma}.
class Sigma {
  public:
    explicit Sigma(double v) : v_(std::abs(v)) {
        const double pi_half = std::acos(-1.0) / 2.0;
        if (v_ == 0.0 || v_ > pi_half + 1e-15)
            throw SigmaOutOfRange("Sigma: value must lie in [-pi/2, pi/2] minus {0}");
    }
    double value() const { return v_; }

  private:
    double v_;
};

/// The two constants the sigma = 1 results are written in.
struct Constants {
    double c0 = std::cos(1.0);
    double c1 = std::cosh(1.0);
};

struct Disc {
    Complex center;
    double radius = 0.0;
};

/// Point of the boundary curve rho_sigma(e^{it}).
struct BoundaryPoint {
    double t;
    double x;
    double y;
};

/// rho_sigma(z) = cosh(sigma*sqrt(z)), principal square root; the value is
/// branch-independent because cosh is even. Evaluated through the series for
/// very small |z|.
inline Complex eval_rho(const Sigma& sigma, Complex z) {
    const double s = sigma.value();
    if (std::abs(z) <= 1e-8) {
        const double s2 = s * s;
        return Complex(1.0) + s2 * z / 2.0 + s2 * s2 * z * z / 24.0;
    }
    return std::cosh(s * std::sqrt(z));
}

/// |log(u + sqrt(u-1)*sqrt(u+1))| with principal branches. The split product
/// keeps Re of the log argument on the correct sheet for Re u < 0, so the
/// result equals |arccosh u| with Re >= 0.
inline double arccosh_norm(Complex u) {
    const Complex w = std::log(u + std::sqrt(u - Complex(1.0)) * std::sqrt(u + Complex(1.0)));
    return std::abs(w);
}

/// Membership test for Omega_{rho_sigma} = {u : |arccosh u| < sigma}.
/// margin_out widens (or narrows, when negative) the test radius to
/// sigma*(1 + margin_out) for tolerance-aware boundary probes.
inline bool contains(const Sigma& sigma, Complex u, double margin_out = 0.0) {
    return arccosh_norm(u) < sigma.value() * (1.0 + margin_out);
}

inline BoundaryPoint boundary_point(const Sigma& sigma, double t) {
    const double s = sigma.value();
    const double tau = 0.5 * t;
    BoundaryPoint p{};
    p.t = t;
    p.x = std::cos(s * std::sin(tau)) * std::cosh(s * std::cos(tau));
    p.y = std::sin(s * std::sin(tau)) * std::sinh(s * std::cos(tau));
    return p;
}

/// G_c(tau): squared distance from (c, 0) to the boundary point at t = 2*tau.
inline double distance_sq(const Sigma& sigma, double c, double tau) {
    const double s = sigma.value();
    if (!(c > std::cos(s)) || !(c < std::cosh(s)))
        throw COutOfRange("distance_sq: need cos(sigma) < c < cosh(sigma)");
    const double a = std::cosh(s * std::cos(tau)) * std::cos(s * std::sin(tau));
    const double b = std::sinh(s * std::cos(tau)) * std::sin(s * std::sin(tau));
    return (c - a) * (c - a) + b * b;
}

/// Largest disc centered at (c, 0) inscribed in Omega: radius c - cos(sigma)
/// left of the midpoint of the real section, cosh(sigma) - c right of it.
/// Cross-checked against a grid minimum of sqrt(G_c).
inline Disc inscribed_radius(const Sigma& sigma, double c, const NumericConfig& cfg = {}) {
    const double s = sigma.value();
    const double lo = std::cos(s), hi = std::cosh(s);
    if (!(c > lo) || !(c < hi))
        throw COutOfRange("inscribed_radius: need cos(sigma) < c < cosh(sigma)");
    const double mid = 0.5 * (lo + hi);
    const double r = (c <= mid) ? (c - lo) : (hi - c);

    const double pi_half = std::acos(-1.0) / 2.0;
    const Extremum m = minimize_on_interval(
        [&](double tau) { return std::sqrt(distance_sq(sigma, c, tau)); }, 0.0, pi_half, cfg);
    if (std::abs(m.value - r) > 1e-8)
        throw NoConvergence("inscribed_radius: closed form and grid minimum disagree");
    return Disc{Complex(c, 0.0), r};
}

struct ArgBound {
    double m;       // sup of |arg u| over Omega
    double t_star;  // boundary parameter attaining it
};

/// Maximal argument over the closure of Omega, computed on the boundary
/// curve as atan2(Y(t), X(t)) and maximized over t in [0, pi].
inline ArgBound max_argument(const Sigma& sigma, const NumericConfig& cfg = {}) {
    const double pi = std::acos(-1.0);
    const Extremum e = maximize_on_interval(
        [&](double t) {
            const BoundaryPoint p = boundary_point(sigma, t);
            return std::atan2(p.y, p.x);
        },
        0.0, pi, cfg);
    return ArgBound{e.value, e.arg};
}

struct ImagExtent {
    double l;   // |Im| of the boundary at the midpoint chord crossing
    double t0;  // least positive root of the defining equation
};

/// Lemma constant l = |Im rho_sigma(e^{i t0})| where t0 solves
/// cos(sigma) + cosh(sigma) = 2 cos(sigma sin(t/2)) cosh(sigma cos(t/2)).
inline ImagExtent imag_extent(const Sigma& sigma, const NumericConfig& cfg = {}) {
    const double s = sigma.value();
    const double pi = std::acos(-1.0);
    const double target = std::cos(s) + std::cosh(s);
    const auto h = [&](double t) { return target - 2.0 * boundary_point(sigma, t).x; };
    const double t0 = find_least_root(h, 0.0, pi, cfg);
    return ImagExtent{std::abs(boundary_point(sigma, t0).y), t0};
}

struct ParabolicBound {
    double gamma0;     // max of H over [0, pi/2]
    double tau_tilde;  // argmax
};

/// H(tau) = sin^2(sin tau) sinh^2(cos tau) / (4 cos(sin tau) cosh(cos tau)),
/// the sigma = 1 threshold function for the parabolic starlike inclusion.
inline double st_p_h(double tau) {
    const double sn = std::sin(tau), cs = std::cos(tau);
    const double num = std::pow(std::sin(sn) * std::sinh(cs), 2);
    return num / (4.0 * std::cos(sn) * std::cosh(cs));
}

inline ParabolicBound st_p_gamma(const NumericConfig& cfg = {}) {
    const double pi_half = std::acos(-1.0) / 2.0;
    const Extremum e = maximize_on_interval(st_p_h, 0.0, pi_half, cfg);
    return ParabolicBound{e.value, e.arg};
}

struct ThresholdRecord {
    double zeta;     // starlike order:     S*_rho_sigma subset S*(zeta)
    double beta;     // M(beta) bound:      S*_rho_sigma subset M(beta)
    double kappa_max;  // S*(q_kappa) subset S*_rho_sigma for kappa <= this
    double k_min;      // k-ST subset S*_rho_sigma for k >= this
    std::optional<double> s_hpl_min;  // only for |sigma| <= pi/3
    double s_l_min;
};

/// log(sec sigma)/log 2, defined for sigma in [-pi/3, pi/3] minus {0}.
inline double hpl_threshold(const Sigma& sigma) {
    const double pi = std::acos(-1.0);
    if (sigma.value() > pi / 3.0 + 1e-15)
        throw HplDomain("hpl_threshold: sigma must lie in [-pi/3, pi/3]");
    return std::log(1.0 / std::cos(sigma.value())) / std::log(2.0);
}

inline ThresholdRecord inclusion_thresholds(const Sigma& sigma) {
    const double s = sigma.value();
    const double pi = std::acos(-1.0);
    ThresholdRecord r{};
    r.zeta = std::cos(s);
    r.beta = std::cosh(s);
    r.kappa_max = 1.0 - std::cos(s) * std::cos(s);
    r.k_min = std::cosh(s) / (std::cosh(s) - 1.0);
    if (s <= pi / 3.0 + 1e-15) r.s_hpl_min = hpl_threshold(sigma);
    r.s_l_min = 1.0 - std::sqrt(std::cos(s));
    return r;
}

/// CSV export of the boundary curve: header "t,x,y", one row per sample,
/// t spanning [-pi, pi) uniformly, 17 significant digits.
inline void write_boundary_csv(std::ostream& os, const Sigma& sigma, int samples) {
    if (samples < 1) throw BadParams("write_boundary_csv: samples must be >= 1");
    const double pi = std::acos(-1.0);
    char buf[96];
    os << "t,x,y\n";
    for (int i = 0; i < samples; ++i) {
        const double t = -pi + 2.0 * pi * static_cast<double>(i) / samples;
        const BoundaryPoint p = boundary_point(sigma, t);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.t, p.x, p.y);
        os << buf;
    }
}

}  // namespace srho
