#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "srho/errors.hpp"
#include "srho/region.hpp"
#include "srho/series.hpp"
#include "srho/verify.hpp"

namespace srho {

/// Coefficient tail a_2..a_M of f(z) = z + sum a_k z^k.
struct CoeffList {
    std::vector<Complex> tail;  // tail[i] multiplies z^(i+2)

    static CoeffList from_series(const TaylorSeries& f) {
        if (std::abs(f.at(0)) > 1e-14 || std::abs(f.at(1) - Complex(1.0)) > 1e-14)
            throw BadParams("CoeffList: series must be normalized (c0 = 0, c1 = 1)");
        CoeffList c;
        for (int k = 2; k <= f.order(); ++k) c.tail.push_back(f.at(k));
        return c;
    }

    Complex a(int k) const {  // a_k, k >= 2
        if (k < 2 || k >= static_cast<int>(tail.size()) + 2) return Complex(0.0);
        return tail[static_cast<std::size_t>(k) - 2];
    }
    int max_index() const { return static_cast<int>(tail.size()) + 1; }
};

namespace criteria_detail {

// rho(e^{it}) = cosh(e^{it/2}), the boundary value entering the
// convolution kernel.
inline Complex boundary_rho(double t) {
    const BoundaryPoint p = boundary_point(Sigma(1.0), t);
    return Complex(p.x, p.y);
}

// Coefficients of E(z) = 1 - sum_{m=2}^{M+1} (m - rho_t) a_m/(rho_t - 1) z^(m-1).
inline std::vector<Complex> convolution_poly(const CoeffList& c, Complex rho_t) {
    const Complex den = rho_t - Complex(1.0);
    std::vector<Complex> poly(c.tail.size() + 1);
    poly[0] = Complex(1.0);
    for (std::size_t i = 0; i < c.tail.size(); ++i) {
        const double m = static_cast<double>(i) + 2.0;
        poly[i + 1] = -(Complex(m) - rho_t) * c.tail[i] / den;
    }
    return poly;
}

inline Complex poly_eval(const std::vector<Complex>& p, Complex z) {
    Complex acc(0.0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

inline Complex poly_eval_derivative(const std::vector<Complex>& p, Complex z) {
    Complex acc(0.0);
    for (std::size_t i = p.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * p[i];
    return acc;
}

}  // namespace criteria_detail

/// Membership characterization: f is in the class iff the polynomial E(z,t)
/// never vanishes for |z| < 1, t in [-pi, pi]. Scans a grid (z_samples radii
/// in [0.1, 0.999] x 4*z_samples angles per t) and Newton-polishes the worst
/// point per t so interior zeros between grid nodes are still found.
/// worst_margin carries the minimum modulus; pass iff it exceeds 1e-9.
inline VerificationReport convolution_nonvanishing(const CoeffList& c, int t_samples = 720,
                                                   int z_samples = 64) {
    if (t_samples < 64 || z_samples < 64)
        throw BadParams("convolution_nonvanishing: need t_samples, z_samples >= 64");
    using namespace criteria_detail;
    const double pi = std::acos(-1.0);
    const int angles = 4 * z_samples;

    VerificationReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    if (c.tail.empty()) {  // E is identically 1
        rep.pass = true;
        rep.worst_margin = 1.0;
        return rep;
    }

    std::vector<Complex> unit(static_cast<std::size_t>(angles));
    for (int j = 0; j < angles; ++j) unit[j] = std::polar(1.0, -pi + 2.0 * pi * j / angles);

    for (int i = 0; i < t_samples; ++i) {
        const double t = -pi + 2.0 * pi * i / t_samples;
        const auto poly = convolution_poly(c, boundary_rho(t));

        Complex zbest{};
        double best = std::numeric_limits<double>::infinity();
        for (int jr = 0; jr < z_samples; ++jr) {
            const double r = 0.1 + (0.999 - 0.1) * jr / (z_samples - 1);
            for (int ja = 0; ja < angles; ++ja) {
                const Complex z = r * unit[ja];
                const double v = std::abs(poly_eval(poly, z));
                ++rep.samples_checked;
                if (v < best) {
                    best = v;
                    zbest = z;
                }
            }
        }
        if (best < rep.worst_margin) {
            rep.worst_margin = best;
            rep.witness = zbest;
        }
        // polish toward a true zero of the polynomial near the grid minimum
        Complex z = zbest;
        for (int it = 0; it < 40; ++it) {
            const Complex num = poly_eval(poly, z);
            const Complex den = poly_eval_derivative(poly, z);
            if (std::abs(den) == 0.0) break;
            const Complex step = num / den;
            z -= step;
            if (std::abs(z) > 1.2) break;
            if (std::abs(step) < 1e-15) break;
        }
        if (std::abs(z) <= 0.999 + 1e-12) {
            const double v = std::abs(poly_eval(poly, z));
            if (v < rep.worst_margin) {
                rep.worst_margin = v;
                rep.witness = z;
            }
        }
    }
    rep.pass = rep.worst_margin > 1e-9;
    return rep;
}

struct CoeffSufficiency {
    bool pass;
    double worst_sum;
    double worst_t;
};

/// sum |(m - rho_t)/(rho_t - 1)| |a_m| < 1, taken in the worst case over t
/// (the conservative reading; membership needs the bound for every t).
inline CoeffSufficiency coeff_sufficient(const CoeffList& c, int t_samples = 720) {
    if (t_samples < 64) throw BadParams("coeff_sufficient: need t_samples >= 64");
    const double pi = std::acos(-1.0);
    CoeffSufficiency out{true, 0.0, 0.0};
    for (int i = 0; i < t_samples; ++i) {
        const double t = -pi + 2.0 * pi * i / t_samples;
        const Complex rho_t = criteria_detail::boundary_rho(t);
        double s = 0.0;
        for (std::size_t j = 0; j < c.tail.size(); ++j) {
            const double m = static_cast<double>(j) + 2.0;
            s += std::abs((Complex(m) - rho_t) / (rho_t - Complex(1.0))) * std::abs(c.tail[j]);
        }
        if (s > out.worst_sum) {
            out.worst_sum = s;
            out.worst_t = t;
        }
    }
    out.pass = out.worst_sum < 1.0;
    return out;
}

struct L2Check {
    bool pass;
    double lhs;
    double rhs;
};

/// Necessary condition: cosh(1)^2 - 1 >= sum_{k>=2} (k^2 - cosh(1)^2)|a_k|^2.
inline L2Check coeff_l2_check(const CoeffList& c) {
    const Constants k;
    L2Check out{};
    out.rhs = k.c1 * k.c1 - 1.0;
    out.lhs = 0.0;
    for (std::size_t j = 0; j < c.tail.size(); ++j) {
        const double m = static_cast<double>(j) + 2.0;
        out.lhs += (m * m - k.c1 * k.c1) * std::norm(c.tail[j]);
    }
    out.pass = out.lhs <= out.rhs;
    return out;
}

/// Fekete-Szego bound: |a_3 - mu a_2^2| <= (1/4) max{1, |mu - 7/12|}.
inline double fekete_szego_bound(Complex mu) {
    return 0.25 * std::max(1.0, std::abs(mu - Complex(7.0 / 12.0)));
}

}  // namespace srho
