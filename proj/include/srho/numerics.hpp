#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <utility>

#include "srho/errors.hpp"

namespace srho {

/// Tolerances and sampling density shared by every solver in the toolkit.
/// abs_tol governs root residuals, bracket widths and quadrature error;
/// rel_tol governs the extremization refinement stop.
struct NumericConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_iter = 200;
    int grid_n = 2048;  // sampling density for extremization / sign scans

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1 || grid_n < 16)
            throw BadConfig("NumericConfig: need abs_tol,rel_tol > 0, max_iter >= 1, grid_n >= 16");
    }
};

/// Root bracket. For root use the function must change sign across it.
struct Bracket {
    double lo;
    double hi;
};

struct Extremum {
    double arg;
    double value;
};

using RealFn = std::function<double(double)>;

/// Bracketed hybrid root finder (inverse-quadratic / secant steps with a
/// guaranteed bisection fallback, Brent's scheme). Deterministic.
///
/// Returns x in [b.lo, b.hi] with |f(x)| <= cfg.abs_tol or bracket width
/// below tolerance. Throws NoSignChange when f(lo)*f(hi) > 0.
inline double find_root(const RealFn& f, Bracket br, const NumericConfig& cfg = {}) {
    cfg.validate();
    if (!(br.lo < br.hi)) throw InvalidInterval("find_root: lo must be < hi");

    double a = br.lo, b = br.hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw NoSignChange("find_root: f has the same sign at both bracket ends");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * cfg.abs_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || std::abs(fb) <= cfg.abs_tol) return b;

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // attempt secant / inverse quadratic interpolation
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;  // interpolation rejected, bisect
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw NoConvergence("find_root: max_iter exceeded");
}

/// Leftmost sign-change bracket of f over [lo, hi], scanned with cfg.grid_n
/// points. This is the "least positive root" discovery step.
inline Bracket scan_bracket(const RealFn& f, double lo, double hi, const NumericConfig& cfg = {}) {
    cfg.validate();
    if (!(lo < hi)) throw InvalidInterval("scan_bracket: lo must be < hi");
    const int n = cfg.grid_n;
    double x0 = lo, f0 = f(x0);
    for (int i = 1; i < n; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        const double f1 = f(x1);
        if (f0 == 0.0) return {x0, x1};
        if (f0 * f1 <= 0.0) return {x0, x1};
        x0 = x1;
        f0 = f1;
    }
    throw NoSignChange("scan_bracket: no sign change on the scanned interval");
}

/// Least positive root of f on (lo, hi): leftmost sign change + polish.
inline double find_least_root(const RealFn& f, double lo, double hi, const NumericConfig& cfg = {}) {
    return find_root(f, scan_bracket(f, lo, hi, cfg), cfg);
}

/// Coarse grid scan (leftmost argmax on ties) followed by golden-section
/// refinement around the best grid cell.
inline Extremum maximize_on_interval(const RealFn& f, double lo, double hi,
                                     const NumericConfig& cfg = {}) {
    cfg.validate();
    if (!(lo < hi)) throw InvalidInterval("maximize_on_interval: lo must be < hi");

    const int n = cfg.grid_n;
    const double h = (hi - lo) / (n - 1);
    int best = 0;
    double fbest = f(lo);
    for (int i = 1; i < n; ++i) {
        const double fx = f(lo + i * h);
        if (fx > fbest) {  // strict: ties keep the leftmost grid point
            best = i;
            fbest = fx;
        }
    }
    double a = lo + std::max(best - 1, 0) * h;
    double b = lo + std::min(best + 1, n - 1) * h;

    // golden-section; on ties keep the left subinterval so the result is
    // deterministic and leftmost-biased
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double stop = std::max(cfg.abs_tol, cfg.rel_tol * std::max(std::abs(lo), std::abs(hi)));
    for (int iter = 0; iter < cfg.max_iter && (b - a) > stop; ++iter) {
        const double x1 = b - invphi * (b - a);
        const double x2 = a + invphi * (b - a);
        if (f(x1) >= f(x2))
            b = x2;
        else
            a = x1;
    }
    const double xr = 0.5 * (a + b);
    const double fr = f(xr);
    if (fr > fbest) return {xr, fr};
    return {lo + best * h, fbest};
}

inline Extremum minimize_on_interval(const RealFn& f, double lo, double hi,
                                     const NumericConfig& cfg = {}) {
    const Extremum e = maximize_on_interval([&f](double x) { return -f(x); }, lo, hi, cfg);
    return {e.arg, -e.value};
}

namespace detail {

inline double adaptive_simpson(const RealFn& f, double a, double b, double fa, double fm, double fb,
                               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0) throw NoConvergence("integrate: max refinement depth reached");
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive composite Simpson quadrature. Absolute error <= 10 * cfg.abs_tol
/// on smooth integrands; integrands with removable singularities must be
/// regularized by the caller (evaluate the series limit near the point).
inline double integrate(const RealFn& f, double a, double b, const NumericConfig& cfg = {}) {
    cfg.validate();
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, cfg.abs_tol, 48);
}

}  // namespace srho
