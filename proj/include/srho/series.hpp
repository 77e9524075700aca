#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "srho/errors.hpp"
#include "srho/numerics.hpp"

namespace srho {

using Complex = std::complex<double>;

/// Truncated complex power series: coeffs[k] multiplies z^k.
struct TaylorSeries {
    std::vector<Complex> coeffs;

    TaylorSeries() = default;
    explicit TaylorSeries(int order) : coeffs(static_cast<std::size_t>(order) + 1, Complex(0.0)) {}

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    Complex at(int k) const {
        if (k < 0 || k > order()) return Complex(0.0);
        return coeffs[static_cast<std::size_t>(k)];
    }
    Complex& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }
    Complex operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

inline constexpr int kDefaultOrder = 32;

namespace series_detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace series_detail

inline TaylorSeries series_add(const TaylorSeries& a, const TaylorSeries& b) {
    TaylorSeries r(std::max(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a.at(k) + b.at(k);
    return r;
}

inline TaylorSeries series_scale(const TaylorSeries& a, Complex s) {
    TaylorSeries r = a;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

/// Truncated Cauchy product to order min(a.order + b.order, N).
inline TaylorSeries series_mul(const TaylorSeries& a, const TaylorSeries& b, int N) {
    TaylorSeries r(N);
    for (int k = 0; k <= N; ++k) {
        Complex s(0.0);
        for (int j = 0; j <= k; ++j) s += a.at(j) * b.at(k - j);
        r[k] = s;
    }
    return r;
}

/// Power-series division a/b; requires b.c0 != 0.
inline TaylorSeries series_div(const TaylorSeries& a, const TaylorSeries& b, int N) {
    if (std::abs(b.at(0)) == 0.0)
        throw BadParams("series_div: divisor has zero constant term");
    TaylorSeries r(N);
    for (int k = 0; k <= N; ++k) {
        Complex s = a.at(k);
        for (int j = 0; j < k; ++j) s -= r[j] * b.at(k - j);
        r[k] = s / b.at(0);
    }
    return r;
}

/// exp(s) for a series with zero constant term, via the derivative
/// recurrence g' = s'.g solved coefficient by coefficient.
inline TaylorSeries series_exp(const TaylorSeries& s) {
    if (std::abs(s.at(0)) != 0.0)
        throw NonzeroConstantTerm("series_exp: exponent must have zero constant term");
    const int N = s.order();
    TaylorSeries g(N);
    g[0] = Complex(1.0);
    for (int k = 1; k <= N; ++k) {
        Complex acc(0.0);
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * s.at(j) * g.at(k - j);
        g[k] = acc / static_cast<double>(k);
    }
    return g;
}

/// log(s) for a series with constant term 1.
inline TaylorSeries series_log(const TaylorSeries& s, int N) {
    if (std::abs(s.at(0) - Complex(1.0)) != 0.0)
        throw BadParams("series_log: constant term must be exactly 1");
    TaylorSeries l(N);
    for (int k = 1; k <= N; ++k) {
        Complex acc = static_cast<double>(k) * s.at(k);
        for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l.at(j) * s.at(k - j);
        l[k] = acc / static_cast<double>(k);
    }
    return l;
}

/// s^gamma (principal branch) for a series with constant term 1.
inline TaylorSeries series_pow(const TaylorSeries& s, Complex gamma, int N) {
    TaylorSeries l = series_log(s, N);
    return series_exp(series_scale(l, gamma));
}

inline TaylorSeries series_derivative(const TaylorSeries& s) {
    const int N = std::max(s.order() - 1, 0);
    TaylorSeries d(N);
    for (int k = 0; k <= N; ++k) d[k] = static_cast<double>(k + 1) * s.at(k + 1);
    return d;
}

/// Series of z.f'(z)/f(z) for normalized f (c0 = 0, c1 = 1).
inline TaylorSeries series_logderiv(const TaylorSeries& f, int N) {
    if (std::abs(f.at(0)) != 0.0 || std::abs(f.at(1) - Complex(1.0)) > 1e-14)
        throw BadParams("series_logderiv: expected a normalized series (c0 = 0, c1 = 1)");
    // z f'/f = f'(z) / (f(z)/z); both factors have constant term 1
    TaylorSeries num(N), den(N);
    for (int k = 0; k <= N; ++k) {
        num[k] = static_cast<double>(k + 1) * f.at(k + 1);
        den[k] = f.at(k + 1);
    }
    return series_div(num, den, N);
}

/// cosh(sigma*sqrt(z)) as a power series: c_k = sigma^(2k) / (2k)!.
inline TaylorSeries build_rho_series(double sigma, int N = kDefaultOrder) {
    const double pi_half = std::acos(-1.0) / 2.0;
    if (sigma == 0.0 || std::abs(sigma) > pi_half + 1e-15)
        throw SigmaOutOfRange("build_rho_series: sigma must lie in [-pi/2, pi/2] minus {0}");
    TaylorSeries r(N);
    double pw = 1.0;  // sigma^(2k)
    const double s2 = sigma * sigma;
    for (int k = 0; k <= N; ++k) {
        r[k] = pw / series_detail::factorial(2 * k);
        pw *= s2;
    }
    return r;
}

/// Extremal function phi_n = z * exp(S), S = sum_{k>=1} z^{k(n-1)} / (k(n-1)(2k)!),
/// obtained by term-wise integration of (rho(t^(n-1)) - 1)/t.
inline TaylorSeries build_phi_n(int n, int N = kDefaultOrder) {
    if (n < 2) throw BadN("build_phi_n: n must be >= 2");
    if (N < n) throw BadOrder("build_phi_n: order N must be >= n");
    TaylorSeries S(N - 1);
    for (int k = 1; k * (n - 1) <= N - 1; ++k) {
        const int p = k * (n - 1);
        S[p] = 1.0 / (static_cast<double>(p) * series_detail::factorial(2 * k));
    }
    const TaylorSeries g = series_exp(S);
    TaylorSeries phi(N);
    for (int k = 1; k <= N; ++k) phi[k] = g.at(k - 1);
    return phi;
}

/// Horner evaluation, restricted to the truncation-accuracy domain.
inline Complex series_eval(const TaylorSeries& s, Complex z) {
    if (std::abs(z) > 0.95)
        throw OutsideAccuracyDomain("series_eval: |z| must be <= 0.95");
    Complex acc(0.0);
    for (int k = s.order(); k >= 0; --k) acc = acc * z + s[k];
    return acc;
}

inline Complex series_eval_derivative(const TaylorSeries& s, Complex z) {
    if (std::abs(z) > 0.95)
        throw OutsideAccuracyDomain("series_eval_derivative: |z| must be <= 0.95");
    Complex acc(0.0);
    for (int k = s.order(); k >= 1; --k) acc = acc * z + static_cast<double>(k) * s[k];
    return acc;
}

/// (rho_sigma(t) - 1)/t for real t, with the removable singularity at 0
/// evaluated through the series limit (quadrature nodes may land near 0).
inline double rho_ratio(double sigma, double t) {
    const double s2 = sigma * sigma;
    if (std::abs(t) < 1e-4) {
        // sum_{k>=1} sigma^(2k) t^(k-1) / (2k)!; four terms reach ~1e-25
        double acc = 0.0, tp = 1.0, sp = s2;
        for (int k = 1; k <= 4; ++k) {
            acc += sp * tp / series_detail::factorial(2 * k);
            tp *= t;
            sp *= s2;
        }
        return acc;
    }
    if (t > 0.0) return (std::cosh(sigma * std::sqrt(t)) - 1.0) / t;
    return (std::cos(sigma * std::sqrt(-t)) - 1.0) / t;
}

struct GrowthBounds {
    double lower;   // -phi(-r): every f in the class covers this modulus
    double upper;   // phi(r)
    double dlower;  // phi'(-r)
    double dupper;  // phi'(r)
};

/// Growth and distortion bounds for the sigma = 1 class, computed by
/// quadrature of the integral representation (valid at r = 1 where the
/// series converges slowly). Uses z.phi'/phi = rho(z).
inline GrowthBounds growth_distortion(double r, const NumericConfig& cfg = {}) {
    if (!(r > 0.0) || r > 1.0) throw ROutOfRange("growth_distortion: need 0 < r <= 1");
    // exponent of the representation at +r and at -r (the latter via t -> -s)
    const double eplus = integrate([](double s) { return rho_ratio(1.0, s); }, 0.0, r, cfg);
    const double eminus = -integrate([](double s) { return rho_ratio(1.0, -s); }, 0.0, r, cfg);
    GrowthBounds g{};
    g.upper = r * std::exp(eplus);
    g.lower = r * std::exp(eminus);
    g.dupper = g.upper * std::cosh(std::sqrt(r)) / r;
    g.dlower = g.lower * std::cos(std::sqrt(r)) / r;
    return g;
}

}  // namespace srho
