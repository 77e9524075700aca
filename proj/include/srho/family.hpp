#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "srho/errors.hpp"
#include "srho/series.hpp"

namespace srho {

/// The named closed-form functions used as class members, witnesses and
/// extremal functions throughout the toolkit.
enum class Family {
    PhiN,              // z*exp(int (rho(t^(n-1))-1)/t dt)
    MonomialPerturb,   // z + a_n z^n
    KoebeType,         // z/(1 - A z)^2
    HalfKoebe,         // z/(1 - A z)
    ExpLine,           // z e^(A z)
    F1Witness,         // beta = 0:  z (1+z^n)^2/(1-z^n);  beta = 1/2: z (1-z^n)^2
    F1HalfWitness,     // z (1-z^n)^2
    F2Witness,         // z (1+z^n)/(1-z^n)^(1/n)
    F3Witness,         // z (1+z^n)^2/(1-z^n)^(2+(1+A)/n)
    JanowskiExtremal,  // z (1+B z^n)^((A-B)/(nB)),  z exp(A z^n/n) for B = 0
    MBetaExtremal,     // z/(1-z^n)^(2(1-beta)/n)
    Fun1,              // z exp(z/3 + z^2/36)
    Fun2,              // z exp(Si(z/3))
    TildeCubic,        // z + z^3/4
};

struct FamilySpec {
    Family family = Family::PhiN;
    int n = 2;
    double A = 0.0;
    double B = 0.0;
    double beta = 0.0;
    double a_n = 0.0;

    static FamilySpec phi_n(int n) { return {Family::PhiN, n}; }
    static FamilySpec monomial(int n, double a) {
        FamilySpec s{Family::MonomialPerturb, n};
        s.a_n = a;
        return s;
    }
    static FamilySpec koebe_type(double A) {
        FamilySpec s{Family::KoebeType};
        s.A = A;
        return s;
    }
    static FamilySpec half_koebe(double A) {
        FamilySpec s{Family::HalfKoebe};
        s.A = A;
        return s;
    }
    static FamilySpec exp_line(double A) {
        FamilySpec s{Family::ExpLine};
        s.A = A;
        return s;
    }
    static FamilySpec f1_witness(int n, double beta) {
        FamilySpec s{Family::F1Witness, n};
        s.beta = beta;
        return s;
    }
    static FamilySpec f1_half_witness(int n) { return {Family::F1HalfWitness, n}; }
    static FamilySpec f2_witness(int n) { return {Family::F2Witness, n}; }
    static FamilySpec f3_witness(int n, double A) {
        FamilySpec s{Family::F3Witness, n};
        s.A = A;
        return s;
    }
    static FamilySpec janowski(int n, double A, double B) {
        FamilySpec s{Family::JanowskiExtremal, n};
        s.A = A;
        s.B = B;
        return s;
    }
    static FamilySpec mbeta(int n, double beta) {
        FamilySpec s{Family::MBetaExtremal, n};
        s.beta = beta;
        return s;
    }
    static FamilySpec fun1() { return {Family::Fun1}; }
    static FamilySpec fun2() { return {Family::Fun2}; }
    static FamilySpec tilde_cubic() { return {Family::TildeCubic}; }

    void validate() const {
        switch (family) {
            case Family::PhiN:
                if (n < 2) throw ParamOutOfDomain("PhiN: n must be >= 2");
                break;
            case Family::MonomialPerturb:
                if (n < 2) throw ParamOutOfDomain("MonomialPerturb: n must be >= 2");
                break;
            case Family::F1Witness:
                if (n < 1 || (beta != 0.0 && beta != 0.5))
                    throw ParamOutOfDomain("F1Witness: n >= 1 and beta in {0, 1/2}");
                break;
            case Family::F1HalfWitness:
            case Family::F2Witness:
                if (n < 1) throw ParamOutOfDomain("witness: n must be >= 1");
                break;
            case Family::F3Witness:
                if (n < 1 || A < -1.0 || A > 1.0)
                    throw ParamOutOfDomain("F3Witness: n >= 1 and -1 <= A <= 1");
                break;
            case Family::JanowskiExtremal:
                if (n < 1 || !(B < A) || B < -1.0 || A > 1.0)
                    throw ParamOutOfDomain("JanowskiExtremal: need -1 <= B < A <= 1, n >= 1");
                break;
            case Family::MBetaExtremal:
                if (n < 1 || !(beta > 1.0)) throw ParamOutOfDomain("MBetaExtremal: beta must be > 1");
                break;
            default:
                break;
        }
    }
};

namespace family_detail {

// (1 + c z^n)^gamma as a truncated series, via the binomial recurrence.
inline TaylorSeries binomial_series(double c, int n, double gamma, int N) {
    TaylorSeries r(N);
    r[0] = Complex(1.0);
    double coeff = 1.0;
    for (int k = 1; k * n <= N; ++k) {
        coeff *= (gamma - (k - 1)) / k * c;
        r[k * n] = coeff;
    }
    return r;
}

// Si(z/3) = sum (-1)^k (z/3)^(2k+1) / ((2k+1)(2k+1)!)
inline TaylorSeries si_third_series(int N) {
    TaylorSeries s(N);
    for (int k = 0; 2 * k + 1 <= N; ++k) {
        const int p = 2 * k + 1;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        s[p] = sign / (p * series_detail::factorial(p) * std::pow(3.0, p));
    }
    return s;
}

inline TaylorSeries shift_up(const TaylorSeries& g, int N) {  // z * g(z)
    TaylorSeries f(N);
    for (int k = 1; k <= N; ++k) f[k] = g.at(k - 1);
    return f;
}

inline Complex zpow(Complex z, int n) {
    Complex r(1.0);
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

}  // namespace family_detail

/// Taylor coefficients of the named closed form, truncated at order N.
inline TaylorSeries family_series(const FamilySpec& spec, int N = kDefaultOrder) {
    spec.validate();
    using namespace family_detail;
    const int n = spec.n;
    switch (spec.family) {
        case Family::PhiN:
            return build_phi_n(n, N);
        case Family::MonomialPerturb: {
            TaylorSeries f(N);
            f[1] = Complex(1.0);
            if (n <= N) f[n] = spec.a_n;
            return f;
        }
        case Family::KoebeType: {
            TaylorSeries f(N);
            double pw = 1.0;
            for (int k = 1; k <= N; ++k) {
                f[k] = static_cast<double>(k) * pw;
                pw *= spec.A;
            }
            return f;
        }
        case Family::HalfKoebe: {
            TaylorSeries f(N);
            double pw = 1.0;
            for (int k = 1; k <= N; ++k) {
                f[k] = pw;
                pw *= spec.A;
            }
            return f;
        }
        case Family::ExpLine: {
            TaylorSeries f(N);
            double pw = 1.0;
            for (int k = 1; k <= N; ++k) {
                f[k] = pw / series_detail::factorial(k - 1);
                pw *= spec.A;
            }
            return f;
        }
        case Family::F1Witness:
            if (spec.beta == 0.5) return family_series(FamilySpec::f1_half_witness(n), N);
            return shift_up(series_mul(binomial_series(1.0, n, 2.0, N - 1),
                                       binomial_series(-1.0, n, -1.0, N - 1), N - 1),
                            N);
        case Family::F1HalfWitness:
            return shift_up(binomial_series(-1.0, n, 2.0, N - 1), N);
        case Family::F2Witness:
            return shift_up(series_mul(binomial_series(1.0, n, 1.0, N - 1),
                                       binomial_series(-1.0, n, -1.0 / n, N - 1), N - 1),
                            N);
        case Family::F3Witness:
            return shift_up(series_mul(binomial_series(1.0, n, 2.0, N - 1),
                                       binomial_series(-1.0, n, -2.0 - (1.0 + spec.A) / n, N - 1),
                                       N - 1),
                            N);
        case Family::JanowskiExtremal: {
            if (spec.B == 0.0) {
                TaylorSeries e(N - 1);
                if (n <= N - 1) e[n] = spec.A / n;
                return shift_up(series_exp(e), N);
            }
            return shift_up(
                binomial_series(spec.B, n, (spec.A - spec.B) / (n * spec.B), N - 1), N);
        }
        case Family::MBetaExtremal:
            return shift_up(binomial_series(-1.0, n, -2.0 * (1.0 - spec.beta) / n, N - 1), N);
        case Family::Fun1: {
            TaylorSeries e(N - 1);
            if (N - 1 >= 1) e[1] = 1.0 / 3.0;
            if (N - 1 >= 2) e[2] = 1.0 / 36.0;
            return shift_up(series_exp(e), N);
        }
        case Family::Fun2:
            return shift_up(series_exp(si_third_series(N - 1)), N);
        case Family::TildeCubic: {
            TaylorSeries f(N);
            f[1] = Complex(1.0);
            if (N >= 3) f[3] = Complex(0.25);
            return f;
        }
    }
    throw BadParams("family_series: unknown family");
}

/// Closed-form f(z).
inline Complex family_eval(const FamilySpec& spec, Complex z) {
    spec.validate();
    using namespace family_detail;
    const int n = spec.n;
    const Complex zn = zpow(z, n);
    switch (spec.family) {
        case Family::PhiN: {
            // quadrature of the defining representation along [0, |z|] * e^{i arg z}
            const Complex dir = (std::abs(z) == 0.0) ? Complex(1.0) : z / std::abs(z);
            const double rr = std::abs(z);
            const int m = spec.n - 1;
            const auto re_part = [&](double s) {
                const Complex t = s * dir;
                const Complex w = zpow(t, m);
                // (rho(w)-1)/t * dir, integrated over s in [0, rr]; near 0 the
                // removable singularity is evaluated through the series limit
                Complex val;
                if (std::abs(w) < 1e-4) {
                    val = zpow(t, m - 1) * (0.5 + w / 24.0 + w * w / 720.0) * dir;
                } else {
                    val = (std::cosh(std::sqrt(w)) - Complex(1.0)) / t * dir;
                }
                return val;
            };
            const auto fre = [&](double s) { return re_part(s).real(); };
            const auto fim = [&](double s) { return re_part(s).imag(); };
            const Complex expo(integrate(fre, 0.0, rr), integrate(fim, 0.0, rr));
            return z * std::exp(expo);
        }
        case Family::MonomialPerturb:
            return z + spec.a_n * zn;
        case Family::KoebeType: {
            const Complex d = Complex(1.0) - spec.A * z;
            return z / (d * d);
        }
        case Family::HalfKoebe:
            return z / (Complex(1.0) - spec.A * z);
        case Family::ExpLine:
            return z * std::exp(spec.A * z);
        case Family::F1Witness:
            if (spec.beta == 0.5) return family_eval(FamilySpec::f1_half_witness(n), z);
            return z * (Complex(1.0) + zn) * (Complex(1.0) + zn) / (Complex(1.0) - zn);
        case Family::F1HalfWitness:
            return z * (Complex(1.0) - zn) * (Complex(1.0) - zn);
        case Family::F2Witness:
            return z * (Complex(1.0) + zn) *
                   std::exp(-std::log(Complex(1.0) - zn) / static_cast<double>(n));
        case Family::F3Witness:
            return z * (Complex(1.0) + zn) * (Complex(1.0) + zn) *
                   std::exp(-(2.0 + (1.0 + spec.A) / n) * std::log(Complex(1.0) - zn));
        case Family::JanowskiExtremal:
            if (spec.B == 0.0) return z * std::exp(spec.A * zn / static_cast<double>(n));
            return z * std::exp((spec.A - spec.B) / (n * spec.B) *
                                std::log(Complex(1.0) + spec.B * zn));
        case Family::MBetaExtremal:
            return z * std::exp(-2.0 * (1.0 - spec.beta) / n * std::log(Complex(1.0) - zn));
        case Family::Fun1:
            return z * std::exp(z / 3.0 + z * z / 36.0);
        case Family::Fun2: {
            // Si(z/3) by quadrature of sin(t)/t along the ray
            const Complex w = z / 3.0;
            const Complex dir = (std::abs(w) == 0.0) ? Complex(1.0) : w / std::abs(w);
            const auto g = [&](double s) {
                const Complex t = s * dir;
                if (std::abs(t) < 1e-8) return dir;
                return std::sin(t) / t * dir;
            };
            const auto gre = [&](double s) { return g(s).real(); };
            const auto gim = [&](double s) { return g(s).imag(); };
            const Complex si(integrate(gre, 0.0, std::abs(w)), integrate(gim, 0.0, std::abs(w)));
            return z * std::exp(si);
        }
        case Family::TildeCubic:
            return z + z * z * z / 4.0;
    }
    throw BadParams("family_eval: unknown family");
}

/// Closed-form z f'(z)/f(z). These are the quantities whose region
/// membership decides subordination, so they are kept exact.
inline Complex family_qvalue(const FamilySpec& spec, Complex z) {
    spec.validate();
    using namespace family_detail;
    const int n = spec.n;
    const Complex one(1.0);
    const Complex zn = zpow(z, n);
    switch (spec.family) {
        case Family::PhiN:
            return std::cosh(std::sqrt(zpow(z, n - 1)));
        case Family::MonomialPerturb: {
            const Complex w = spec.a_n * zpow(z, n - 1);
            return (one + static_cast<double>(n) * w) / (one + w);
        }
        case Family::KoebeType:
            return (one + spec.A * z) / (one - spec.A * z);
        case Family::HalfKoebe:
            return one / (one - spec.A * z);
        case Family::ExpLine:
            return one + spec.A * z;
        case Family::F1Witness:
            if (spec.beta == 0.5) return family_qvalue(FamilySpec::f1_half_witness(n), z);
            return one + 2.0 * n * zn / (one + zn) + static_cast<double>(n) * zn / (one - zn);
        case Family::F1HalfWitness:
            return one - 2.0 * n * zn / (one - zn);
        case Family::F2Witness:
            return one + static_cast<double>(n) * zn / (one + zn) + zn / (one - zn);
        case Family::F3Witness:
            return one + 2.0 * n * zn / (one + zn) + (2.0 * n + 1.0 + spec.A) * zn / (one - zn);
        case Family::JanowskiExtremal:
            return (one + spec.A * zn) / (one + spec.B * zn);
        case Family::MBetaExtremal:
            return (one + (1.0 - 2.0 * spec.beta) * zn) / (one - zn);
        case Family::Fun1:
            return one + z / 3.0 + z * z / 18.0;
        case Family::Fun2:
            return one + std::sin(z / 3.0);
        case Family::TildeCubic:
            return (Complex(4.0) + 3.0 * z * z) / (Complex(4.0) + z * z);
    }
    throw BadParams("family_qvalue: unknown family");
}

inline std::string family_label(const FamilySpec& spec) {
    std::ostringstream os;
    switch (spec.family) {
        case Family::PhiN: os << "PhiN(n=" << spec.n << ")"; break;
        case Family::MonomialPerturb: os << "MonomialPerturb(n=" << spec.n << ",a=" << spec.a_n << ")"; break;
        case Family::KoebeType: os << "KoebeType(A=" << spec.A << ")"; break;
        case Family::HalfKoebe: os << "HalfKoebe(A=" << spec.A << ")"; break;
        case Family::ExpLine: os << "ExpLine(A=" << spec.A << ")"; break;
        case Family::F1Witness: os << "F1Witness(n=" << spec.n << ",beta=" << spec.beta << ")"; break;
        case Family::F1HalfWitness: os << "F1HalfWitness(n=" << spec.n << ")"; break;
        case Family::F2Witness: os << "F2Witness(n=" << spec.n << ")"; break;
        case Family::F3Witness: os << "F3Witness(n=" << spec.n << ",A=" << spec.A << ")"; break;
        case Family::JanowskiExtremal:
            os << "JanowskiExtremal(n=" << spec.n << ",A=" << spec.A << ",B=" << spec.B << ")";
            break;
        case Family::MBetaExtremal: os << "MBetaExtremal(n=" << spec.n << ",beta=" << spec.beta << ")"; break;
        case Family::Fun1: os << "Fun1"; break;
        case Family::Fun2: os << "Fun2"; break;
        case Family::TildeCubic: os << "TildeCubic"; break;
    }
    return os.str();
}

}  // namespace srho
