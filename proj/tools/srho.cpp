// Command-line surface of the toolkit: region constants, boundary and
// figure data, radius constants, membership checks, sampling verification
// and the acceptance suite.
//
// Exit codes: 0 success / verification pass, 1 verification fail, 2 usage.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "srho/criteria.hpp"
#include "srho/family.hpp"
#include "srho/jsonio.hpp"
#include "srho/radii.hpp"
#include "srho/region.hpp"
#include "srho/series.hpp"
#include "srho/suite.hpp"
#include "srho/verify.hpp"

namespace {

using namespace srho;

struct Options {
    double sigma = 1.0;
    double c = 1.0;
    double zeta = std::cos(1.0);
    double alpha = 0.0;
    double beta = 1.2;
    double A = 0.5;
    double B = 0.0;
    int n = 1;
    double kappa = 0.5;
    std::string klass;
    std::string family;
    double param = 0.0;
    std::string out;
    int samples = 256;
    double tol = 1e-12;
};

NumericConfig make_config(const Options& o) {
    NumericConfig cfg;
    cfg.abs_tol = o.tol;
    if (const char* env = std::getenv("SRHO_GRID_N")) {
        const int g = std::atoi(env);
        if (g >= 16) cfg.grid_n = g;
    }
    return cfg;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw BadParams("cannot open output file: " + o.out);
    f << text;
}

int cmd_constants(const Options& o) {
    const NumericConfig cfg = make_config(o);
    const Sigma sigma(o.sigma);
    const Constants k;
    JsonObject j;
    j.field("schema", 1);
    j.field("sigma", sigma.value());
    j.field("c0", k.c0);
    j.field("c1", k.c1);

    const ArgBound ab = max_argument(sigma, cfg);
    j.field("m", ab.m);
    j.field("t2", ab.t_star);
    j.field("beta_ss", ab.m / (std::acos(-1.0) / 2.0));

    const ImagExtent ie = imag_extent(sigma, cfg);
    j.field("l", ie.l);
    j.field("t0", ie.t0);

    j.raw("thresholds", to_json(inclusion_thresholds(sigma)));

    if (std::abs(sigma.value() - 1.0) < 1e-15) {
        const ParabolicBound pb = st_p_gamma(cfg);
        j.field("gamma0", pb.gamma0);
        j.field("tau_tilde", pb.tau_tilde);
        const GrowthBounds g = growth_distortion(1.0, cfg);
        j.field("growth_lower", g.lower);
        j.field("growth_upper", g.upper);
        j.field("distortion_lower", g.dlower);
        j.field("distortion_upper", g.dupper);
        // reference decimals as printed in the source material (the two
        // beta values disagree in one digit; both are reported)
        JsonObject paper;
        paper.field("m", 0.506053);
        paper.field("t2", 1.91672);
        paper.field("beta_lemma", 0.322163);
        paper.field("beta_corollary", 0.3222163);
        paper.field("gamma0", 0.0654238);
        paper.field("tau_tilde", 0.832934);
        paper.field("growth_lower", 0.619);
        j.raw("paper", paper.str());
    }
    emit(o, j.str() + "\n");
    return 0;
}

int cmd_boundary(const Options& o) {
    const Sigma sigma(o.sigma);
    std::ostringstream os;
    write_boundary_csv(os, sigma, o.samples);
    emit(o, os.str());
    return 0;
}

int cmd_thresholds(const Options& o) {
    const Sigma sigma(o.sigma);
    JsonObject j;
    j.field("schema", 1);
    j.field("sigma", sigma.value());
    j.raw("thresholds", to_json(inclusion_thresholds(sigma)));
    emit(o, j.str() + "\n");
    return 0;
}

RadiusReport radius_by_class(const Options& o) {
    const NumericConfig cfg = make_config(o);
    if (o.klass == "starlike-order") return starlike_order_radius(o.zeta);
    if (o.klass == "mbeta") return mbeta_radius(o.beta);
    if (o.klass == "convexity") return convexity_radius(o.alpha, cfg);
    if (o.klass == "janowski") return janowski_radius({o.A, o.B, o.n});
    if (o.klass == "mn-beta") return mn_beta_radius(o.beta, o.n);
    if (o.klass == "f1-0") return ratio_class_radius(RatioClass::F1_0, o.n);
    if (o.klass == "f1-half") return ratio_class_radius(RatioClass::F1_Half, o.n);
    if (o.klass == "f2") return ratio_class_radius(RatioClass::F2, o.n);
    if (o.klass == "f3") return f3_radius(o.A, o.n, cfg);
    throw BadParams("unknown radius class: " + o.klass);
}

int cmd_radius(const Options& o) {
    JsonObject j;
    j.field("schema", 1);
    j.raw("report", to_json(radius_by_class(o)));
    emit(o, j.str() + "\n");
    return 0;
}

FamilySpec family_by_name(const Options& o) {
    const std::string& f = o.family;
    if (f == "phi") return FamilySpec::phi_n(std::max(o.n, 2));
    if (f == "monomial") return FamilySpec::monomial(o.n, o.param);
    if (f == "koebe-type") return FamilySpec::koebe_type(o.param);
    if (f == "half-koebe") return FamilySpec::half_koebe(o.param);
    if (f == "exp-line") return FamilySpec::exp_line(o.param);
    if (f == "fun1") return FamilySpec::fun1();
    if (f == "fun2") return FamilySpec::fun2();
    if (f == "tilde-cubic") return FamilySpec::tilde_cubic();
    if (f == "janowski-extremal") return FamilySpec::janowski(o.n, o.A, o.B);
    if (f == "mbeta-extremal") return FamilySpec::mbeta(o.n, o.beta);
    if (f == "f1-witness") return FamilySpec::f1_witness(o.n, o.beta);
    if (f == "f1-half-witness") return FamilySpec::f1_half_witness(o.n);
    if (f == "f2-witness") return FamilySpec::f2_witness(o.n);
    if (f == "f3-witness") return FamilySpec::f3_witness(o.n, o.A);
    throw BadParams("unknown family: " + f);
}

int cmd_check(const Options& o) {
    // membership battery for one closed-form family member: threshold
    // formula, coefficient sufficiency, convolution non-vanishing and the
    // subordination sampling oracle
    const FamilySpec spec = family_by_name(o);
    std::optional<double> threshold;
    if (spec.family == Family::MonomialPerturb)
        threshold = family_threshold(ThresholdFamily::MonomialPerturb, spec.n);
    else if (spec.family == Family::KoebeType)
        threshold = family_threshold(ThresholdFamily::KoebeType);
    else if (spec.family == Family::HalfKoebe)
        threshold = family_threshold(ThresholdFamily::HalfKoebe);
    else if (spec.family == Family::ExpLine)
        threshold = family_threshold(ThresholdFamily::ExpLine);

    const TaylorSeries series = family_series(spec, kDefaultOrder);
    const CoeffList coeffs = CoeffList::from_series(series);
    const CoeffSufficiency cs = coeff_sufficient(coeffs);
    const L2Check l2 = coeff_l2_check(coeffs);
    const VerificationReport conv = convolution_nonvanishing(coeffs, 180, 64);
    SamplingPlan plan;
    plan.angles = std::max(64, o.samples);
    const VerificationReport sub = verify_subordination(spec, Sigma(o.sigma), plan);

    JsonObject j;
    j.field("schema", 1);
    j.field("family", family_label(spec));
    if (threshold) {
        j.field("threshold", *threshold);
        j.field("param", o.param);
        j.field("within_threshold", std::abs(o.param) <= *threshold);
    }
    JsonObject cj;
    cj.field("pass", cs.pass);
    cj.field("worst_sum", cs.worst_sum);
    cj.field("worst_t", cs.worst_t);
    j.raw("coeff_sufficient", cj.str());
    JsonObject lj;
    lj.field("pass", l2.pass);
    lj.field("lhs", l2.lhs);
    lj.field("rhs", l2.rhs);
    j.raw("coeff_l2", lj.str());
    j.raw("convolution", to_json(conv));
    j.raw("subordination", to_json(sub));
    j.raw("coeffs", to_json(series));
    emit(o, j.str() + "\n");
    return sub.pass ? 0 : 1;
}

int cmd_verify(const Options& o) {
    const Sigma sigma(o.sigma);
    SamplingPlan plan;
    plan.angles = std::max(64, o.samples);

    VerificationReport rep;
    std::string what;
    if (!o.klass.empty()) {
        // sharpness of a radius report
        rep = sharpness_probe(radius_by_class(o), plan);
        what = "sharpness:" + o.klass;
    } else if (!o.family.empty() && o.family.rfind("inner:", 0) == 0) {
        const std::string inner = o.family.substr(6);
        InnerRegion region = InnerRegion::disc(Complex(o.c, 0.0), o.param);
        if (inner == "disc")
            region = InnerRegion::disc(Complex(o.c, 0.0), o.param);
        else if (inner == "janowski")
            region = InnerRegion::janowski(o.A, o.B);
        else if (inner == "sqrt-kappa")
            region = InnerRegion::sqrt_kappa(o.kappa);
        else if (inner == "ellipse")
            region = InnerRegion::ellipse(o.param);
        else if (inner == "hpl")
            region = InnerRegion::hpl(o.param);
        else if (inner == "limacon")
            region = InnerRegion::limacon(o.param);
        else
            throw BadParams("unknown inner region: " + inner);
        rep = verify_region_inclusion(region, sigma, plan);
        what = "inclusion:" + inner;
    } else if (!o.family.empty()) {
        rep = verify_subordination(family_by_name(o), sigma, plan);
        what = "subordination:" + o.family;
    } else {
        throw BadParams("verify: give --class (sharpness), --family (subordination) or --family inner:<region>");
    }

    JsonObject j;
    j.field("schema", 1);
    j.field("what", what);
    j.raw("report", to_json(rep));
    emit(o, j.str() + "\n");
    return rep.pass ? 0 : 1;
}

std::string svg_polyline(const std::vector<std::pair<double, double>>& pts, double xmin,
                         double xmax, double ymin, double ymax) {
    const double w = 640.0, h = 480.0;
    std::ostringstream os;
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& [x, y] : pts) {
        const double px = (x - xmin) / (xmax - xmin) * w;
        const double py = h - (y - ymin) / (ymax - ymin) * h;
        os << fmt17(px) << "," << fmt17(py) << " ";
    }
    os << "\"/>";
    return os.str();
}

int cmd_figure(const Options& o) {
    const Sigma sigma(o.sigma);
    const double pi = std::acos(-1.0);
    const bool svg = o.out.size() > 4 && o.out.substr(o.out.size() - 4) == ".svg";
    std::ostringstream os;

    if (o.klass == "region") {
        if (svg) {
            std::vector<std::pair<double, double>> pts;
            double xmin = 1e300, xmax = -1e300, ymax = 0.0;
            for (int i = 0; i <= o.samples; ++i) {
                const BoundaryPoint p = boundary_point(sigma, -pi + 2.0 * pi * i / o.samples);
                pts.emplace_back(p.x, p.y);
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                ymax = std::max(ymax, std::abs(p.y));
            }
            os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\">"
               << svg_polyline(pts, xmin - 0.05, xmax + 0.05, -ymax - 0.05, ymax + 0.05)
               << "</svg>\n";
        } else {
            write_boundary_csv(os, sigma, o.samples);
        }
    } else if (o.klass == "gc") {
        // squared-distance profiles G_c(tau) behind the inscribed-disc lemma
        const std::vector<double> cs = {0.6, 1.04, 1.042, 1.5};
        os << "tau";
        for (double c : cs) os << ",G_c" << c;
        os << "\n";
        for (int i = 0; i <= o.samples; ++i) {
            const double tau = (pi / 2.0) * i / o.samples;
            os << fmt17(tau);
            for (double c : cs) os << "," << fmt17(distance_sq(sigma, c, tau));
            os << "\n";
        }
    } else if (o.klass == "inclusions") {
        const Constants k;
        os << "curve,t,x,y\n";
        const auto row = [&os](const std::string& name, double t, double x, double y) {
            os << name << "," << fmt17(t) << "," << fmt17(x) << "," << fmt17(y) << "\n";
        };
        for (int i = 0; i <= o.samples; ++i) {
            const double t = -pi + 2.0 * pi * i / o.samples;
            const BoundaryPoint p = boundary_point(sigma, t);
            row("rho_boundary", t, p.x, p.y);
        }
        const ArgBound ab = max_argument(sigma);
        const ImagExtent ie = imag_extent(sigma);
        row("re_eq_c0", 0.0, k.c0, -ie.l);
        row("re_eq_c0", 1.0, k.c0, ie.l);
        row("re_eq_c1", 0.0, k.c1, -ie.l);
        row("re_eq_c1", 1.0, k.c1, ie.l);
        row("arg_ray", 0.0, 0.0, 0.0);
        row("arg_ray", 1.0, 2.0 * std::cos(ab.m), 2.0 * std::sin(ab.m));
        row("arg_ray_conj", 0.0, 0.0, 0.0);
        row("arg_ray_conj", 1.0, 2.0 * std::cos(ab.m), -2.0 * std::sin(ab.m));
        for (int i = 0; i <= o.samples; ++i) {
            const double t = -pi + 2.0 * pi * i / o.samples;
            const Complex u = std::sqrt(Complex(1.0) + (1.0 - k.c0 * k.c0) * std::polar(1.0, t));
            row("sqrt_kappa", t, u.real(), u.imag());
        }
        const double kk = k.c1 / (k.c1 - 1.0), k2 = kk * kk;
        for (int i = 0; i <= o.samples; ++i) {
            const double t = -pi + 2.0 * pi * i / o.samples;
            row("ellipse_k", t, k2 / (k2 - 1.0) + kk / (k2 - 1.0) * std::cos(t),
                std::sin(t) / std::sqrt(k2 - 1.0));
        }
        const double g0 = st_p_gamma().gamma0;
        for (int i = 0; i <= o.samples; ++i) {
            const double y = -0.8 + 1.6 * i / o.samples;  // parabola y^2 = 4 gamma0 x
            row("st_p_parabola", y, y * y / (4.0 * g0), y);
        }
        const double s0 = std::log(1.0 / k.c0) / std::log(2.0);
        for (int i = 1; i < o.samples; ++i) {
            const double t = -pi + 2.0 * pi * i / o.samples;
            const Complex u = std::exp(-s0 * std::log(Complex(1.0) - std::polar(1.0, t)));
            if (std::abs(u) < 10.0) row("hpl_s0", t, u.real(), u.imag());
        }
    } else {
        throw BadParams("figure: --name must be region, gc or inclusions (use --class)");
    }
    emit(o, os.str());
    return 0;
}

int cmd_suite(const Options& o) {
    std::ostringstream os;
    const bool ok = run_acceptance(os);
    emit(o, os.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for the starlike class attached to cosh(sigma sqrt z)"};
    app.require_subcommand(1);

    Options o;
    const auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--sigma", o.sigma, "region parameter in [-pi/2, pi/2] minus {0}");
        sub->add_option("--c", o.c, "real disc center");
        sub->add_option("--zeta", o.zeta, "starlike order");
        sub->add_option("--alpha", o.alpha, "convexity order");
        sub->add_option("--beta", o.beta, "M(beta) / M_n(beta) parameter");
        sub->add_option("--A", o.A, "Janowski A");
        sub->add_option("--B", o.B, "Janowski B");
        sub->add_option("--n", o.n, "index n of the class A_n");
        sub->add_option("--kappa", o.kappa, "sqrt(1 + kappa z) parameter");
        sub->add_option("--class", o.klass, "radius class / figure name");
        sub->add_option("--name", o.klass, "figure name (alias of --class)");
        sub->add_option("--family", o.family, "function family");
        sub->add_option("--param", o.param, "family or region parameter");
        sub->add_option("--out", o.out, "output path (default stdout)");
        sub->add_option("--samples", o.samples, "sample count");
        sub->add_option("--tol", o.tol, "absolute tolerance");
    };

    CLI::App* constants = app.add_subcommand("constants", "region constants and thresholds");
    CLI::App* boundary = app.add_subcommand("boundary", "boundary curve CSV");
    CLI::App* radius = app.add_subcommand("radius", "radius constant for a class");
    CLI::App* thresholds = app.add_subcommand("thresholds", "inclusion thresholds");
    CLI::App* check = app.add_subcommand("check", "membership battery for a family member");
    CLI::App* verify = app.add_subcommand("verify", "sampling verification oracles");
    CLI::App* figure = app.add_subcommand("figure", "figure data (CSV / minimal SVG)");
    CLI::App* suite = app.add_subcommand("suite", "run the acceptance battery");
    for (CLI::App* sub : {constants, boundary, radius, thresholds, check, verify, figure, suite})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (constants->parsed()) return cmd_constants(o);
        if (boundary->parsed()) return cmd_boundary(o);
        if (radius->parsed()) return cmd_radius(o);
        if (thresholds->parsed()) return cmd_thresholds(o);
        if (check->parsed()) return cmd_check(o);
        if (verify->parsed()) return cmd_verify(o);
        if (figure->parsed()) return cmd_figure(o);
        if (suite->parsed()) return cmd_suite(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
