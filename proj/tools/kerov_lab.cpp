#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kerov/diagram.hpp"
#include "kerov/moments.hpp"
#include "kerov/report.hpp"
#include "kerov/shapes.hpp"
#include "kerov/simulate.hpp"
#include "kerov/transition.hpp"
#include "kerov/version.hpp"

namespace {

using namespace kerov;

Ensemble parse_ensemble(const std::string& s) {
    if (s == "wigner") return Ensemble::wigner;
    if (s == "wishart") return Ensemble::wishart;
    throw ConfigError("unknown ensemble: " + s + " (expected wigner or wishart)");
}

EntryDist parse_dist(const std::string& s) {
    if (s == "gaussian") return EntryDist::gaussian;
    if (s == "rademacher") return EntryDist::rademacher;
    if (s == "uniform") return EntryDist::uniform_scaled;
    throw ConfigError("unknown dist: " + s + " (expected gaussian, rademacher or uniform)");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw ConfigError("unknown format: " + s + " (expected csv or json)");
}

struct SimulateArgs {
    std::string ensemble = "wigner";
    std::string dist = "gaussian";
    std::string format = "csv";
    RunConfig config;
    bool alpha_given = false;
};

int cmd_simulate(SimulateArgs& a) {
    a.config.ensemble = parse_ensemble(a.ensemble);
    a.config.dist = parse_dist(a.dist);
    a.config.format = parse_format(a.format);
    if (a.config.ensemble == Ensemble::wishart && !a.alpha_given)
        throw ConfigError("wishart needs an explicit --alpha");
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult result = run_simulation(a.config, &std::cerr);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_output(a.config.out, render(a.config, result));
    std::cerr << "simulate: " << a.config.trials << " trials in " << ms << " ms\n";
    return 0;
}

struct ShapeArgs {
    std::string kind = "vkls";
    double alpha = 1.0;
    double from = 0.0;
    double to = 0.0;
    double step = 1e-2;
    bool from_given = false;
    bool to_given = false;
    bool alpha_given = false;
    std::string out = "-";
};

int cmd_shape(ShapeArgs& a) {
    LimitShape shape;
    if (a.kind == "vkls") {
        shape = LimitShape::vkls();
    } else if (a.kind == "wishart") {
        if (!a.alpha_given) throw ConfigError("wishart shape needs an explicit --alpha");
        shape = LimitShape::wishart(a.alpha);
    } else {
        throw ConfigError("unknown kind: " + a.kind + " (expected vkls or wishart)");
    }
    const auto [lo, hi] = shape.support_interval();
    if (!a.from_given) a.from = lo - 0.5;
    if (!a.to_given) a.to = hi + 0.5;
    if (!(a.from < a.to)) throw ConfigError("need from < to");
    if (!(a.step > 0.0)) throw ConfigError("need step > 0");

    std::vector<double> xs;
    for (std::size_t i = 0;; ++i) {
        const double x = a.from + double(i) * a.step;
        if (x >= a.to) break;
        xs.push_back(x);
    }
    xs.push_back(a.to);
    if (lo > a.from && lo < a.to) xs.push_back(lo);
    if (hi > a.from && hi < a.to) xs.push_back(hi);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::string text;
    text += "# kerov-lab v";
    text += version;
    text += " shape kind=" + a.kind;
    if (a.kind == "wishart") text += " alpha=" + fmt_double(a.alpha);
    text += " from=" + fmt_double(a.from) + " to=" + fmt_double(a.to) +
            " step=" + fmt_double(a.step);
    text += "\nx,w\n";
    for (double x : xs) text += fmt_double(x) + "," + fmt_double(shape.evaluate(x)) + "\n";
    write_output(a.out, text);
    return 0;
}

struct MomentsArgs {
    int k_max = 10;
    std::vector<double> alphas = {1.0, 2.25};
    std::string out = "-";
};

int cmd_moments(MomentsArgs& a) {
    if (a.k_max < 1) throw ConfigError("need k-max >= 1");
    if (a.k_max > 10) throw ConfigError("the enumeration column caps k-max at 10");
    for (double al : a.alphas)
        if (!(al >= 1.0)) throw AlphaOutOfRange(al);

    const auto beta_route = m_from_beta_derivative(a.k_max);
    const auto semicircle = semicircle_moments(a.k_max);
    const auto vkls_mu = p_to_moments(vkls_ptilde(a.k_max));
    const auto narayana = mp_moments_symbolic(a.k_max);
    PTildeSeqAlpha mp_p;
    std::vector<AlphaPoly> dyck;
    dyck.reserve(std::size_t(a.k_max) + 1);
    dyck.push_back(AlphaPoly::constant(1));
    for (int k = 1; k <= a.k_max; ++k) {
        dyck.push_back(wishart_moment_oracle(k));
        mp_p.values.push_back(AlphaPolyQ::from(dyck.back()));
    }
    const auto mp_mu = p_to_moments(mp_p);

    bool mismatch = false;
    std::ostringstream os;
    os << "# kerov-lab v" << version << " moments k_max=" << a.k_max << "\n";
    os << "k\twigner\tsemicircle_mu\tsc_flag\tm_k\tdual_flag\tmp_mu\tmp_flag\n";
    for (int k = 1; k <= a.k_max; ++k) {
        const std::size_t uk = std::size_t(k);
        const bool sc_ok = vkls_mu.values[uk] == semicircle.values[uk];
        const bool dual_ok = dyck[uk] == beta_route[uk];
        const bool mp_ok = mp_mu.values[uk] == narayana.values[uk];
        mismatch = mismatch || !sc_ok || !dual_ok || !mp_ok;
        os << k << '\t' << wigner_limit_moment(k).str() << '\t'
           << semicircle.values[uk].str() << '\t' << (sc_ok ? "EXACT-EQUAL" : "MISMATCH")
           << '\t' << dyck[uk].to_string() << '\t' << (dual_ok ? "EXACT-EQUAL" : "MISMATCH")
           << '\t' << narayana.values[uk].to_string() << '\t'
           << (mp_ok ? "EXACT-EQUAL" : "MISMATCH") << '\n';
    }
    for (double al : a.alphas) {
        const double sa = std::sqrt(al);
        const double z = 0.3 / ((sa + 1.0) * (sa + 1.0));
        double series = 0.0;
        for (int k = a.k_max; k >= 1; --k) series = (series + dyck[std::size_t(k)].eval(al)) * z;
        series += 1.0;
        const double residual = std::fabs(g_alpha_closed_form(z, al) - series);
        const double tail = 1000.0 * std::pow(0.3, a.k_max + 1);
        const bool g_ok = residual <= tail;
        mismatch = mismatch || !g_ok;
        os << "# G residual alpha=" << fmt_double(al) << " z=" << fmt_double(z) << ": "
           << fmt_double(residual) << " (tail bound " << fmt_double(tail) << ") "
           << (g_ok ? "OK" : "MISMATCH") << '\n';
    }
    write_output(a.out, os.str());
    if (mismatch) throw OracleMismatch("moments table has a MISMATCH entry");
    return 0;
}

struct DiagramArgs {
    std::string input;
    std::string out = "-";
    double tol = 1e-8;
};

std::vector<double> parse_row(const std::string& line, const char* what) {
    std::vector<double> v;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            const double x = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            v.push_back(x);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " entry: '" + tok + "'");
        }
    }
    return v;
}

int cmd_diagram(DiagramArgs& a) {
    std::string line1, line2;
    if (a.input == "-") {
        if (!std::getline(std::cin, line1)) throw ParseError("missing spectrum rows on stdin");
        std::getline(std::cin, line2);
    } else {
        std::ifstream f(a.input);
        if (!f) throw ParseError("cannot open input file: " + a.input);
        if (!std::getline(f, line1)) throw ParseError("missing first spectrum row");
        std::getline(f, line2);
    }
    std::vector<double> minima = parse_row(line1, "S spectrum");
    std::vector<double> maxima = parse_row(line2, "submatrix spectrum");
    if (minima.empty()) throw ParseError("first row must hold at least one eigenvalue");

    double radius = 0.0;
    for (double x : minima) radius = std::max(radius, std::fabs(x));
    for (double y : maxima) radius = std::max(radius, std::fabs(y));
    const InterlacingPair pair =
        validate_interlacing(std::move(minima), std::move(maxima), a.tol * radius);
    const RectDiagram d = build_diagram(pair);

    std::vector<double> xs;
    xs.insert(xs.end(), pair.minima.begin(), pair.minima.end());
    xs.insert(xs.end(), pair.maxima.begin(), pair.maxima.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() < 2) {
        xs.insert(xs.begin(), xs.front() - 1.0);
        xs.push_back(xs.back() + 1.0);
    }

    std::string text;
    text += "# kerov-lab v";
    text += version;
    text += " diagram center=" + fmt_double(d.center) + "\nx,w\n";
    for (double x : xs) text += fmt_double(x) + "," + fmt_double(d.evaluate(x)) + "\n";
    write_output(a.out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation lab for rectangular Young diagrams of random spectra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("kerov-lab v") + kerov::version);

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "sample an ensemble and measure limit-shape distance");
    s->add_option("--ensemble", sim.ensemble, "wigner or wishart")->capture_default_str();
    s->add_option("--n", sim.config.n, "matrix order N")->capture_default_str();
    auto* alpha_opt = s->add_option("--alpha", sim.config.alpha, "wishart aspect ratio M/N >= 1");
    s->add_option("--dist", sim.dist, "entry law: gaussian, rademacher or uniform")
        ->capture_default_str();
    s->add_option("--trials", sim.config.trials, "independent trials")->capture_default_str();
    s->add_option("--seed", sim.config.seed, "base RNG seed")->capture_default_str();
    s->add_option("--k-max", sim.config.k_max, "normalized moments p~_1..p~_k per record")
        ->capture_default_str();
    s->add_option("--grid-step", sim.config.grid_step, "sup-distance grid pitch")
        ->capture_default_str();
    s->add_option("--format", sim.format, "csv or json")->capture_default_str();
    s->add_option("--out", sim.config.out, "output file, - for stdout")->capture_default_str();
    s->add_option("--jobs", sim.config.jobs, "max concurrent trials")->capture_default_str();
    s->add_option("--tol", sim.config.tol, "relative interlacing slack")->capture_default_str();

    ShapeArgs shp;
    auto* sh = app.add_subcommand("shape", "tabulate a limit-shape curve");
    sh->add_option("--kind", shp.kind, "vkls or wishart")->capture_default_str();
    auto* shape_alpha = sh->add_option("--alpha", shp.alpha, "wishart aspect ratio M/N >= 1");
    auto* from_opt = sh->add_option("--from", shp.from, "window start (default: support - 0.5)");
    auto* to_opt = sh->add_option("--to", shp.to, "window end (default: support + 0.5)");
    sh->add_option("--step", shp.step, "grid pitch")->capture_default_str();
    sh->add_option("--out", shp.out, "output file, - for stdout")->capture_default_str();

    MomentsArgs mom;
    auto* m = app.add_subcommand("moments", "exact moment identities and G_alpha residuals");
    m->add_option("--k-max", mom.k_max, "table depth, at most 10")->capture_default_str();
    m->add_option("--alpha", mom.alphas, "alpha values for the G_alpha residual check")
        ->capture_default_str();
    m->add_option("--out", mom.out, "output file, - for stdout")->capture_default_str();

    DiagramArgs dia;
    auto* d = app.add_subcommand("diagram", "rectangular diagram from two spectrum rows");
    d->add_option("file", dia.input, "input file: spectrum of S, then of its submatrix")
        ->required();
    d->add_option("--tol", dia.tol, "interlacing slack per unit spectral radius")
        ->capture_default_str();
    d->add_option("--out", dia.out, "output file, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*s) {
            sim.alpha_given = alpha_opt->count() > 0;
            return cmd_simulate(sim);
        }
        if (*sh) {
            shp.alpha_given = shape_alpha->count() > 0;
            shp.from_given = from_opt->count() > 0;
            shp.to_given = to_opt->count() > 0;
            return cmd_shape(shp);
        }
        if (*m) return cmd_moments(mom);
        if (*d) return cmd_diagram(dia);
    } catch (const kerov::InterlacingViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const kerov::OracleMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const kerov::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
