// Acceptance runner: one PASS/FAIL line per criterion, exit 0 only if all pass.
//
// Thresholds marked "frozen" were calibrated once at the fixed seed below and
// then pinned; they are tighter than the generic caps they started from.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "kerov/diagram.hpp"
#include "kerov/linalg.hpp"
#include "kerov/moments.hpp"
#include "kerov/poly.hpp"
#include "kerov/randmat.hpp"
#include "kerov/report.hpp"
#include "kerov/shapes.hpp"
#include "kerov/simulate.hpp"
#include "kerov/transition.hpp"
#include "support/oracles.hpp"

namespace {

namespace fs = std::filesystem;
using namespace kerov;

std::string g_argv0;
int g_failures = 0;
std::vector<std::string> g_detail;

void note(std::string line) { g_detail.push_back(std::move(line)); }

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f ms", ms);
    return buf;
}

void criterion(int idx, const std::string& name, const std::function<bool()>& body,
               double budget_ms = 0.0) {
    g_detail.clear();
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_ms > 0.0 && ms > budget_ms) {
        note("runtime " + fmt_ms(ms) + " exceeds the " + fmt_ms(budget_ms) + " budget");
        ok = false;
    }
    std::printf("%s  %2d. %s (%s)\n", ok ? "PASS" : "FAIL", idx, name.c_str(), fmt_ms(ms).c_str());
    for (const auto& line : g_detail) std::printf("        %s\n", line.c_str());
    if (!error.empty()) std::printf("        threw: %s\n", error.c_str());
    if (!ok) ++g_failures;
    std::fflush(stdout);
}

double eval_poly(const AlphaPolyQ& p, double a) {
    double r = 0.0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) r = r * a + p.coeffs[i].convert_to<double>();
    return r;
}

// ---- shared Monte Carlo state (criteria 6-9 all read the same ladders) ----

struct Ladder {
    std::vector<int> sizes;
    std::vector<RunSummary> rungs;
    int trials = 0;
};

Ladder run_ladder(Ensemble ens, EntryDist dist, double alpha) {
    Ladder lad;
    lad.sizes = {100, 200, 400};
    RunConfig config;  // defaults: 20 trials, seed 42, k_max 4, grid_step 1e-3, tol 1e-8
    config.ensemble = ens;
    config.dist = dist;
    config.alpha = alpha;
    config.jobs = 8;
    for (int n : lad.sizes) {
        config.n = n;
        lad.rungs.push_back(run_simulation(config, nullptr).summary);
        lad.trials += config.trials;
    }
    return lad;
}

Ladder g_wigner;   // filled by criterion 6
Ladder g_wishart;  // filled by criterion 7

// ---- criterion bodies ----

bool c1_semicircle() {
    const auto p = vkls_ptilde(10);
    for (int k = 1; k <= 10; ++k)
        if (p.values[std::size_t(k) - 1] != Rational(wigner_limit_moment(k))) return false;
    const auto mu = p_to_moments(p);
    const long expected[] = {1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42};
    if (mu.values.size() != 11) return false;
    for (int k = 0; k <= 10; ++k)
        if (mu.values[std::size_t(k)] != Rational(expected[k])) return false;
    note("mu_0..mu_10 = 1,0,1,0,2,0,5,0,14,0,42 exactly (rational arithmetic)");
    return true;
}

bool c2_marchenko_pastur() {
    const auto narayana = mp_moments_symbolic(10);
    // pre-validate the Narayana oracle against the density quadrature
    double worst = 0.0;
    for (double a : {1.0, 2.25})
        for (int k = 1; k <= 10; ++k) {
            const double sym = eval_poly(narayana.values[std::size_t(k)], a);
            const double quad = mp_moment_quadrature(k, a);
            worst = std::max(worst, std::fabs(sym - quad) / std::max(1.0, std::fabs(sym)));
        }
    note("quadrature cross-check worst relative error " + fmt_double(worst) + " (bar 1e-7)");
    if (worst > 1e-7) return false;

    PTildeSeqAlpha p;
    for (int k = 1; k <= 10; ++k) p.values.push_back(AlphaPolyQ::from(wishart_moment_oracle(k)));
    const auto mu = p_to_moments(p);
    for (int k = 0; k <= 10; ++k)
        if (!(mu.values[std::size_t(k)] == narayana.values[std::size_t(k)])) return false;
    note("exp-transform of {m_k} equals Narayana polynomials exactly through k=10");
    return true;
}

bool c3_dual_route() {
    const auto beta = m_from_beta_derivative(10);
    for (int k = 1; k <= 10; ++k)
        if (!(beta[std::size_t(k)] == wishart_moment_oracle(k))) return false;
    if (wishart_moment_oracle(1).to_string() != "alpha") return false;
    if (wishart_moment_oracle(2).to_string() != "alpha^2 + 2*alpha") return false;
    note("Dyck enumeration equals beta-derivative route exactly; m_1 = " +
         wishart_moment_oracle(1).to_string() + ", m_2 = " + wishart_moment_oracle(2).to_string());
    return true;
}

bool c4_closed_form_g() {
    const auto m = m_from_beta_derivative(12);
    bool ok = true;
    for (double a : {1.0, 2.0, 2.25}) {
        const double z = 0.3 / ((std::sqrt(a) + 1) * (std::sqrt(a) + 1));
        double series = 0.0;
        for (int k = 12; k >= 1; --k) series = (series + m[std::size_t(k)].eval(a)) * z;
        series += 1.0;
        const double resid = std::fabs(g_alpha_closed_form(z, a) - series);
        note("alpha=" + fmt_double(a) + " z=" + fmt_double(z) + " residual " + fmt_double(resid) +
             " (bar 1e-8)");
        ok = ok && resid <= 1e-8;
    }
    if (!ok)
        note("truncation floor: the k=13 series term alone exceeds the bar at z = 0.3/(sqrt(a)+1)^2");
    return ok;
}

bool c5_shape_oracle() {
    double worst = 0.0;
    for (double a : {1.0, 1.5, 2.25, 4.0}) {
        const auto rec = reconstruct_from_density(a);
        const auto [lo, hi] = support(a);
        for (double x = lo; x <= hi; x += 1e-3)
            worst = std::max(worst, std::fabs(rec(x) - omega_alpha(x, a)));
        const double edge = std::max(std::fabs(omega_alpha(lo, a) - std::fabs(lo - a)),
                                     std::fabs(omega_alpha(hi, a) - std::fabs(hi - a)));
        if (edge > 1e-9) return false;
    }
    note("sup |reconstructed - closed form| = " + fmt_double(worst) + " (bar 1e-5)");
    const auto [lo1, hi1] = support(1.0);
    note("alpha=1 support [" + fmt_double(lo1) + ", " + fmt_double(hi1) +
         "], edge continuity <= 1e-9 at all eight endpoints");
    return worst <= 1e-5 && lo1 == 0.0 && hi1 == 4.0;
}

bool c6_wigner_ladder() {
    g_wigner = run_ladder(Ensemble::wigner, EntryDist::gaussian, 1.0);
    std::string line = "median sup-distance:";
    for (std::size_t i = 0; i < g_wigner.sizes.size(); ++i)
        line += " N=" + std::to_string(g_wigner.sizes[i]) + " -> " +
                fmt_double(g_wigner.rungs[i].sup_median);
    note(line);
    note("bar at N=400: 0.13 (frozen from seed-42 calibration; generic cap 0.25)");
    const auto& r = g_wigner.rungs;
    return r[0].sup_median >= r[1].sup_median && r[1].sup_median >= r[2].sup_median &&
           r[2].sup_median <= 0.13;
}

bool c7_wishart_ladder() {
    g_wishart = run_ladder(Ensemble::wishart, EntryDist::gaussian, 2.25);
    std::string line = "median sup-distance:";
    for (std::size_t i = 0; i < g_wishart.sizes.size(); ++i)
        line += " N=" + std::to_string(g_wishart.sizes[i]) + " -> " +
                fmt_double(g_wishart.rungs[i].sup_median);
    note(line);
    note("bar at N=400: 0.27 (frozen from seed-42 calibration; generic cap 0.5)");
    const auto& r = g_wishart.rungs;
    return r[0].sup_median >= r[1].sup_median && r[1].sup_median >= r[2].sup_median &&
           r[2].sup_median <= 0.27;
}

bool c8_moment_convergence() {
    if (g_wigner.rungs.empty()) return false;  // shares criterion 6's run
    const double gap100 = std::fabs(g_wigner.rungs[0].ptilde_norm_mean[3] - 6.0);
    const double gap400 = std::fabs(g_wigner.rungs[2].ptilde_norm_mean[3] - 6.0);
    const double p3_400 = std::fabs(g_wigner.rungs[2].ptilde_norm_mean[2]);
    note("|mean p~_4/N^2 - 6|: N=100 -> " + fmt_double(gap100) + ", N=400 -> " +
         fmt_double(gap400));
    note("|mean p~_3/N^(3/2)| at N=400: " + fmt_double(p3_400) + " (bar 0.5)");
    return gap400 < gap100 && p3_400 <= 0.5;
}

bool c9_interlacing_identities() {
    if (g_wigner.trials == 0 || g_wishart.trials == 0) return false;
    note(std::to_string(g_wigner.trials + g_wishart.trials) +
         " simulated trials validated interlacing at slack 1e-8 * spectral radius");
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto S = oracles::random_symmetric(20, 6021, std::uint64_t(i));
        const auto pair = interlacing_from_matrix(S);
        for (int k = 1; k <= 6; ++k) {
            const double direct = trace_power_difference(S, k);
            const double via_pair = tilde_p(pair, k);
            worst = std::max(worst,
                             std::fabs(via_pair - direct) / std::max(1.0, std::fabs(direct)));
        }
    }
    note("p~_k vs trace-power difference, worst relative gap " + fmt_double(worst) +
         " (bar 1e-6)");
    return worst <= 1e-6;
}

bool c10_eigensolver() {
    double worst_gap = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto S = oracles::random_symmetric(6, 90210, std::uint64_t(i));
        const auto fast = eigenvalues(S);
        const auto slow = oracles::eigenvalues_bisection(S);
        if (fast.values.size() != slow.size()) return false;
        for (std::size_t j = 0; j < slow.size(); ++j)
            worst_gap = std::max(worst_gap, std::fabs(fast.values[j] - slow[j]));
    }
    note("QL vs bisection oracle on 100 random 6x6: worst gap " + fmt_double(worst_gap) +
         " (bar 1e-10)");
    double worst_tr = 0.0, worst_fr = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto S = oracles::random_symmetric(50, 777, std::uint64_t(i));
        const auto ev = eigenvalues(S);
        double sum = 0.0, sum2 = 0.0;
        for (double v : ev.values) {
            sum += v;
            sum2 += v * v;
        }
        const double f2 = S.frobenius() * S.frobenius();
        worst_tr = std::max(worst_tr, std::fabs(sum - S.trace()) / (1.0 + std::fabs(S.trace())));
        worst_fr = std::max(worst_fr, std::fabs(sum2 - f2) / (1.0 + f2));
    }
    note("50 random 50x50: trace residual " + fmt_double(worst_tr) + " (bar 1e-11), Frobenius " +
         fmt_double(worst_fr) + " (bar 1e-12)");
    return worst_gap <= 1e-10 && worst_tr <= 1e-11 && worst_fr <= 1e-12;
}

std::string cli_binary() {
    if (const char* env = std::getenv("KEROV_LAB_BIN")) return env;
    return (fs::path(g_argv0).parent_path() / "kerov-lab").string();
}

std::string run_cli(const std::string& args, const fs::path& dir, int run_id) {
    const fs::path out = dir / ("out" + std::to_string(run_id));
    const std::string cmd =
        "\"" + cli_binary() + "\" " + args + " >" + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw Error("kerov-lab exited nonzero for: " + args);
    std::ifstream f(out, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool c11_reproducibility() {
    const fs::path dir = fs::temp_directory_path() / ("kerov-acc-" + std::to_string(getpid()));
    fs::create_directories(dir);
    bool ok = true;
    int id = 0;
    for (const char* fmt : {"csv", "json"}) {
        const std::string base =
            "simulate --n 40 --trials 4 --seed 9 --k-max 3 --format " + std::string(fmt);
        const std::string a = run_cli(base + " --jobs 1", dir, id++);
        const std::string b = run_cli(base + " --jobs 1", dir, id++);
        const std::string c = run_cli(base + " --jobs 8", dir, id++);
        const bool reruns = a == b, jobs = a == c;
        note(std::string(fmt) + ": rerun " + (reruns ? "byte-identical" : "DIFFERS") +
             ", --jobs 1 vs 8 " + (jobs ? "byte-identical" : "DIFFERS"));
        ok = ok && reruns && jobs && !a.empty();
    }
    fs::remove_all(dir);
    return ok;
}

void universality_report() {
    // reported, not gated: entry-law universality only holds in the limit
    RunConfig config;
    config.n = 400;
    config.dist = EntryDist::rademacher;
    config.jobs = 8;
    const double wig = run_simulation(config, nullptr).summary.sup_median;
    config.ensemble = Ensemble::wishart;
    config.alpha = 2.25;
    const double wis = run_simulation(config, nullptr).summary.sup_median;
    std::printf("INFO  universality spot check at N=400 (not gated):\n");
    std::printf("        wigner  median sup-distance: gaussian %s, rademacher %s\n",
                fmt_double(g_wigner.rungs[2].sup_median).c_str(), fmt_double(wig).c_str());
    std::printf("        wishart median sup-distance: gaussian %s, rademacher %s\n",
                fmt_double(g_wishart.rungs[2].sup_median).c_str(), fmt_double(wis).c_str());
}

}  // namespace

int main(int, char** argv) {
    g_argv0 = argv[0];
    std::printf("kerov-lab acceptance (seed 42 where randomized)\n");

    criterion(1, "semicircle transition moments, exact through k=10", c1_semicircle, 1000.0);
    criterion(2, "Marchenko-Pastur transition moments, exact polynomials through k=10",
              c2_marchenko_pastur, 5000.0);
    criterion(3, "Wishart moment polynomials agree across both derivations", c3_dual_route,
              10000.0);
    criterion(4, "closed-form G_alpha matches its moment series to 1e-8", c4_closed_form_g);
    criterion(5, "limit shapes rebuilt from their curvature densities", c5_shape_oracle);
    criterion(6, "Wigner diagrams converge to the VKLS curve", c6_wigner_ladder);
    criterion(7, "Wishart diagrams converge to the alpha=2.25 limit shape", c7_wishart_ladder);
    criterion(8, "normalized p~_3, p~_4 track the limit moments", c8_moment_convergence);
    criterion(9, "interlacing holds in simulation; p~_k equals the trace identity",
              c9_interlacing_identities);
    criterion(10, "eigensolver agrees with the bisection oracle and invariants", c10_eigensolver);
    criterion(11, "simulate output is byte-identical across reruns and job counts",
              c11_reproducibility);

    universality_report();

    if (g_failures == 0) {
        std::printf("all 11 criteria passed\n");
        return 0;
    }
    std::printf("%d of 11 criteria FAILED\n", g_failures);
    return 1;
}
