#include "kerov/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <ostream>

#include <omp.h>

#include "kerov/diagram.hpp"
#include "kerov/linalg.hpp"
#include "kerov/shapes.hpp"

namespace kerov {

const char* to_string(Ensemble e) { return e == Ensemble::wigner ? "wigner" : "wishart"; }
const char* to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

void validate_config(const RunConfig& config) {
    if (config.n < 1) throw ConfigError("n must be >= 1");
    if (config.ensemble == Ensemble::wishart && !(config.alpha >= 1.0))
        throw ConfigError("wishart runs need alpha >= 1");
    if (config.trials < 1) throw ConfigError("trials must be >= 1");
    if (config.k_max < 1) throw ConfigError("k-max must be >= 1");
    if (config.k_max > 30) throw ConfigError("k-max must be <= 30");
    if (!(config.grid_step > 0.0)) throw ConfigError("grid-step must be positive");
    if (config.jobs < 1) throw ConfigError("jobs must be >= 1");
    if (!(config.tol >= 0.0)) throw ConfigError("tol must be >= 0");
    if (config.ensemble == Ensemble::wigner && config.n < 2)
        throw ConfigError("wigner runs need n >= 2 (the principal submatrix must exist)");
    if (config.ensemble == Ensemble::wishart && config.n < 2)
        throw ConfigError("wishart runs need n >= 2 (the principal submatrix must exist)");
}

namespace {

TrialRecord run_one_trial(const RunConfig& config, const LimitShape& shape, double window_lo,
                          double window_hi, int trial, int inner_jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    const RngSpec rng{config.seed, std::uint64_t(trial)};
    const SymMatrix S = (config.ensemble == Ensemble::wigner)
                            ? sample_wigner(config.n, config.dist, rng)
                            : sample_wishart(config.n, config.alpha, config.dist, rng, inner_jobs);

    InterlacingPair pair;
    try {
        pair = interlacing_from_matrix(S, config.tol, inner_jobs);
    } catch (const NoConvergence& e) {
        throw NoConvergence(e.row, trial);
    }
    const RectDiagram diagram = build_diagram(pair);

    const double scale = (config.ensemble == Ensemble::wigner) ? std::sqrt(double(config.n))
                                                               : double(config.n);
    const ContinualDiagram rescaled = rescale(as_continual(diagram), scale);

    TrialRecord rec;
    rec.trial = trial;
    rec.sup_distance = sup_distance_window(rescaled, shape.to_continual(), config.grid_step,
                                           window_lo, window_hi, inner_jobs);
    rec.center_norm = diagram.center / scale;
    rec.ptilde_norm.reserve(std::size_t(config.k_max));
    for (int k = 1; k <= config.k_max; ++k)
        rec.ptilde_norm.push_back(tilde_p(pair, k) / ipow(scale, k));
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rec;
}

RunSummary summarize(const std::vector<TrialRecord>& records, int k_max) {
    RunSummary s;
    std::vector<double> sups;
    sups.reserve(records.size());
    for (const auto& r : records) sups.push_back(r.sup_distance);
    std::sort(sups.begin(), sups.end());
    const std::size_t n = sups.size();
    s.sup_median = (n % 2 == 1) ? sups[n / 2] : 0.5 * (sups[n / 2 - 1] + sups[n / 2]);
    s.sup_min = sups.front();
    s.sup_max = sups.back();
    double acc = 0.0;
    for (double v : sups) acc += v;
    s.sup_mean = acc / double(n);
    acc = 0.0;
    for (const auto& r : records) acc += r.center_norm;
    s.center_norm_mean = acc / double(n);
    s.ptilde_norm_mean.assign(std::size_t(k_max), 0.0);
    for (const auto& r : records)
        for (std::size_t k = 0; k < r.ptilde_norm.size(); ++k)
            s.ptilde_norm_mean[k] += r.ptilde_norm[k];
    for (auto& v : s.ptilde_norm_mean) v /= double(n);
    return s;
}

}  // namespace

RunResult run_simulation(const RunConfig& config, std::ostream* progress) {
    validate_config(config);

    const LimitShape shape = (config.ensemble == Ensemble::wigner)
                                 ? LimitShape::vkls()
                                 : LimitShape::wishart(config.alpha);
    const auto [slo, shi] = shape.support_interval();
    const double window_lo = slo - 0.5;
    const double window_hi = shi + 0.5;

    RunResult result;
    result.records.resize(std::size_t(config.trials));
    std::vector<std::exception_ptr> failures(std::size_t(config.trials));

    if (config.jobs > 1 && config.trials > 1) {
        // parallel across trials, serial inside each: per-trial arithmetic is a
        // fixed serial sequence either way, so outputs match the jobs=1 run bitwise
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
        for (int t = 0; t < config.trials; ++t) {
            try {
                result.records[std::size_t(t)] =
                    run_one_trial(config, shape, window_lo, window_hi, t, 1);
            } catch (...) {
                failures[std::size_t(t)] = std::current_exception();
            }
            if (progress) {
#pragma omp critical
                (*progress) << "trial " << t << ": sup="
                            << result.records[std::size_t(t)].sup_distance << " ("
                            << result.records[std::size_t(t)].wall_ms << " ms)\n";
            }
        }
    } else {
        for (int t = 0; t < config.trials; ++t) {
            try {
                result.records[std::size_t(t)] =
                    run_one_trial(config, shape, window_lo, window_hi, t, config.jobs);
            } catch (...) {
                failures[std::size_t(t)] = std::current_exception();
            }
            if (progress)
                (*progress) << "trial " << t << ": sup="
                            << result.records[std::size_t(t)].sup_distance << " ("
                            << result.records[std::size_t(t)].wall_ms << " ms)\n";
        }
    }

    for (int t = 0; t < config.trials; ++t)
        if (failures[std::size_t(t)]) std::rethrow_exception(failures[std::size_t(t)]);

    result.summary = summarize(result.records, config.k_max);
    return result;
}

}  // namespace kerov
