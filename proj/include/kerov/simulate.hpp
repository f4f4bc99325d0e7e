#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kerov/randmat.hpp"

namespace kerov {

enum class Ensemble { wigner, wishart };
enum class OutputFormat { csv, json };

const char* to_string(Ensemble e);
const char* to_string(OutputFormat f);

struct RunConfig {
    Ensemble ensemble = Ensemble::wigner;
    int n = 100;
    double alpha = 1.0;  // wishart only; ignored for wigner
    EntryDist dist = EntryDist::gaussian;
    int trials = 20;
    std::uint64_t seed = 42;
    int k_max = 4;
    double grid_step = 1e-3;
    OutputFormat format = OutputFormat::csv;
    std::string out = "-";
    int jobs = 1;
    double tol = 1e-8;  // relative interlacing slack: absolute = tol * max(1, spectral radius)
};

struct TrialRecord {
    int trial = 0;  // equals the RNG stream index, 0-based
    double sup_distance = 0.0;
    double center_norm = 0.0;
    std::vector<double> ptilde_norm;  // p~_k / N^{k/2} (wigner) or / N^k (wishart), k = 1..k_max
    double wall_ms = 0.0;             // stderr progress only; never serialized
};

struct RunSummary {
    double sup_median = 0.0;  // mean of the two middle values for even trial counts
    double sup_mean = 0.0;
    double sup_min = 0.0;
    double sup_max = 0.0;
    double center_norm_mean = 0.0;
    std::vector<double> ptilde_norm_mean;
};

struct RunResult {
    std::vector<TrialRecord> records;  // ordered by trial index
    RunSummary summary;
};

/** Throws ConfigError on invalid settings (wishart alpha < 1, trials < 1, ...). */
void validate_config(const RunConfig& config);

/**
 * One trial per RNG stream 0..trials-1: sample, eigensolve S and its principal
 * submatrix, validate interlacing, rescale the diagram by sqrt(N) (wigner) or
 * N (wishart), and measure the sup distance to the limit shape over its
 * support padded by 0.5.  Trials run concurrently up to `jobs`; records are
 * ordered by trial index and every number is independent of the thread count.
 * Progress lines go to *progress (pass nullptr for silence); data never does.
 */
RunResult run_simulation(const RunConfig& config, std::ostream* progress = nullptr);

}  // namespace kerov
