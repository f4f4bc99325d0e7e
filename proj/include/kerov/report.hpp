#pragma once

#include <string>

#include "kerov/simulate.hpp"

namespace kerov {

/** Shortest round-trip decimal for v; used for every float the tool emits. */
std::string fmt_double(double v);

/**
 * Sorted-key JSON of the parameters that determine the emitted numbers.
 * Excludes `out`, `jobs` and `format`: none of them changes a record's bytes,
 * so identical runs stay byte-comparable across thread counts and file names.
 */
std::string canonical_config_json(const RunConfig& config);

/**
 * Layout: `# kerov-lab v<ver> config=<json>` and `# rng: <algorithm>` header
 * lines, a fixed column row `trial,sup_distance,center_norm,p1_norm,...`, one
 * row per trial, and a final `# summary key=value ...` line (kept as a comment
 * so the table holds a single schema).
 */
std::string to_csv(const RunConfig& config, const RunResult& result);

/** One object: meta {tool, version, rng, config}, records, summary. */
std::string to_json(const RunConfig& config, const RunResult& result);

std::string render(const RunConfig& config, const RunResult& result);

/** Writes text to the file at path, or to stdout when path is "-". */
void write_output(const std::string& path, const std::string& text);

}  // namespace kerov
