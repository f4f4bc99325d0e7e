#include "kerov/report.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "kerov/errors.hpp"
#include "kerov/version.hpp"

namespace kerov {

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

nlohmann::json config_object(const RunConfig& c) {
    return nlohmann::json{
        {"alpha", c.alpha},
        {"dist", to_string(c.dist)},
        {"ensemble", to_string(c.ensemble)},
        {"grid_step", c.grid_step},
        {"k_max", c.k_max},
        {"n", c.n},
        {"seed", c.seed},
        {"tol", c.tol},
        {"trials", c.trials},
    };
}

}  // namespace

std::string canonical_config_json(const RunConfig& config) {
    return config_object(config).dump();
}

std::string to_csv(const RunConfig& config, const RunResult& result) {
    std::string out;
    out += "# kerov-lab v";
    out += version;
    out += " config=";
    out += canonical_config_json(config);
    out += "\n# rng: ";
    out += rng_algorithm;
    out += "\ntrial,sup_distance,center_norm";
    for (int k = 1; k <= config.k_max; ++k) out += ",p" + std::to_string(k) + "_norm";
    out += '\n';
    for (const auto& r : result.records) {
        out += std::to_string(r.trial);
        out += ',';
        out += fmt_double(r.sup_distance);
        out += ',';
        out += fmt_double(r.center_norm);
        for (double v : r.ptilde_norm) {
            out += ',';
            out += fmt_double(v);
        }
        out += '\n';
    }
    const auto& s = result.summary;
    out += "# summary sup_median=" + fmt_double(s.sup_median);
    out += " sup_mean=" + fmt_double(s.sup_mean);
    out += " sup_min=" + fmt_double(s.sup_min);
    out += " sup_max=" + fmt_double(s.sup_max);
    out += " center_norm_mean=" + fmt_double(s.center_norm_mean);
    for (std::size_t k = 0; k < s.ptilde_norm_mean.size(); ++k)
        out += " p" + std::to_string(k + 1) + "_norm_mean=" + fmt_double(s.ptilde_norm_mean[k]);
    out += '\n';
    return out;
}

std::string to_json(const RunConfig& config, const RunResult& result) {
    nlohmann::json j;
    j["meta"] = {
        {"config", config_object(config)},
        {"rng", rng_algorithm},
        {"tool", "kerov-lab"},
        {"version", version},
    };
    auto records = nlohmann::json::array();
    for (const auto& r : result.records)
        records.push_back({
            {"center_norm", r.center_norm},
            {"ptilde_norm", r.ptilde_norm},
            {"sup_distance", r.sup_distance},
            {"trial", r.trial},
        });
    j["records"] = std::move(records);
    const auto& s = result.summary;
    j["summary"] = {
        {"center_norm_mean", s.center_norm_mean},
        {"ptilde_norm_mean", s.ptilde_norm_mean},
        {"sup_max", s.sup_max},
        {"sup_mean", s.sup_mean},
        {"sup_median", s.sup_median},
        {"sup_min", s.sup_min},
    };
    return j.dump(2) + "\n";
}

std::string render(const RunConfig& config, const RunResult& result) {
    return config.format == OutputFormat::csv ? to_csv(config, result) : to_json(config, result);
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + path);
    f << text << std::flush;
    if (!f) throw Error("write failed: " + path);
}

}  // namespace kerov
