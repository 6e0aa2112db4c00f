#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hyperrough/model.hpp"

namespace hyperrough::cli {

struct RunConfig {
    ModelParams model;
    std::vector<double> hursts{-0.05, -0.25, -0.45, -0.49, -0.499};
    std::size_t steps = 2000;
    std::size_t paths = 1000;
    std::uint64_t seed = 42;
    std::filesystem::path out_dir = "out";
    std::vector<double> u_grid{-10.0, -5.0, 0.0, 5.0, 10.0};
    std::vector<double> v_grid{-3.0, -1.5, 0.0, 1.5, 3.0};
    unsigned threads = 0;
    std::size_t bins = 100;
    // Constant test functions used by riccati-check.
    double riccati_f = 1.0;
    double riccati_h = 0.5;

    // Throws ConfigError naming the first invalid field.
    void validate() const;
};

// Sets one field from its textual value. Keys: v0 lambda theta nu T H N paths
// seed out u_grid v_grid threads bins riccati_f riccati_h. Lists are
// comma-separated. Throws ConfigError for unknown keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

// Flat "key = value" lines; '#' starts a comment, blank lines are ignored.
RunConfig parse_config(std::string_view text, RunConfig base = {});
// Throws IoError when the file cannot be read.
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

// Canonical key=value rendering of every field that influences results
// (out and threads are excluded).
std::string canonical_text(const RunConfig& config);

// FNV-1a 64-bit hash of canonical_text, as 16 hex digits.
std::string config_hash(const RunConfig& config);

std::vector<double> parse_real_list(std::string_view field, std::string_view text);

}  // namespace hyperrough::cli
