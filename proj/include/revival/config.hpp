#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "revival/grid.hpp"

namespace revival {

/// One experiment, parsed from a flat `key = value` file
/// (`#` starts a comment).  A `sweep` key replaces the single Mathieu
/// coefficient with a comma-separated list of q values.
struct ExperimentConfig {
    // potential.*
    std::string potential_kind = "mathieu";   // mathieu | samples
    Complex qcoef{0.0, 0.0};                  // potential.q_re / potential.q_im
    std::string potential_samples_file;

    // initial.*
    std::string initial_kind = "indicator";   // indicator | sine | poly | samples
    double indicator_a = 3.0 * kPi / 8.0;
    double indicator_b = 5.0 * kPi / 8.0;
    int sine_index = 1;
    std::string initial_samples_file;

    // time.*
    std::int64_t time_p = 1;
    std::int64_t time_q = 5;

    int modes = 100;
    std::size_t grid = 4096;

    std::vector<std::string> outputs = {"decomposition_csv", "spectrum_csv"};
    std::vector<Complex> sweep;

    void validate() const;
};

/// "0.3", "0.25i", "-i", "0.3+0.1i", ...
Complex parse_complex(const std::string& text);

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::filesystem::path& path);

/// Smallest multiple of 2q that is >= grid (shifts by 2 pi k/q then land
/// on grid nodes; the result is even, as Simpson requires).
std::size_t adjust_grid(std::size_t grid, std::int64_t q);

}  // namespace revival
