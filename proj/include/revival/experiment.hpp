#pragma once

#include <filesystem>

#include "revival/config.hpp"
#include "revival/diagnostics.hpp"

namespace revival {

struct ExperimentReport {
    std::vector<std::filesystem::path> files;
    double gram_defect = 0.0;
    bool norm_bound_warning = false;
    std::size_t grid_used = 0;
    std::string label;   // sweep entry label, empty for single runs
};

/// Loads `x,re,im` rows on a uniform grid of [0,pi].
GridFunction load_samples_csv(const std::filesystem::path& path);

/// Runs potential -> spectrum -> bi-orthogonal system -> decomposition
/// and writes the requested outputs into out_dir (write-then-rename;
/// partial outputs are removed if the run fails).  A sweep produces one
/// subdirectory per q value; entries run sequentially unless jobs > 1.
std::vector<ExperimentReport> run_experiment(const ExperimentConfig& config,
                                             const std::filesystem::path& out_dir,
                                             unsigned jobs = 1);

}  // namespace revival
