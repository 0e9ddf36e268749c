#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "revival/experiment.hpp"
#include "revival/validation.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& out_dir,
                unsigned jobs) {
    revival::ExperimentConfig cfg = revival::parse_config_file(config_path);
    if (const char* grid_env = std::getenv("REVIVAL_GRID")) {
        cfg.grid = static_cast<std::size_t>(std::strtoull(grid_env, nullptr, 10));
        cfg.validate();
    }
    const auto reports = revival::run_experiment(cfg, out_dir, jobs);
    for (const auto& rep : reports) {
        if (rep.norm_bound_warning)
            std::fprintf(stderr,
                         "warning: ||V||_inf >= 3/2 for %s; revival split computed "
                         "outside the theorem's hypothesis\n",
                         rep.label.empty() ? "the potential" : rep.label.c_str());
        std::printf("%s grid %zu, gram defect %.3g\n",
                    rep.label.empty() ? "run:" : (rep.label + ":").c_str(),
                    rep.grid_used, rep.gram_defect);
        for (const auto& f : rep.files) std::printf("  wrote %s\n", f.string().c_str());
    }
    return 0;
}

int validate_command(const std::string& suite) {
    const auto results =
        suite == "all" ? revival::run_all_criteria() : revival::run_suite(suite);
    bool all_passed = true;
    for (const auto& r : results) {
        const char* tag = r.advisory ? "INFO" : (r.passed ? "PASS" : "FAIL");
        std::printf("[%s] %2d %s: %s (%.2fs)\n", tag, r.id, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        if (!r.advisory && !r.passed) all_passed = false;
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak revivals of the linear Schrodinger equation on (0,pi)"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", suite;
    unsigned jobs = 1;

    auto* run = app.add_subcommand("run", "run an experiment from a config file");
    run->add_option("--config", config_path, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--jobs", jobs, "parallel sweep entries");
    run->add_option("--out", out_dir, "output directory");

    auto* validate = app.add_subcommand("validate", "run a validation suite");
    validate->add_option("--suite", suite, "suite name or 'all'")
        ->required()
        ->check(CLI::IsMember({"free", "gauss", "mathieu", "biortho", "selfadjoint", "all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return run_command(config_path, out_dir, jobs);
        return validate_command(suite);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
