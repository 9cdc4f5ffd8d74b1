#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qdforge/config.hpp"
#include "qdforge/sweep.hpp"
#include "qdforge/tasks.hpp"

namespace fs = std::filesystem;

namespace {

int cmd_run(const std::string& config_path, const std::string& out_override,
            std::size_t jobs, long long snapshot_override) {
    qdforge::ExperimentSpec spec = qdforge::parse_config(config_path);
    if (!out_override.empty()) spec.out_dir = out_override;
    if (snapshot_override >= 0) spec.snapshot_every = static_cast<std::size_t>(snapshot_override);
    return qdforge::run_sweep(spec, jobs);
}

int cmd_centroids(std::size_t k, const std::string& task_id, std::size_t samples,
                  std::uint64_t cvt_seed, const std::string& out_dir) {
    const auto task = qdforge::make_task(task_id);
    const qdforge::CentroidSet set =
        qdforge::build_centroids(k, samples, task->descriptor_bounds(), cvt_seed);
    const fs::path path = qdforge::centroid_cache_path(out_dir, task_id, k, samples, cvt_seed);
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 1;
    }
    qdforge::write_centroids_csv(set, out);
    std::cout << path.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CVT-MAP-Elites experiment runner"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    std::size_t jobs = 1;
    long long snapshot_override = -1;
    CLI::App* run = app.add_subcommand("run", "execute the experiment grid of a config file");
    run->add_option("config,--config", config_path, "JSON experiment config");
    run->add_option("--out", out_override, "output directory (overrides the config)");
    run->add_option("--jobs", jobs, "max concurrent runs")->check(CLI::PositiveNumber);
    run->add_option("--snapshot-every", snapshot_override,
                    "archive snapshot interval in generations (overrides the config)");

    std::string analyze_dir;
    std::size_t window = 500;
    CLI::App* analyze = app.add_subcommand("analyze", "derive rolling stats and the PCA "
                                                      "spectrum from a finished run");
    analyze->add_option("run-dir", analyze_dir, "a seed_<s> run directory")->required();
    analyze->add_option("--window", window, "rolling window in generations")
        ->check(CLI::PositiveNumber);

    std::size_t k = 1024;
    std::string task_id;
    std::size_t samples = 50000;
    std::uint64_t cvt_seed = 1;
    std::string centroid_out = "runs";
    CLI::App* centroids = app.add_subcommand("centroids",
                                             "pre-compute a cached tessellation");
    centroids->add_option("k", k, "number of centroids")->required();
    centroids->add_option("task", task_id, "task id (fixes descriptor bounds)")->required();
    centroids->add_option("--samples", samples, "uniform samples for Lloyd's algorithm");
    centroids->add_option("--cvt-seed", cvt_seed, "tessellation seed");
    centroids->add_option("--out", centroid_out, "output directory holding the cache");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (config_path.empty()) {
                std::cerr << "run: a config path is required (positional or --config)\n";
                return 2;
            }
            return cmd_run(config_path, out_override, jobs, snapshot_override);
        }
        if (analyze->parsed()) {
            return qdforge::analyze_run(analyze_dir, window);
        }
        if (centroids->parsed()) {
            return cmd_centroids(k, task_id, samples, cvt_seed, centroid_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
