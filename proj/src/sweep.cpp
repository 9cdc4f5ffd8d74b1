#include "qdforge/sweep.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qdforge/errors.hpp"
#include "qdforge/io.hpp"

namespace qdforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kMetricsHeader =
    "generation,qd_score,coverage,max_fitness,offspring_added,qd_score_added";

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (start <= line.size()) {
        const std::size_t comma = line.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
        fields.push_back(line.substr(start, end - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace

void write_metrics_csv(std::span<const MetricsRecord> records, std::ostream& out) {
    out << kMetricsHeader << "\n";
    for (const MetricsRecord& r : records) {
        out << r.generation << ',' << format_double(r.qd_score) << ','
            << format_double(r.coverage) << ',' << format_double(r.max_fitness) << ','
            << r.offspring_added << ',' << format_double(r.qd_score_added) << "\n";
    }
}

std::vector<MetricsRecord> read_metrics_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kMetricsHeader) {
        throw ParseError("metrics csv: missing or unexpected header");
    }
    std::vector<MetricsRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 6) throw ParseError("metrics csv: expected 6 fields per row");
        MetricsRecord r;
        r.generation = parse_u64(fields[0], "metrics csv generation");
        r.qd_score = parse_double(fields[1], "metrics csv qd_score");
        r.coverage = parse_double(fields[2], "metrics csv coverage");
        r.max_fitness = parse_double(fields[3], "metrics csv max_fitness");
        r.offspring_added = parse_u64(fields[4], "metrics csv offspring_added");
        r.qd_score_added = parse_double(fields[5], "metrics csv qd_score_added");
        records.push_back(r);
    }
    return records;
}

std::filesystem::path centroid_cache_path(const std::filesystem::path& out_dir,
                                          const std::string& task, std::size_t k,
                                          std::size_t samples, std::uint64_t cvt_seed) {
    return out_dir / "centroids" /
           (task + "_k" + std::to_string(k) + "_n" + std::to_string(samples) + "_c" +
            std::to_string(cvt_seed) + ".csv");
}

void execute_run(const RunConfig& config, const std::filesystem::path& run_dir,
                 std::size_t snapshot_every, const CentroidSet* centroids) {
    fs::create_directories(run_dir);
    const auto start = std::chrono::steady_clock::now();

    RunHooks hooks;
    hooks.centroids = centroids;
    hooks.snapshot_every = snapshot_every;
    if (snapshot_every > 0) {
        hooks.snapshot = [&run_dir](std::size_t g, const CvtArchive& archive) {
            std::ofstream out(run_dir / ("archive_gen_" + std::to_string(g) + ".jsonl"));
            archive.write_jsonl(out);
        };
    }

    const RunResult result = run(config, hooks);

    {
        std::ofstream out(run_dir / "metrics.csv");
        if (!out) throw std::runtime_error("cannot write metrics.csv in " + run_dir.string());
        write_metrics_csv(result.metrics, out);
    }
    {
        std::ofstream out(run_dir / "archive_final.jsonl");
        if (!out) {
            throw std::runtime_error("cannot write archive_final.jsonl in " + run_dir.string());
        }
        result.archive.write_jsonl(out);
    }

    const auto task = make_task(config.task, config.task_settings);
    const std::string canonical = canonical_config_json(config);
    json manifest{
        {"task", config.task},
        {"operator", std::string(operator_id(config.op.kind))},
        {"seed", config.seed},
        {"status", "ok"},
        {"config_hash", to_hex(fnv1a64(canonical))},
        {"config", json::parse(canonical)},
        {"wall_time_s", elapsed_seconds(start)},
        {"init",
         {{"evaluated", result.init.offspring_evaluated},
          {"offspring_added", result.init.offspring_added},
          {"qd_score_added", result.init.qd_score_added}}},
        {"final",
         {{"generations", result.metrics.size()},
          {"occupied_cells", result.archive.occupied_count()},
          {"qd_score", qd_score(result.archive, task->min_fitness())},
          {"coverage", coverage(result.archive)}}},
    };
    if (result.archive.occupied_count() > 0) {
        manifest["final"]["max_fitness"] = max_fitness(result.archive);
    }
    write_text_file(run_dir / "manifest.json", manifest.dump(2) + "\n");
}

int run_sweep(const ExperimentSpec& spec, std::size_t jobs) {
    const std::vector<RunConfig> runs = expand_grid(spec);
    if (runs.empty()) throw ValidationError("runs", "experiment grid is empty");
    fs::create_directories(spec.out_dir);

    // Build or load every tessellation once, before the parallel phase; the
    // cache is read-only afterwards.
    std::map<std::string, CentroidSet> cache;
    for (const RunConfig& rc : runs) {
        const fs::path path = centroid_cache_path(spec.out_dir, rc.task, rc.centroids,
                                                  rc.cvt_samples, rc.cvt_seed);
        if (cache.count(path.string())) continue;
        const auto task = make_task(rc.task, rc.task_settings);
        if (fs::exists(path)) {
            std::ifstream in(path);
            cache.emplace(path.string(), read_centroids_csv(in, task->descriptor_bounds()));
        } else {
            CentroidSet set = build_centroids(rc.centroids, rc.cvt_samples,
                                              task->descriptor_bounds(), rc.cvt_seed);
            fs::create_directories(path.parent_path());
            std::ofstream out(path);
            write_centroids_csv(set, out);
            cache.emplace(path.string(), std::move(set));
        }
    }

    struct RunStatus {
        bool ok = false;
        std::string error;
        double wall_time_s = 0.0;
        fs::path dir;
    };
    std::vector<RunStatus> status(runs.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= runs.size()) return;
            const RunConfig& rc = runs[i];
            const fs::path dir = spec.out_dir / rc.task /
                                 std::string(operator_id(rc.op.kind)) /
                                 ("seed_" + std::to_string(rc.seed));
            status[i].dir = dir;
            const auto start = std::chrono::steady_clock::now();
            try {
                const fs::path cpath = centroid_cache_path(spec.out_dir, rc.task, rc.centroids,
                                                           rc.cvt_samples, rc.cvt_seed);
                execute_run(rc, dir, spec.snapshot_every, &cache.at(cpath.string()));
                status[i].ok = true;
            } catch (const std::exception& e) {
                status[i].error = e.what();
                try {
                    fs::create_directories(dir);
                    const json failed{{"task", rc.task},
                                      {"operator", std::string(operator_id(rc.op.kind))},
                                      {"seed", rc.seed},
                                      {"status", "failed"},
                                      {"error", e.what()}};
                    write_text_file(dir / "manifest.json", failed.dump(2) + "\n");
                } catch (...) {
                    // the sweep manifest still records the failure
                }
            }
            status[i].wall_time_s = elapsed_seconds(start);
            std::lock_guard<std::mutex> lock(log_mutex);
            std::cerr << (status[i].ok ? "done   " : "FAILED ") << rc.task << '/'
                      << operator_id(rc.op.kind) << "/seed_" << rc.seed;
            if (!status[i].ok) std::cerr << ": " << status[i].error;
            std::cerr << '\n';
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, runs.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    json entries = json::array();
    bool all_ok = true;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const RunConfig& rc = runs[i];
        json entry{{"task", rc.task},
                   {"operator", std::string(operator_id(rc.op.kind))},
                   {"seed", rc.seed},
                   {"dir", fs::relative(status[i].dir, spec.out_dir).generic_string()},
                   {"status", status[i].ok ? "ok" : "failed"},
                   {"wall_time_s", status[i].wall_time_s},
                   {"config_hash", to_hex(fnv1a64(canonical_config_json(rc)))}};
        if (!status[i].ok) {
            entry["error"] = status[i].error;
            all_ok = false;
        }
        entries.push_back(std::move(entry));
    }
    const json manifest{{"out", spec.out_dir.generic_string()}, {"runs", std::move(entries)}};
    write_text_file(spec.out_dir / "sweep_manifest.json", manifest.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

int analyze_run(const std::filesystem::path& run_dir, std::size_t window) {
    std::ifstream metrics_in(run_dir / "metrics.csv");
    if (!metrics_in) throw ParseError("analyze: cannot open " + (run_dir / "metrics.csv").string());
    const std::vector<MetricsRecord> records = read_metrics_csv(metrics_in);
    const RollingStats stats = rolling_stats(records, window);
    {
        std::ofstream out(run_dir / "analysis.csv");
        if (!out) throw std::runtime_error("cannot write analysis.csv in " + run_dir.string());
        out << "generation,rolling_offspring_added,rolling_qd_score_added_per_offspring\n";
        for (std::size_t i = 0; i < records.size(); ++i) {
            out << records[i].generation << ',' << format_double(stats.offspring_added[i])
                << ',' << format_double(stats.qd_added_per_offspring[i]) << "\n";
        }
    }

    std::ifstream archive_in(run_dir / "archive_final.jsonl");
    if (!archive_in) {
        throw ParseError("analyze: cannot open " + (run_dir / "archive_final.jsonl").string());
    }
    const std::vector<Genotype> genotypes = read_genotypes_jsonl(archive_in);
    std::ofstream out(run_dir / "effective_dim.csv");
    if (!out) throw std::runtime_error("cannot write effective_dim.csv in " + run_dir.string());
    out << "component,variance_fraction,cumulative_fraction,selected\n";
    try {
        const EffectiveDimReport report = effective_dimensionality(genotypes);
        double cumulative = 0.0;
        for (std::size_t i = 0; i < report.variance_fractions.size(); ++i) {
            cumulative += report.variance_fractions[i];
            out << (i + 1) << ',' << format_double(report.variance_fractions[i]) << ','
                << format_double(cumulative) << ',' << (i < report.num_components ? 1 : 0)
                << "\n";
        }
        std::cout << "effective_dimensionality " << report.num_components << "\n";
    } catch (const DegenerateData& e) {
        std::cerr << "analyze: " << e.what() << "; spectrum omitted\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "analyze: " << e.what() << "; spectrum omitted\n";
    }
    return 0;
}

}  // namespace qdforge
