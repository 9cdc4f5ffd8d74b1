#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "qdforge/config.hpp"

namespace qdforge {

// metrics.csv serialization: one row per generation, shortest
// round-trip-exact number formatting so identical runs produce identical
// bytes.
void write_metrics_csv(std::span<const MetricsRecord> records, std::ostream& out);
std::vector<MetricsRecord> read_metrics_csv(std::istream& in);

// Cache file for a tessellation shared by every run with the same key.
std::filesystem::path centroid_cache_path(const std::filesystem::path& out_dir,
                                          const std::string& task, std::size_t k,
                                          std::size_t samples, std::uint64_t cvt_seed);

// Executes one run into run_dir: metrics.csv, archive_final.jsonl,
// manifest.json, and archive_gen_<g>.jsonl snapshots when requested.
// `centroids` may be null, in which case the run builds its own.
void execute_run(const RunConfig& config, const std::filesystem::path& run_dir,
                 std::size_t snapshot_every, const CentroidSet* centroids);

// Runs the whole grid under <out>/<task>/<operator>/seed_<s>/, up to `jobs`
// runs concurrently, sharing centroid caches. A failing run is recorded in
// its manifest and the sweep manifest and does not stop the others.
// Returns 0 iff every run completed.
int run_sweep(const ExperimentSpec& spec, std::size_t jobs = 1);

// Reads a run directory and writes analysis.csv (rolling statistics) and
// effective_dim.csv (variance spectrum of the final elites). Returns 0 on
// success.
int analyze_run(const std::filesystem::path& run_dir, std::size_t window = 500);

}  // namespace qdforge
