#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qdforge/analysis.hpp"
#include "qdforge/archive.hpp"
#include "qdforge/tasks.hpp"
#include "qdforge/variation.hpp"

namespace qdforge {

struct RunConfig {
    std::string task = "arm";
    TaskSettings task_settings;
    VariationOperator op;
    std::uint64_t seed = 1;
    std::size_t generations = 4000;
    std::size_t batch_size = 256;
    std::size_t centroids = 1024;
    std::size_t cvt_samples = 50000;
    std::uint64_t cvt_seed = 1;
    std::size_t initial_population = 0;  // 0 means batch_size
};

// Throws ValidationError naming the offending field. generations == 0 is
// allowed here (an initialize-only run); config files additionally require
// at least one generation.
void validate_run_config(const RunConfig& config);

struct GenerationReport {
    std::size_t generation = 0;
    std::size_t offspring_evaluated = 0;
    std::size_t offspring_added = 0;  // new cells plus improvements
    double qd_score_added = 0.0;      // summed normalized-fitness deltas
};

// Evaluates and inserts the initial population (streams split per index from
// the run seed), returning the insertion tallies as generation 0.
GenerationReport initialize(CvtArchive& archive, const RunConfig& config, const Task& task);

// One synchronous generation: B parent pairs drawn uniformly with
// replacement from the occupied cells at generation start, one offspring
// each via the configured operator, all inserted in offspring order. Each
// offspring gets its own stream split from (seed, generation, index), so
// results cannot depend on evaluation order.
GenerationReport step(CvtArchive& archive, const RunConfig& config, const Task& task,
                      std::size_t generation);

using SnapshotSink = std::function<void(std::size_t generation, const CvtArchive&)>;

struct RunHooks {
    const CentroidSet* centroids = nullptr;  // reuse a prebuilt tessellation
    std::size_t snapshot_every = 0;          // call the sink every this many generations
    SnapshotSink snapshot;
};

struct RunResult {
    CvtArchive archive;
    GenerationReport init;
    std::vector<GenerationReport> reports;  // one per generation, 1-based
    std::vector<MetricsRecord> metrics;     // parallel to reports
};

RunResult run(const RunConfig& config, const RunHooks& hooks = {});

}  // namespace qdforge
