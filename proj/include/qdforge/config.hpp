#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qdforge/qd_loop.hpp"

namespace qdforge {

// One experiment file expands into the task x operator x seed grid, every
// run sharing the same loop and operator settings.
struct ExperimentSpec {
    std::vector<std::string> tasks;
    std::vector<OperatorKind> operators;
    std::vector<std::uint64_t> seeds;
    RunConfig base;
    std::filesystem::path out_dir = "runs";
    std::size_t snapshot_every = 0;
};

// QDFORGE_SEED_OFFSET: added to every seed (CI shards run disjoint seeds
// from one config). Unset or empty means 0.
std::uint64_t seed_offset_from_env();

// Strict parse: unknown keys are rejected, fields are type- and
// range-checked (ValidationError names the field), malformed JSON raises
// ParseError with the position. Required keys: task(s), operator(s),
// seed(s), generations; everything else has documented defaults.
ExperimentSpec parse_config_json(const std::string& text, std::uint64_t seed_offset = 0);

// Reads the file and applies the environment seed offset.
ExperimentSpec parse_config(const std::filesystem::path& path);

// Task-major expansion: task, then operator, then seed.
std::vector<RunConfig> expand_grid(const ExperimentSpec& spec);

// Canonical JSON of one run's effective settings (sorted keys, resolved
// defaults); its hash goes into the run manifest so config drift between
// runs is detectable.
std::string canonical_config_json(const RunConfig& config);

}  // namespace qdforge
