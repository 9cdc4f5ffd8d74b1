#pragma once

#include <cstddef>
#include <vector>

namespace qdforge {

/// Flat real-valued parameter vector, the unit of variation. Length is fixed
/// per task for the lifetime of a run.
using Genotype = std::vector<double>;

/// Low-dimensional behavior characterization; values are clamped into the
/// task's bounds before niche assignment.
using BehaviorDescriptor = std::vector<double>;

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double clamp(double v) const { return v < lo ? lo : (v > hi ? hi : v); }
    double width() const { return hi - lo; }
};

/// Archive payload: genotype plus its evaluation.
struct ScoredSolution {
    Genotype genotype;
    double fitness = 0.0;
    BehaviorDescriptor descriptor;
};

enum class ValidateStatus { Ok, DimensionMismatch, NonFiniteValue };

const char* to_string(ValidateStatus status);

/// Checks a solution against the task's (N, D) and finiteness invariants.
/// Pure; failures signal task/operator wiring bugs.
ValidateStatus validate(const ScoredSolution& solution, std::size_t genotype_dim,
                        std::size_t descriptor_dim);

}  // namespace qdforge
