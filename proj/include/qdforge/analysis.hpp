#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qdforge/archive.hpp"
#include "qdforge/genome.hpp"

namespace qdforge {

// One row of a run's metrics time series.
struct MetricsRecord {
    std::size_t generation = 0;
    double qd_score = 0.0;
    double coverage = 0.0;
    double max_fitness = 0.0;
    std::size_t offspring_added = 0;
    double qd_score_added = 0.0;
};

// Sum over occupied cells of (fitness - min_fitness). min_fitness must be a
// lower bound on task fitness, which keeps every term non-negative.
double qd_score(const CvtArchive& archive, double min_fitness);

// Occupied cells / total cells.
double coverage(const CvtArchive& archive);

// Highest raw fitness over occupied cells. Throws EmptyArchive.
double max_fitness(const CvtArchive& archive);

struct RollingStats {
    std::vector<double> offspring_added;          // trailing-window mean
    std::vector<double> qd_added_per_offspring;   // windowed qd sum / windowed count, 0 if count 0
};

// Trailing-window statistics; windows shorter than `window` at the start of
// the series use whatever prefix is available. Sums run left to right so
// results are reproducible bit for bit.
RollingStats rolling_stats(std::span<const MetricsRecord> records, std::size_t window = 500);

struct EffectiveDimReport {
    std::size_t num_components = 0;          // smallest count reaching the threshold
    std::vector<double> variance_fractions;  // non-negative, descending, sums to 1
};

// PCA-based dimensionality of a set of genotypes: center the columns, take
// eigenvalues of the sample covariance (via the Gram matrix when there are
// fewer rows than columns), and count how many leading components reach the
// cumulative variance threshold (inclusive). Throws DegenerateData when all
// rows are identical and std::invalid_argument for fewer than two rows.
EffectiveDimReport effective_dimensionality(std::span<const Genotype> genotypes,
                                            double threshold = 0.95);

// Eigenvalues (unordered) of a symmetric n x n row-major matrix by cyclic
// Jacobi rotations; iterates until the off-diagonal norm drops below
// 1e-12 times the matrix scale or a sweep cap is hit.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

}  // namespace qdforge
