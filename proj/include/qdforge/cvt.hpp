#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qdforge/genome.hpp"
#include "qdforge/rng.hpp"

namespace qdforge {

/// Fixed set of k centroids over descriptor space. Immutable after
/// construction and shareable across threads.
class CentroidSet {
public:
    CentroidSet(std::size_t dim, std::vector<double> flat, std::vector<Interval> bounds);

    std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    std::span<const double> centroid(std::size_t j) const {
        return {flat_.data() + j * dim_, dim_};
    }
    std::span<const double> flat() const { return flat_; }
    std::span<const Interval> bounds() const { return bounds_; }

private:
    std::size_t dim_;
    std::vector<double> flat_;  // size * dim, row-major
    std::vector<Interval> bounds_;
};

/// Exact nearest centroid by Euclidean distance; ties resolve to the lowest
/// index. Throws DimensionMismatch if the descriptor dimension differs.
std::size_t nearest_centroid(std::span<const double> descriptor, const CentroidSet& set);

/// Per-iteration Lloyd diagnostics (quantization error is the mean squared
/// distance of samples to their nearest centroid, measured after the update).
struct LloydTrace {
    std::size_t iterations = 0;
    std::vector<double> quantization_errors;
};

/// `count` uniform points in `bounds`, flattened row-major.
std::vector<double> draw_uniform_samples(std::span<const Interval> bounds,
                                         std::size_t count, RngStream& rng);

/// CVT construction: draws `samples` uniform points, then runs Lloyd's
/// k-means (initialized from a random subset of the samples) until the
/// largest centroid movement drops below `tol` or `max_iters` is reached.
/// Empty clusters are repaired by moving their centroid onto the sample
/// farthest from it. Deterministic in all arguments.
CentroidSet build_centroids(std::size_t k, std::size_t samples,
                            std::span<const Interval> bounds, std::uint64_t seed,
                            std::size_t max_iters = 100, double tol = 1e-6,
                            LloydTrace* trace = nullptr);

/// CSV, one row per centroid. Values round-trip bit-exactly.
void write_centroids_csv(const CentroidSet& set, std::ostream& out);
CentroidSet read_centroids_csv(std::istream& in, std::span<const Interval> bounds);

}  // namespace qdforge
