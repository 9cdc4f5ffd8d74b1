#include "qdforge/cvt.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qdforge/errors.hpp"
#include "qdforge/io.hpp"

namespace qdforge {

namespace {

double squared_distance(std::span<const double> a, const double* b) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        d2 += d * d;
    }
    return d2;
}

}  // namespace

CentroidSet::CentroidSet(std::size_t dim, std::vector<double> flat,
                         std::vector<Interval> bounds)
    : dim_(dim), flat_(std::move(flat)), bounds_(std::move(bounds)) {
    if (dim_ == 0 || flat_.empty() || flat_.size() % dim_ != 0) {
        throw std::invalid_argument("CentroidSet: flat data must be a nonempty multiple of dim");
    }
    if (bounds_.size() != dim_) {
        throw DimensionMismatch("CentroidSet: bounds dimension != centroid dimension");
    }
}

std::size_t nearest_centroid(std::span<const double> descriptor, const CentroidSet& set) {
    if (descriptor.size() != set.dim()) {
        throw DimensionMismatch("nearest_centroid: descriptor dimension != centroid dimension");
    }
    const std::size_t k = set.size();
    const double* data = set.flat().data();
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
        const double d2 = squared_distance(descriptor, data + j * set.dim());
        if (d2 < best_d2) {  // strict: ties keep the lowest index
            best_d2 = d2;
            best = j;
        }
    }
    return best;
}

std::vector<double> draw_uniform_samples(std::span<const Interval> bounds,
                                         std::size_t count, RngStream& rng) {
    const std::size_t dim = bounds.size();
    std::vector<double> flat(count * dim);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t d = 0; d < dim; ++d) {
            flat[i * dim + d] = bounds[d].lo + rng.uniform() * bounds[d].width();
        }
    }
    return flat;
}

CentroidSet build_centroids(std::size_t k, std::size_t samples,
                            std::span<const Interval> bounds, std::uint64_t seed,
                            std::size_t max_iters, double tol, LloydTrace* trace) {
    if (k < 1) throw std::invalid_argument("build_centroids: k must be >= 1");
    if (samples < k) throw std::invalid_argument("build_centroids: samples must be >= k");
    for (const Interval& b : bounds) {
        if (!(b.lo < b.hi)) throw InvalidBounds("build_centroids: lo >= hi");
    }

    const std::size_t dim = bounds.size();
    RngStream rng(seed);
    const std::vector<double> points = draw_uniform_samples(bounds, samples, rng);

    // Init from a random subset of the samples (partial Fisher-Yates).
    std::vector<std::size_t> order(samples);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> centroids(k * dim);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.uniform_index(samples - i);
        std::swap(order[i], order[j]);
        std::copy_n(points.data() + order[i] * dim, dim, centroids.data() + i * dim);
    }

    std::vector<std::size_t> assignment(samples);
    std::vector<double> sums(k * dim);
    std::vector<std::size_t> counts(k);
    std::vector<double> next(k * dim);

    if (trace) {
        trace->iterations = 0;
        trace->quantization_errors.clear();
    }

    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        // Assignment.
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), std::size_t{0});
        for (std::size_t i = 0; i < samples; ++i) {
            const double* p = points.data() + i * dim;
            std::size_t best = 0;
            double best_d2 = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < k; ++j) {
                const double d2 = squared_distance({p, dim}, centroids.data() + j * dim);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = j;
                }
            }
            assignment[i] = best;
            counts[best] += 1;
            for (std::size_t d = 0; d < dim; ++d) sums[best * dim + d] += p[d];
        }

        // Update; empty clusters jump to the sample farthest from them.
        next = centroids;
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] > 0) {
                for (std::size_t d = 0; d < dim; ++d) {
                    next[j * dim + d] = sums[j * dim + d] / static_cast<double>(counts[j]);
                }
            }
        }
        std::vector<char> taken(samples, 0);
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] > 0) continue;
            std::size_t far = samples;
            double far_d2 = -1.0;
            for (std::size_t i = 0; i < samples; ++i) {
                if (taken[i]) continue;
                const double d2 = squared_distance({points.data() + i * dim, dim},
                                                   centroids.data() + j * dim);
                if (d2 > far_d2) {
                    far_d2 = d2;
                    far = i;
                }
            }
            taken[far] = 1;
            std::copy_n(points.data() + far * dim, dim, next.data() + j * dim);
        }

        double max_move2 = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            max_move2 = std::max(max_move2, squared_distance({next.data() + j * dim, dim},
                                                             centroids.data() + j * dim));
        }
        centroids.swap(next);

        if (trace) {
            trace->iterations = iter + 1;
            double err = 0.0;
            for (std::size_t i = 0; i < samples; ++i) {
                const double* p = points.data() + i * dim;
                double best_d2 = std::numeric_limits<double>::infinity();
                for (std::size_t j = 0; j < k; ++j) {
                    best_d2 = std::min(best_d2, squared_distance({p, dim},
                                                                 centroids.data() + j * dim));
                }
                err += best_d2;
            }
            trace->quantization_errors.push_back(err / static_cast<double>(samples));
        }

        if (max_move2 < tol * tol) break;
    }

    return CentroidSet(dim, std::move(centroids),
                       std::vector<Interval>(bounds.begin(), bounds.end()));
}

void write_centroids_csv(const CentroidSet& set, std::ostream& out) {
    for (std::size_t d = 0; d < set.dim(); ++d) {
        out << (d == 0 ? "" : ",") << "d" << d;
    }
    out << "\n";
    for (std::size_t j = 0; j < set.size(); ++j) {
        const auto c = set.centroid(j);
        for (std::size_t d = 0; d < set.dim(); ++d) {
            out << (d == 0 ? "" : ",") << format_double(c[d]);
        }
        out << "\n";
    }
}

CentroidSet read_centroids_csv(std::istream& in, std::span<const Interval> bounds) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("centroid csv: missing header");
    std::vector<double> flat;
    const std::size_t dim = bounds.size();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t start = 0;
        std::size_t cols = 0;
        while (start <= line.size()) {
            const std::size_t comma = line.find(',', start);
            const std::size_t end = comma == std::string::npos ? line.size() : comma;
            flat.push_back(parse_double({line.data() + start, end - start}, "centroid csv"));
            ++cols;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (cols != dim) throw ParseError("centroid csv: row dimension mismatch");
    }
    if (flat.empty()) throw ParseError("centroid csv: no centroids");
    return CentroidSet(dim, std::move(flat), std::vector<Interval>(bounds.begin(), bounds.end()));
}

}  // namespace qdforge
