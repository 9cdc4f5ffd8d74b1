#include "qdforge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "qdforge/errors.hpp"

namespace qdforge {

double qd_score(const CvtArchive& archive, double min_fitness) {
    double score = 0.0;
    for (std::size_t j : archive.occupied_cells()) {
        score += archive.cell(j)->fitness - min_fitness;
    }
    return score;
}

double coverage(const CvtArchive& archive) {
    return static_cast<double>(archive.occupied_count()) /
           static_cast<double>(archive.cell_count());
}

double max_fitness(const CvtArchive& archive) {
    if (archive.occupied_count() == 0) throw EmptyArchive("max_fitness: archive is empty");
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j : archive.occupied_cells()) {
        best = std::max(best, archive.cell(j)->fitness);
    }
    return best;
}

RollingStats rolling_stats(std::span<const MetricsRecord> records, std::size_t window) {
    if (window < 1) throw std::invalid_argument("rolling_stats: window must be >= 1");
    RollingStats stats;
    stats.offspring_added.resize(records.size());
    stats.qd_added_per_offspring.resize(records.size());
    for (std::size_t t = 0; t < records.size(); ++t) {
        const std::size_t lo = t + 1 >= window ? t + 1 - window : 0;
        std::size_t added = 0;
        double qd_added = 0.0;
        for (std::size_t i = lo; i <= t; ++i) {
            added += records[i].offspring_added;
            qd_added += records[i].qd_score_added;
        }
        stats.offspring_added[t] =
            static_cast<double>(added) / static_cast<double>(t - lo + 1);
        stats.qd_added_per_offspring[t] =
            added == 0 ? 0.0 : qd_added / static_cast<double>(added);
    }
    return stats;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n) {
        throw std::invalid_argument("symmetric_eigenvalues: matrix size != n*n");
    }
    if (n == 0) return {};

    double trace = 0.0, frob2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];
    for (double v : a) frob2 += v * v;
    // For positive semidefinite input the trace dominates, matching the
    // documented off-diagonal < 1e-12 * trace stopping rule.
    const double scale = std::max(std::abs(trace), std::sqrt(frob2));

    std::vector<double> diag(n);
    if (scale == 0.0) return diag;
    const double threshold = 1e-12 * scale;

    constexpr std::size_t kMaxSweeps = 100;
    for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off2 += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if (std::sqrt(off2) < threshold) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    a[r * n + p] = a[p * n + r] = c * arp - s * arq;
                    a[r * n + q] = a[q * n + r] = s * arp + c * arq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
    return diag;
}

EffectiveDimReport effective_dimensionality(std::span<const Genotype> genotypes,
                                            double threshold) {
    const std::size_t m = genotypes.size();
    if (m < 2) throw std::invalid_argument("effective_dimensionality: need >= 2 genotypes");
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw std::invalid_argument("effective_dimensionality: threshold must be in (0, 1]");
    }
    const std::size_t n = genotypes[0].size();
    if (n == 0) throw DimensionMismatch("effective_dimensionality: empty genotypes");
    for (const Genotype& g : genotypes) {
        if (g.size() != n) {
            throw DimensionMismatch("effective_dimensionality: inconsistent genotype lengths");
        }
    }

    std::vector<double> centered(m * n);
    for (std::size_t j = 0; j < n; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean += genotypes[i][j];
        mean /= static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) centered[i * n + j] = genotypes[i][j] - mean;
    }

    // The covariance X^T X and the Gram matrix X X^T share their nonzero
    // eigenvalues; diagonalize whichever is smaller.
    const std::size_t dim = std::min(m, n);
    const double denom = static_cast<double>(m - 1);
    std::vector<double> sym(dim * dim, 0.0);
    if (m <= n) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                double acc = 0.0;
                for (std::size_t d = 0; d < n; ++d) {
                    acc += centered[i * n + d] * centered[j * n + d];
                }
                sym[i * dim + j] = sym[j * dim + i] = acc / denom;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t r = 0; r < m; ++r) {
                    acc += centered[r * n + i] * centered[r * n + j];
                }
                sym[i * dim + j] = sym[j * dim + i] = acc / denom;
            }
        }
    }

    std::vector<double> eig = symmetric_eigenvalues(std::move(sym), dim);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    double total = 0.0;
    for (double& v : eig) {
        if (v < 0.0) v = 0.0;  // rounding can leave tiny negatives
        total += v;
    }
    if (!(total > 0.0)) {
        throw DegenerateData("effective_dimensionality: zero total variance");
    }

    EffectiveDimReport report;
    report.variance_fractions.resize(eig.size());
    for (std::size_t i = 0; i < eig.size(); ++i) {
        report.variance_fractions[i] = eig[i] / total;
    }
    double cumulative = 0.0;
    report.num_components = eig.size();
    for (std::size_t i = 0; i < eig.size(); ++i) {
        cumulative += report.variance_fractions[i];
        if (cumulative >= threshold) {
            report.num_components = i + 1;
            break;
        }
    }
    return report;
}

}  // namespace qdforge
