#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qdforge/cvt.hpp"
#include "qdforge/genome.hpp"
#include "qdforge/rng.hpp"

namespace qdforge {

// Result of offering a solution to the archive.
struct InsertOutcome {
    enum class Kind { NewCell, Improved, Discarded };
    Kind kind = Kind::Discarded;
    std::size_t cell = 0;
    // Fitness of the elite previously occupying the cell; unset for NewCell.
    std::optional<double> previous_fitness;
};

// Elite-per-niche archive over a fixed centroidal tessellation. Each cell
// holds at most one solution; a candidate replaces the incumbent only on
// strict fitness improvement.
class CvtArchive {
public:
    explicit CvtArchive(CentroidSet centroids);

    std::size_t cell_count() const { return cells_.size(); }
    std::size_t occupied_count() const { return occupied_.size(); }
    const CentroidSet& centroids() const { return centroids_; }

    // Occupied cell indices, always sorted ascending.
    const std::vector<std::size_t>& occupied_cells() const { return occupied_; }

    // nullptr when the cell is empty. Throws std::out_of_range for bad index.
    const ScoredSolution* cell(std::size_t index) const;

    // Routes the candidate to its nearest centroid and applies the
    // strict-improvement rule. The candidate's descriptor dimension must
    // match the tessellation.
    InsertOutcome try_insert(ScoredSolution candidate);

    // Uniform over occupied cells. Throws EmptyArchive when none are.
    std::size_t sample_occupied_cell(RngStream& rng) const;

    // n elites drawn uniformly with replacement from occupied cells.
    std::vector<ScoredSolution> sample_elites(std::size_t n, RngStream& rng) const;

    // One JSON object per line, ascending cell index.
    void write_jsonl(std::ostream& out) const;

private:
    CentroidSet centroids_;
    std::vector<std::optional<ScoredSolution>> cells_;
    std::vector<std::size_t> occupied_;
};

// Rebuilds an archive from its JSONL serialization. Throws ParseError on
// malformed input and DimensionMismatch when rows disagree with the
// tessellation.
CvtArchive read_archive_jsonl(std::istream& in, CentroidSet centroids);

// Just the genotype column of an archive serialization, in file order.
std::vector<Genotype> read_genotypes_jsonl(std::istream& in);

}  // namespace qdforge
