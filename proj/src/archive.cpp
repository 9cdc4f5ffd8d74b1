#include "qdforge/archive.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "qdforge/errors.hpp"

namespace qdforge {

CvtArchive::CvtArchive(CentroidSet centroids)
    : centroids_(std::move(centroids)), cells_(centroids_.size()) {}

const ScoredSolution* CvtArchive::cell(std::size_t index) const {
    if (index >= cells_.size()) throw std::out_of_range("CvtArchive::cell: index out of range");
    const auto& slot = cells_[index];
    return slot ? &*slot : nullptr;
}

InsertOutcome CvtArchive::try_insert(ScoredSolution candidate) {
    const std::size_t j = nearest_centroid(candidate.descriptor, centroids_);
    auto& slot = cells_[j];
    if (!slot) {
        slot = std::move(candidate);
        occupied_.insert(std::lower_bound(occupied_.begin(), occupied_.end(), j), j);
        return {InsertOutcome::Kind::NewCell, j, std::nullopt};
    }
    const double incumbent = slot->fitness;
    if (candidate.fitness > incumbent) {
        slot = std::move(candidate);
        return {InsertOutcome::Kind::Improved, j, incumbent};
    }
    return {InsertOutcome::Kind::Discarded, j, incumbent};
}

std::size_t CvtArchive::sample_occupied_cell(RngStream& rng) const {
    if (occupied_.empty()) throw EmptyArchive("sample_occupied_cell: archive is empty");
    return occupied_[rng.uniform_index(occupied_.size())];
}

std::vector<ScoredSolution> CvtArchive::sample_elites(std::size_t n, RngStream& rng) const {
    std::vector<ScoredSolution> elites;
    elites.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        elites.push_back(*cells_[sample_occupied_cell(rng)]);
    }
    return elites;
}

void CvtArchive::write_jsonl(std::ostream& out) const {
    for (std::size_t j : occupied_) {
        const ScoredSolution& sol = *cells_[j];
        const auto c = centroids_.centroid(j);
        nlohmann::json row{
            {"cell_index", j},
            {"centroid", std::vector<double>(c.begin(), c.end())},
            {"fitness", sol.fitness},
            {"descriptor", sol.descriptor},
            {"genotype", sol.genotype},
        };
        out << row.dump() << "\n";
    }
}

CvtArchive read_archive_jsonl(std::istream& in, CentroidSet centroids) {
    CvtArchive archive(std::move(centroids));
    const std::size_t dim = archive.centroids().dim();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
        if (row.is_discarded()) {
            throw ParseError("archive jsonl: invalid JSON at line " + std::to_string(lineno));
        }
        ScoredSolution sol;
        std::size_t cell_index = 0;
        try {
            cell_index = row.at("cell_index").get<std::size_t>();
            sol.fitness = row.at("fitness").get<double>();
            sol.descriptor = row.at("descriptor").get<std::vector<double>>();
            sol.genotype = row.at("genotype").get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("archive jsonl: line " + std::to_string(lineno) + ": " + e.what());
        }
        if (cell_index >= archive.cell_count()) {
            throw ParseError("archive jsonl: cell_index out of range at line " +
                             std::to_string(lineno));
        }
        if (sol.descriptor.size() != dim) {
            throw DimensionMismatch("archive jsonl: descriptor dimension mismatch at line " +
                                    std::to_string(lineno));
        }
        // Re-route through try_insert so invariants hold even for odd inputs;
        // a well-formed file maps each row back to its own cell.
        archive.try_insert(std::move(sol));
    }
    return archive;
}

std::vector<Genotype> read_genotypes_jsonl(std::istream& in) {
    std::vector<Genotype> genotypes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
        if (row.is_discarded()) {
            throw ParseError("archive jsonl: invalid JSON at line " + std::to_string(lineno));
        }
        try {
            genotypes.push_back(row.at("genotype").get<std::vector<double>>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("archive jsonl: line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return genotypes;
}

}  // namespace qdforge
