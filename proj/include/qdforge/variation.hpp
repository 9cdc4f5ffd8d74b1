#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qdforge/genome.hpp"
#include "qdforge/rng.hpp"

namespace qdforge {

enum class OperatorKind { Iso, IsoLineDd, IsoCross, IsoLineCross };

// Stable string ids used in configs and output paths.
std::string_view operator_id(OperatorKind kind);
OperatorKind operator_kind_from_id(std::string_view id);  // throws ValidationError

struct OperatorParams {
    double sigma_iso = 0.005;
    double sigma_line = 0.05;
    double lambda_cross = 0.1;
    double p_cross = 0.5;
};

struct VariationOperator {
    OperatorKind kind = OperatorKind::Iso;
    OperatorParams params;
};

// Validates parameter ranges (throws ValidationError naming the field) and
// pins sigma_line to 0 for the operators that have no line component.
VariationOperator make_operator(OperatorKind kind, OperatorParams params = {});

// Number of crossover events for an N-gene genome: max(1, floor(lambda * N)).
std::size_t mask_event_count(std::size_t n, double lambda);

// Deterministic part of mask construction. Gap lengths are accumulated,
// rescaled onto gene positions 0..n-1, and each event flips the mask parity
// from its position onward; the mask starts at 1. Coincident events cancel
// in pairs. The last event always lands on position n-1.
std::vector<std::uint8_t> mask_from_gaps(std::span<const double> gaps, std::size_t n);

// Draws max(1, floor(lambda*n)) unit-exponential gaps and builds the mask.
std::vector<std::uint8_t> generate_mask(std::size_t n, double lambda, RngStream& rng);

// x + sigma_iso * N(0, I). Draws n normals.
Genotype iso_mutate(const Genotype& x, double sigma_iso, RngStream& rng);

// x_i + sigma_iso * N(0, I) + sigma_line * (x_j - x_i) * s with a single
// scalar s ~ N(0, 1) shared across genes. Draws n normals, then s.
Genotype line_dd_mutate(const Genotype& x_i, const Genotype& x_j,
                        double sigma_iso, double sigma_line, RngStream& rng);

// Gene j comes from `a` where mask[j] == 1, from `b` where it is 0.
Genotype crossover(const Genotype& a, const Genotype& b,
                   std::span<const std::uint8_t> mask);

// Produces one offspring from a parent pair. Iso and IsoLineDd ignore the
// second parent's stream draws entirely; the crossing operators mutate both
// parents toward each other, draw a mask, and swap genes with probability
// p_cross, returning the first offspring. Draw order is fixed so that with
// p_cross = 0 the crossing operators reproduce IsoLineDd (and, with
// sigma_line = 0, Iso) bit for bit from the same stream state.
Genotype vary(const VariationOperator& op, const Genotype& parent_i,
              const Genotype& parent_j, RngStream& rng);

}  // namespace qdforge
