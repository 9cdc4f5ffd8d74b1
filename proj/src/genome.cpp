#include "qdforge/genome.hpp"

#include <cmath>

namespace qdforge {

const char* to_string(ValidateStatus status) {
    switch (status) {
        case ValidateStatus::Ok: return "ok";
        case ValidateStatus::DimensionMismatch: return "dimension mismatch";
        case ValidateStatus::NonFiniteValue: return "non-finite value";
    }
    return "unknown";
}

ValidateStatus validate(const ScoredSolution& solution, std::size_t genotype_dim,
                        std::size_t descriptor_dim) {
    for (double g : solution.genotype) {
        if (!std::isfinite(g)) return ValidateStatus::NonFiniteValue;
    }
    for (double d : solution.descriptor) {
        if (!std::isfinite(d)) return ValidateStatus::NonFiniteValue;
    }
    if (!std::isfinite(solution.fitness)) return ValidateStatus::NonFiniteValue;
    if (solution.genotype.empty() || solution.genotype.size() != genotype_dim ||
        solution.descriptor.size() != descriptor_dim) {
        return ValidateStatus::DimensionMismatch;
    }
    return ValidateStatus::Ok;
}

}  // namespace qdforge
