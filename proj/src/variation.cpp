#include "qdforge/variation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdforge/errors.hpp"

namespace qdforge {

namespace {

void check_finite_nonneg(double v, const char* field) {
    if (!std::isfinite(v) || v < 0.0) {
        throw ValidationError(field, "must be finite and >= 0");
    }
}

// base + sigma_iso * eps + sigma_line * (other - base) * s, componentwise.
// Swapping base and other flips the line term's direction, which is how the
// second offspring of a crossing operator moves opposite the first.
Genotype line_step(const Genotype& base, const Genotype& other, double sigma_iso,
                   double sigma_line, std::span<const double> eps, double s) {
    Genotype out(base.size());
    for (std::size_t d = 0; d < base.size(); ++d) {
        out[d] = base[d] + sigma_iso * eps[d] + sigma_line * (other[d] - base[d]) * s;
    }
    return out;
}

}  // namespace

std::string_view operator_id(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Iso: return "iso";
        case OperatorKind::IsoLineDd: return "iso_line_dd";
        case OperatorKind::IsoCross: return "iso_cross";
        case OperatorKind::IsoLineCross: return "iso_line_cross";
    }
    throw std::invalid_argument("operator_id: unknown kind");
}

OperatorKind operator_kind_from_id(std::string_view id) {
    if (id == "iso") return OperatorKind::Iso;
    if (id == "iso_line_dd") return OperatorKind::IsoLineDd;
    if (id == "iso_cross") return OperatorKind::IsoCross;
    if (id == "iso_line_cross") return OperatorKind::IsoLineCross;
    throw ValidationError("operator", "unknown operator id: " + std::string(id));
}

VariationOperator make_operator(OperatorKind kind, OperatorParams params) {
    check_finite_nonneg(params.sigma_iso, "sigma_iso");
    check_finite_nonneg(params.sigma_line, "sigma_line");
    check_finite_nonneg(params.lambda_cross, "lambda_cross");
    if (!std::isfinite(params.p_cross) || params.p_cross < 0.0 || params.p_cross > 1.0) {
        throw ValidationError("p_cross", "must be in [0, 1]");
    }
    if (kind == OperatorKind::Iso || kind == OperatorKind::IsoCross) {
        params.sigma_line = 0.0;
    }
    return {kind, params};
}

std::size_t mask_event_count(std::size_t n, double lambda) {
    if (n == 0) throw std::invalid_argument("mask_event_count: n must be >= 1");
    const double events = std::floor(lambda * static_cast<double>(n));
    return events < 1.0 ? 1 : static_cast<std::size_t>(events);
}

std::vector<std::uint8_t> mask_from_gaps(std::span<const double> gaps, std::size_t n) {
    if (n == 0) throw std::invalid_argument("mask_from_gaps: n must be >= 1");
    if (gaps.empty()) throw std::invalid_argument("mask_from_gaps: gaps must be nonempty");
    double total = 0.0;
    std::vector<std::size_t> flips_at(n, 0);
    for (double g : gaps) {
        if (!std::isfinite(g) || g < 0.0) {
            throw std::invalid_argument("mask_from_gaps: gaps must be finite and >= 0");
        }
        total += g;
    }
    if (!(total > 0.0)) throw std::invalid_argument("mask_from_gaps: total gap length must be > 0");
    double cum = 0.0;
    for (double g : gaps) {
        cum += g;
        std::size_t z = static_cast<std::size_t>(
            std::floor((cum / total) * static_cast<double>(n - 1)));
        if (z > n - 1) z = n - 1;  // guard against rounding above the end
        flips_at[z] += 1;
    }
    std::vector<std::uint8_t> mask(n);
    std::size_t parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
        parity += flips_at[j];
        mask[j] = static_cast<std::uint8_t>(1 - (parity % 2));
    }
    return mask;
}

std::vector<std::uint8_t> generate_mask(std::size_t n, double lambda, RngStream& rng) {
    const std::size_t k = mask_event_count(n, lambda);
    std::vector<double> gaps(k);
    for (double& g : gaps) g = rng.exponential();
    return mask_from_gaps(gaps, n);
}

Genotype iso_mutate(const Genotype& x, double sigma_iso, RngStream& rng) {
    Genotype out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        out[d] = x[d] + sigma_iso * rng.normal();
    }
    return out;
}

Genotype line_dd_mutate(const Genotype& x_i, const Genotype& x_j,
                        double sigma_iso, double sigma_line, RngStream& rng) {
    if (x_i.size() != x_j.size()) {
        throw DimensionMismatch("line_dd_mutate: parent dimensions differ");
    }
    std::vector<double> eps(x_i.size());
    for (double& e : eps) e = rng.normal();
    const double s = rng.normal();
    return line_step(x_i, x_j, sigma_iso, sigma_line, eps, s);
}

Genotype crossover(const Genotype& a, const Genotype& b,
                   std::span<const std::uint8_t> mask) {
    if (a.size() != b.size() || a.size() != mask.size()) {
        throw DimensionMismatch("crossover: parent and mask dimensions differ");
    }
    Genotype out(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) {
        out[d] = mask[d] ? a[d] : b[d];
    }
    return out;
}

Genotype vary(const VariationOperator& op, const Genotype& parent_i,
              const Genotype& parent_j, RngStream& rng) {
    if (parent_i.empty() || parent_i.size() != parent_j.size()) {
        throw DimensionMismatch("vary: parents must be nonempty and equal-dimensional");
    }
    const OperatorParams& p = op.params;
    switch (op.kind) {
        case OperatorKind::Iso:
            return iso_mutate(parent_i, p.sigma_iso, rng);
        case OperatorKind::IsoLineDd:
            return line_dd_mutate(parent_i, parent_j, p.sigma_iso, p.sigma_line, rng);
        case OperatorKind::IsoCross:
        case OperatorKind::IsoLineCross:
            break;
    }

    const std::size_t n = parent_i.size();
    std::vector<double> eps_a(n);
    for (double& e : eps_a) e = rng.normal();
    const double s = rng.normal();
    std::vector<double> eps_b(n);
    for (double& e : eps_b) e = rng.normal();
    const Genotype x_a = line_step(parent_i, parent_j, p.sigma_iso, p.sigma_line, eps_a, s);
    const Genotype x_b = line_step(parent_j, parent_i, p.sigma_iso, p.sigma_line, eps_b, s);
    // The mask is drawn even when no swap happens, so stream usage per
    // offspring does not depend on the p_cross outcome.
    const std::vector<std::uint8_t> mask = generate_mask(n, p.lambda_cross, rng);
    const double u = rng.uniform();
    if (u < p.p_cross) {
        return crossover(x_a, x_b, mask);
    }
    return x_a;
}

}  // namespace qdforge
