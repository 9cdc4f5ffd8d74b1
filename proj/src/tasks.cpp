#include "qdforge/tasks.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qdforge/errors.hpp"

namespace qdforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class ArmTask final : public Task {
public:
    explicit ArmTask(const ArmParams& p) : params_(p) {
        if (params_.links < 1) throw ValidationError("arm.links", "must be >= 1");
        if (!std::isfinite(params_.init_scale) || params_.init_scale <= 0.0) {
            throw ValidationError("arm.init_scale", "must be finite and > 0");
        }
    }

    std::string_view name() const override { return "arm"; }
    std::size_t genotype_dim() const override { return params_.links; }
    std::size_t descriptor_dim() const override { return 2; }
    std::span<const Interval> descriptor_bounds() const override { return bounds_; }
    double min_fitness() const override { return -std::numbers::pi * std::numbers::pi; }

    Genotype sample_initial(RngStream& rng) const override {
        const double half = std::numbers::pi / static_cast<double>(params_.links) *
                            params_.init_scale;
        Genotype g(params_.links);
        for (double& v : g) v = -half + rng.uniform() * (2.0 * half);
        return g;
    }

    Evaluation evaluate(const Genotype& genotype) const override {
        if (genotype.size() != params_.links) {
            throw DimensionMismatch("arm: genotype length != links");
        }
        const std::size_t n = params_.links;
        std::vector<double> angles(n);
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            angles[i] = std::remainder(genotype[i], kTwoPi);
            mean += angles[i];
        }
        mean /= static_cast<double>(n);
        double var = 0.0;
        double x = 0.0, y = 0.0, cum = 0.0;
        const double len = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = angles[i] - mean;
            var += d * d;
            cum += angles[i];
            x += len * std::cos(cum);
            y += len * std::sin(cum);
        }
        var /= static_cast<double>(n);
        return {-var, {bounds_[0].clamp(x), bounds_[1].clamp(y)}};
    }

private:
    ArmParams params_;
    std::array<Interval, 2> bounds_{Interval{-1.0, 1.0}, Interval{-1.0, 1.0}};
};

class RastriginTask final : public Task {
public:
    explicit RastriginTask(const RastriginParams& p) : params_(p) {
        if (params_.dims < 2) throw ValidationError("rastrigin.dims", "must be >= 2");
    }

    std::string_view name() const override { return "rastrigin"; }
    std::size_t genotype_dim() const override { return params_.dims; }
    std::size_t descriptor_dim() const override { return 2; }
    std::span<const Interval> descriptor_bounds() const override { return bounds_; }
    double min_fitness() const override {
        return -static_cast<double>(params_.dims) * (5.12 * 5.12 + 20.0);
    }

    Genotype sample_initial(RngStream& rng) const override {
        Genotype g(params_.dims);
        for (double& v : g) v = -5.12 + rng.uniform() * 10.24;
        return g;
    }

    Evaluation evaluate(const Genotype& genotype) const override {
        if (genotype.size() != params_.dims) {
            throw DimensionMismatch("rastrigin: genotype length != dims");
        }
        double acc = 0.0;
        for (double v : genotype) {
            const double c = bounds_[0].clamp(v);
            acc += c * c + 10.0 - 10.0 * std::cos(kTwoPi * c);
        }
        return {-acc, {bounds_[0].clamp(genotype[0]), bounds_[1].clamp(genotype[1])}};
    }

private:
    RastriginParams params_;
    std::array<Interval, 2> bounds_{Interval{-5.12, 5.12}, Interval{-5.12, 5.12}};
};

class MlpPointTask final : public Task {
public:
    explicit MlpPointTask(const MlpPointParams& p)
        : params_(p), dim_(mlp_parameter_count(p.hidden)) {
        if (params_.hidden.empty()) {
            throw ValidationError("mlp_point.hidden", "must have at least one layer");
        }
        for (std::size_t w : params_.hidden) {
            if (w < 1) throw ValidationError("mlp_point.hidden", "widths must be >= 1");
        }
        if (params_.steps < 1) throw ValidationError("mlp_point.steps", "must be >= 1");
        if (!std::isfinite(params_.dt) || params_.dt <= 0.0) {
            throw ValidationError("mlp_point.dt", "must be finite and > 0");
        }
    }

    std::string_view name() const override { return "mlp_point"; }
    std::size_t genotype_dim() const override { return dim_; }
    std::size_t descriptor_dim() const override { return 2; }
    std::span<const Interval> descriptor_bounds() const override { return bounds_; }
    double min_fitness() const override { return -1.0; }

    Genotype sample_initial(RngStream& rng) const override {
        Genotype g(dim_);
        for (double& v : g) v = 0.1 * rng.normal();
        return g;
    }

    Evaluation evaluate(const Genotype& genotype) const override {
        if (genotype.size() != dim_) {
            throw DimensionMismatch("mlp_point: genotype length != parameter count");
        }
        double px = 0.0, py = 0.0;
        double energy = 0.0;
        std::vector<double> in, out;
        for (std::size_t t = 0; t < params_.steps; ++t) {
            forward(genotype, px, py, in, out);
            double vx = out[0], vy = out[1];
            const double n2 = vx * vx + vy * vy;
            if (n2 > 1.0) {
                const double inv = 1.0 / std::sqrt(n2);
                vx *= inv;
                vy *= inv;
            }
            energy += vx * vx + vy * vy;
            px += params_.dt * vx;
            py += params_.dt * vy;
        }
        energy /= static_cast<double>(params_.steps);
        return {-energy, {bounds_[0].clamp(px), bounds_[1].clamp(py)}};
    }

private:
    void forward(const Genotype& w, double px, double py,
                 std::vector<double>& in, std::vector<double>& out) const {
        in.assign({px, py});
        std::size_t offset = 0;
        for (std::size_t width : params_.hidden) {
            out.assign(width, 0.0);
            for (std::size_t o = 0; o < width; ++o) {
                double acc = 0.0;
                for (std::size_t i = 0; i < in.size(); ++i) {
                    acc += w[offset + o * in.size() + i] * in[i];
                }
                out[o] = std::tanh(acc + w[offset + width * in.size() + o]);
            }
            offset += width * in.size() + width;
            in.swap(out);
        }
        out.assign(2, 0.0);
        for (std::size_t o = 0; o < 2; ++o) {
            double acc = 0.0;
            for (std::size_t i = 0; i < in.size(); ++i) {
                acc += w[offset + o * in.size() + i] * in[i];
            }
            out[o] = acc + w[offset + 2 * in.size() + o];
        }
    }

    MlpPointParams params_;
    std::size_t dim_;
    std::array<Interval, 2> bounds_{Interval{-1.0, 1.0}, Interval{-1.0, 1.0}};
};

}  // namespace

std::size_t mlp_parameter_count(std::span<const std::size_t> hidden) {
    std::size_t in = 2;
    std::size_t count = 0;
    for (std::size_t width : hidden) {
        count += width * in + width;
        in = width;
    }
    return count + 2 * in + 2;
}

std::unique_ptr<Task> make_task(std::string_view id, const TaskSettings& settings) {
    if (id == "arm") return std::make_unique<ArmTask>(settings.arm);
    if (id == "rastrigin") return std::make_unique<RastriginTask>(settings.rastrigin);
    if (id == "mlp_point") return std::make_unique<MlpPointTask>(settings.mlp_point);
    throw ValidationError("task", "unknown task id: " + std::string(id));
}

}  // namespace qdforge
