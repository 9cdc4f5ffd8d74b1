#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "qdforge/genome.hpp"
#include "qdforge/rng.hpp"

namespace qdforge {

struct Evaluation {
    double fitness = 0.0;
    BehaviorDescriptor descriptor;
};

// A deterministic genotype -> (fitness, descriptor) mapping. Evaluations are
// pure and safe to call concurrently. min_fitness() is a finite lower bound
// on any fitness the task can produce, used to shift scores non-negative.
class Task {
public:
    virtual ~Task() = default;
    virtual std::string_view name() const = 0;
    virtual std::size_t genotype_dim() const = 0;
    virtual std::size_t descriptor_dim() const = 0;
    virtual std::span<const Interval> descriptor_bounds() const = 0;
    virtual double min_fitness() const = 0;
    virtual Genotype sample_initial(RngStream& rng) const = 0;
    virtual Evaluation evaluate(const Genotype& genotype) const = 0;
};

// Planar arm with `links` joints, total length 1. Genes are joint angles in
// radians, reduced to [-pi, pi] before use; the descriptor is the end
// effector position and the fitness is the negative population variance of
// the reduced angles, so min_fitness = -pi^2.
struct ArmParams {
    std::size_t links = 8;
    double init_scale = 1.0;  // initializer range is [-pi/links, pi/links] * scale
};

// Negated Rastrigin over genes clamped to [-5.12, 5.12]; the descriptor is
// the first two clamped genes. Clamping bounds the fitness from below by
// -dims * (5.12^2 + 20).
struct RastriginParams {
    std::size_t dims = 10;
};

// A tanh MLP (2 inputs, hidden layers, 2 linear outputs) drives a kinematic
// point from the origin for `steps` steps of size dt, velocity clamped to
// unit norm. Descriptor is the final position clamped to [-1,1]^2, fitness
// the negative mean squared (clamped) velocity, so min_fitness = -1.
// Genotype layout per layer: weights row-major [out][in], then biases.
struct MlpPointParams {
    std::vector<std::size_t> hidden{16, 16};
    std::size_t steps = 50;
    double dt = 0.1;
};

struct TaskSettings {
    ArmParams arm;
    RastriginParams rastrigin;
    MlpPointParams mlp_point;
};

// Number of weights and biases of the mlp_point network.
std::size_t mlp_parameter_count(std::span<const std::size_t> hidden);

// ids: "arm", "rastrigin", "mlp_point". Throws ValidationError for unknown
// ids or out-of-range task parameters.
std::unique_ptr<Task> make_task(std::string_view id, const TaskSettings& settings = {});

}  // namespace qdforge
