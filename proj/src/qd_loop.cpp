#include "qdforge/qd_loop.hpp"

#include <utility>

#include "qdforge/errors.hpp"

namespace qdforge {

namespace {

std::size_t initial_population_size(const RunConfig& config) {
    return config.initial_population > 0 ? config.initial_population : config.batch_size;
}

// Module boundary guard: nothing unvalidated reaches the archive.
void check_solution(const ScoredSolution& sol, const Task& task) {
    switch (validate(sol, task.genotype_dim(), task.descriptor_dim())) {
        case ValidateStatus::Ok:
            return;
        case ValidateStatus::DimensionMismatch:
            throw DimensionMismatch("solution dimensions disagree with task");
        case ValidateStatus::NonFiniteValue:
            throw NonFiniteValue("solution contains a non-finite value");
    }
}

double insertion_delta(const InsertOutcome& outcome, double fitness, double min_fitness) {
    switch (outcome.kind) {
        case InsertOutcome::Kind::NewCell:
            return fitness - min_fitness;
        case InsertOutcome::Kind::Improved:
            return fitness - *outcome.previous_fitness;
        case InsertOutcome::Kind::Discarded:
            return 0.0;
    }
    return 0.0;
}

}  // namespace

void validate_run_config(const RunConfig& config) {
    if (config.batch_size < 1) throw ValidationError("batch_size", "must be >= 1");
    if (config.centroids < 1) throw ValidationError("centroids", "must be >= 1");
    if (config.cvt_samples < config.centroids) {
        throw ValidationError("cvt_samples", "must be >= centroids");
    }
    make_operator(config.op.kind, config.op.params);
    make_task(config.task, config.task_settings);
}

GenerationReport initialize(CvtArchive& archive, const RunConfig& config, const Task& task) {
    GenerationReport report;
    const std::size_t population = initial_population_size(config);
    for (std::size_t i = 0; i < population; ++i) {
        RngStream stream(child_seed(config.seed, kStreamInit, i));
        ScoredSolution sol;
        sol.genotype = task.sample_initial(stream);
        Evaluation eval = task.evaluate(sol.genotype);
        sol.fitness = eval.fitness;
        sol.descriptor = std::move(eval.descriptor);
        check_solution(sol, task);
        const double fitness = sol.fitness;
        const InsertOutcome outcome = archive.try_insert(std::move(sol));
        if (outcome.kind != InsertOutcome::Kind::Discarded) {
            report.offspring_added += 1;
            report.qd_score_added += insertion_delta(outcome, fitness, task.min_fitness());
        }
    }
    report.offspring_evaluated = population;
    return report;
}

GenerationReport step(CvtArchive& archive, const RunConfig& config, const Task& task,
                      std::size_t generation) {
    if (archive.occupied_count() == 0) throw EmptyArchive("step: archive is empty");
    const std::vector<std::size_t>& occupied = archive.occupied_cells();

    std::vector<ScoredSolution> offspring(config.batch_size);
    for (std::size_t b = 0; b < config.batch_size; ++b) {
        RngStream stream(child_seed(config.seed, kStreamOffspring, generation, b));
        const std::size_t cell_i = occupied[stream.uniform_index(occupied.size())];
        const std::size_t cell_j = occupied[stream.uniform_index(occupied.size())];
        ScoredSolution& sol = offspring[b];
        sol.genotype = vary(config.op, archive.cell(cell_i)->genotype,
                            archive.cell(cell_j)->genotype, stream);
        Evaluation eval = task.evaluate(sol.genotype);
        sol.fitness = eval.fitness;
        sol.descriptor = std::move(eval.descriptor);
        check_solution(sol, task);
    }

    GenerationReport report;
    report.generation = generation;
    report.offspring_evaluated = config.batch_size;
    for (ScoredSolution& sol : offspring) {
        const double fitness = sol.fitness;
        const InsertOutcome outcome = archive.try_insert(std::move(sol));
        if (outcome.kind != InsertOutcome::Kind::Discarded) {
            report.offspring_added += 1;
            report.qd_score_added += insertion_delta(outcome, fitness, task.min_fitness());
        }
    }
    return report;
}

RunResult run(const RunConfig& config, const RunHooks& hooks) {
    validate_run_config(config);
    const std::unique_ptr<Task> task = make_task(config.task, config.task_settings);

    CentroidSet centroids =
        hooks.centroids
            ? *hooks.centroids
            : build_centroids(config.centroids, config.cvt_samples,
                              task->descriptor_bounds(), config.cvt_seed);
    if (centroids.dim() != task->descriptor_dim() || centroids.size() != config.centroids) {
        throw DimensionMismatch("run: supplied centroids do not match the configured task");
    }

    RunResult result{CvtArchive(std::move(centroids)), {}, {}, {}};
    result.init = initialize(result.archive, config, *task);
    result.reports.reserve(config.generations);
    result.metrics.reserve(config.generations);

    for (std::size_t g = 1; g <= config.generations; ++g) {
        GenerationReport report = step(result.archive, config, *task, g);
        MetricsRecord record;
        record.generation = g;
        record.qd_score = qd_score(result.archive, task->min_fitness());
        record.coverage = coverage(result.archive);
        record.max_fitness = max_fitness(result.archive);
        record.offspring_added = report.offspring_added;
        record.qd_score_added = report.qd_score_added;
        result.reports.push_back(report);
        result.metrics.push_back(record);
        if (hooks.snapshot && hooks.snapshot_every > 0 && g % hooks.snapshot_every == 0) {
            hooks.snapshot(g, result.archive);
        }
    }
    return result;
}

}  // namespace qdforge
