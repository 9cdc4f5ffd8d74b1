#include "qdforge/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "qdforge/errors.hpp"
#include "qdforge/io.hpp"

namespace qdforge {

namespace {

using nlohmann::json;

std::uint64_t as_u64(const json& v, const std::string& field) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    throw ValidationError(field, "must be a non-negative integer");
}

double as_double(const json& v, const std::string& field) {
    if (!v.is_number()) throw ValidationError(field, "must be a number");
    return v.get<double>();
}

std::string as_string(const json& v, const std::string& field) {
    if (!v.is_string()) throw ValidationError(field, "must be a string");
    return v.get<std::string>();
}

std::vector<std::string> as_string_list(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) throw ValidationError(field, "must be a nonempty array");
    std::vector<std::string> out;
    for (const json& item : v) out.push_back(as_string(item, field));
    return out;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& prefix) {
    for (const auto& item : obj.items()) {
        if (!known.count(item.key())) {
            throw ValidationError(prefix + item.key(), "unknown key");
        }
    }
}

// Accepts either a scalar under `one` or an array under `many`, not both.
const json* pick_form(const json& root, const char* one, const char* many,
                      bool& plural) {
    const bool has_one = root.contains(one);
    const bool has_many = root.contains(many);
    if (has_one && has_many) {
        throw ValidationError(many, std::string("use ") + one + " or " + many + ", not both");
    }
    plural = has_many;
    if (has_one) return &root.at(one);
    if (has_many) return &root.at(many);
    return nullptr;
}

void parse_task_settings(const json& root, TaskSettings& settings) {
    if (root.contains("arm")) {
        const json& arm = root.at("arm");
        if (!arm.is_object()) throw ValidationError("arm", "must be an object");
        reject_unknown_keys(arm, {"links", "init_scale"}, "arm.");
        if (arm.contains("links")) {
            settings.arm.links = as_u64(arm.at("links"), "arm.links");
        }
        if (arm.contains("init_scale")) {
            settings.arm.init_scale = as_double(arm.at("init_scale"), "arm.init_scale");
        }
    }
    if (root.contains("rastrigin")) {
        const json& ras = root.at("rastrigin");
        if (!ras.is_object()) throw ValidationError("rastrigin", "must be an object");
        reject_unknown_keys(ras, {"dims"}, "rastrigin.");
        if (ras.contains("dims")) {
            settings.rastrigin.dims = as_u64(ras.at("dims"), "rastrigin.dims");
        }
    }
    if (root.contains("mlp_point")) {
        const json& mlp = root.at("mlp_point");
        if (!mlp.is_object()) throw ValidationError("mlp_point", "must be an object");
        reject_unknown_keys(mlp, {"hidden", "steps", "dt"}, "mlp_point.");
        if (mlp.contains("hidden")) {
            const json& hidden = mlp.at("hidden");
            if (!hidden.is_array() || hidden.empty()) {
                throw ValidationError("mlp_point.hidden", "must be a nonempty array");
            }
            settings.mlp_point.hidden.clear();
            for (const json& w : hidden) {
                settings.mlp_point.hidden.push_back(as_u64(w, "mlp_point.hidden"));
            }
        }
        if (mlp.contains("steps")) {
            settings.mlp_point.steps = as_u64(mlp.at("steps"), "mlp_point.steps");
        }
        if (mlp.contains("dt")) {
            settings.mlp_point.dt = as_double(mlp.at("dt"), "mlp_point.dt");
        }
    }
}

}  // namespace

std::uint64_t seed_offset_from_env() {
    const char* value = std::getenv("QDFORGE_SEED_OFFSET");
    if (!value || *value == '\0') return 0;
    return parse_u64(value, "QDFORGE_SEED_OFFSET");
}

ExperimentSpec parse_config_json(const std::string& text, std::uint64_t seed_offset) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("config: top level must be a JSON object");

    static const std::set<std::string> known = {
        "task", "tasks", "operator", "operators", "seed", "seeds",
        "generations", "batch_size", "centroids", "cvt_samples", "cvt_seed",
        "initial_population", "sigma_iso", "sigma_line", "lambda_cross", "p_cross",
        "out", "snapshot_every", "arm", "rastrigin", "mlp_point",
    };
    reject_unknown_keys(root, known, "");

    ExperimentSpec spec;
    bool plural = false;

    const json* task_node = pick_form(root, "task", "tasks", plural);
    if (!task_node) throw ValidationError("task", "required");
    spec.tasks = plural ? as_string_list(*task_node, "tasks")
                        : std::vector<std::string>{as_string(*task_node, "task")};

    const json* op_node = pick_form(root, "operator", "operators", plural);
    if (!op_node) throw ValidationError("operator", "required");
    const std::vector<std::string> op_ids =
        plural ? as_string_list(*op_node, "operators")
               : std::vector<std::string>{as_string(*op_node, "operator")};
    for (const std::string& id : op_ids) {
        spec.operators.push_back(operator_kind_from_id(id));
    }

    const json* seed_node = pick_form(root, "seed", "seeds", plural);
    if (!seed_node) throw ValidationError("seed", "required");
    if (plural) {
        if (!seed_node->is_array() || seed_node->empty()) {
            throw ValidationError("seeds", "must be a nonempty array");
        }
        for (const json& s : *seed_node) spec.seeds.push_back(as_u64(s, "seeds"));
    } else {
        spec.seeds.push_back(as_u64(*seed_node, "seed"));
    }
    std::unordered_set<std::uint64_t> distinct(spec.seeds.begin(), spec.seeds.end());
    if (distinct.size() != spec.seeds.size()) {
        throw ValidationError("seeds", "seeds must be distinct");
    }
    for (std::uint64_t& s : spec.seeds) s += seed_offset;

    if (!root.contains("generations")) throw ValidationError("generations", "required");
    spec.base.generations = as_u64(root.at("generations"), "generations");
    if (spec.base.generations < 1) throw ValidationError("generations", "must be >= 1");

    if (root.contains("batch_size")) {
        spec.base.batch_size = as_u64(root.at("batch_size"), "batch_size");
        if (spec.base.batch_size < 1) throw ValidationError("batch_size", "must be >= 1");
    }
    if (root.contains("centroids")) {
        spec.base.centroids = as_u64(root.at("centroids"), "centroids");
        if (spec.base.centroids < 1) throw ValidationError("centroids", "must be >= 1");
    }
    if (root.contains("cvt_samples")) {
        spec.base.cvt_samples = as_u64(root.at("cvt_samples"), "cvt_samples");
    }
    if (spec.base.cvt_samples < spec.base.centroids) {
        throw ValidationError("cvt_samples", "must be >= centroids");
    }
    if (root.contains("cvt_seed")) {
        spec.base.cvt_seed = as_u64(root.at("cvt_seed"), "cvt_seed");
    }
    if (root.contains("initial_population")) {
        spec.base.initial_population = as_u64(root.at("initial_population"),
                                              "initial_population");
        if (spec.base.initial_population < 1) {
            throw ValidationError("initial_population", "must be >= 1");
        }
    }

    OperatorParams params;
    if (root.contains("sigma_iso")) params.sigma_iso = as_double(root.at("sigma_iso"), "sigma_iso");
    if (root.contains("sigma_line")) {
        params.sigma_line = as_double(root.at("sigma_line"), "sigma_line");
    }
    if (root.contains("lambda_cross")) {
        params.lambda_cross = as_double(root.at("lambda_cross"), "lambda_cross");
    }
    if (root.contains("p_cross")) params.p_cross = as_double(root.at("p_cross"), "p_cross");
    spec.base.op.params = params;
    for (OperatorKind kind : spec.operators) {
        make_operator(kind, params);  // range checks per operator
    }

    parse_task_settings(root, spec.base.task_settings);
    for (const std::string& id : spec.tasks) {
        make_task(id, spec.base.task_settings);  // validates id and task params
    }

    if (root.contains("out")) spec.out_dir = as_string(root.at("out"), "out");
    if (root.contains("snapshot_every")) {
        spec.snapshot_every = as_u64(root.at("snapshot_every"), "snapshot_every");
    }
    return spec;
}

ExperimentSpec parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_json(buffer.str(), seed_offset_from_env());
}

std::vector<RunConfig> expand_grid(const ExperimentSpec& spec) {
    std::vector<RunConfig> runs;
    runs.reserve(spec.tasks.size() * spec.operators.size() * spec.seeds.size());
    for (const std::string& task : spec.tasks) {
        for (OperatorKind kind : spec.operators) {
            for (std::uint64_t seed : spec.seeds) {
                RunConfig config = spec.base;
                config.task = task;
                config.op = make_operator(kind, spec.base.op.params);
                config.seed = seed;
                runs.push_back(std::move(config));
            }
        }
    }
    return runs;
}

std::string canonical_config_json(const RunConfig& config) {
    json task_params;
    if (config.task == "arm") {
        task_params = {{"links", config.task_settings.arm.links},
                       {"init_scale", config.task_settings.arm.init_scale}};
    } else if (config.task == "rastrigin") {
        task_params = {{"dims", config.task_settings.rastrigin.dims}};
    } else if (config.task == "mlp_point") {
        task_params = {{"hidden", config.task_settings.mlp_point.hidden},
                       {"steps", config.task_settings.mlp_point.steps},
                       {"dt", config.task_settings.mlp_point.dt}};
    }
    const std::size_t initial = config.initial_population > 0 ? config.initial_population
                                                              : config.batch_size;
    const json doc = {
        {"task", config.task},
        {"task_params", task_params},
        {"operator", std::string(operator_id(config.op.kind))},
        {"sigma_iso", config.op.params.sigma_iso},
        {"sigma_line", config.op.params.sigma_line},
        {"lambda_cross", config.op.params.lambda_cross},
        {"p_cross", config.op.params.p_cross},
        {"seed", config.seed},
        {"generations", config.generations},
        {"batch_size", config.batch_size},
        {"centroids", config.centroids},
        {"cvt_samples", config.cvt_samples},
        {"cvt_seed", config.cvt_seed},
        {"initial_population", initial},
    };
    return doc.dump();
}

}  // namespace qdforge
