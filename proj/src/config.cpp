#include "camiq/config.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <unistd.h>

#include <json.hpp>

namespace camiq {

using nlohmann::json;
namespace fs = std::filesystem;

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::static_priorities: return "static";
        case Scenario::single_shift: return "single_shift";
        case Scenario::multi_shift: return "multi_shift";
    }
    throw std::invalid_argument("unknown scenario");
}

Scenario scenario_from_string(const std::string& name) {
    if (name == "static") return Scenario::static_priorities;
    if (name == "single_shift") return Scenario::single_shift;
    if (name == "multi_shift") return Scenario::multi_shift;
    throw std::invalid_argument("unknown scenario '" + name +
                                "' (expected static|single_shift|multi_shift)");
}

std::string to_string(AgentSelection s) {
    switch (s) {
        case AgentSelection::baseline: return "baseline";
        case AgentSelection::baseline_boosted: return "baseline_boosted";
        case AgentSelection::camiq: return "camiq";
        case AgentSelection::all: return "all";
    }
    throw std::invalid_argument("unknown agent selection");
}

AgentSelection agent_selection_from_string(const std::string& name) {
    if (name == "baseline") return AgentSelection::baseline;
    if (name == "baseline_boosted") return AgentSelection::baseline_boosted;
    if (name == "camiq") return AgentSelection::camiq;
    if (name == "all") return AgentSelection::all;
    throw std::invalid_argument("unknown agent '" + name +
                                "' (expected baseline|baseline_boosted|camiq|all)");
}

void RunConfig::validate() const {
    if (runs < 1) throw std::runtime_error("config: runs >= 1");
    if (episodes < 1) throw std::runtime_error("config: episodes >= 1");
    if (workers < 1) throw std::runtime_error("config: workers >= 1");
    rewards.validate();
    learning.validate();
    weights.validate();
    adapt.validate();
    recovery.validate();
    EpsilonSchedule schedule;
    schedule.eps0 = eps0;
    schedule.eps_min = eps_min;
    schedule.horizon = episodes;
    schedule.validate();
    parse_ordering(initial_ordering);
    if (shifts) {
        for (const auto& [episode, ordering] : *shifts) parse_ordering(ordering);
    }
}

namespace {

class StrictObject {
public:
    StrictObject(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object())
            throw std::runtime_error("config: " + path_ + " must be an object");
    }

    ~StrictObject() = default;

    template <typename T>
    void get(const char* key, T& out) {
        if (!j_.contains(key)) return;
        seen_.push_back(key);
        try {
            out = j_.at(key).get<T>();
        } catch (const json::exception&) {
            throw std::runtime_error("config: bad value type for key '" + join(key) + "'");
        }
    }

    bool has(const char* key) const { return j_.contains(key); }

    const json& raw(const char* key) {
        seen_.push_back(key);
        return j_.at(key);
    }

    void finish() const {
        for (const auto& [key, value] : j_.items()) {
            if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
                throw std::runtime_error("config: unknown key '" + join(key) + "'");
        }
    }

private:
    std::string join(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    const json& j_;
    std::string path_;
    std::vector<std::string> seen_;
};

}  // namespace

RunConfig parse_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config: malformed JSON: ") + e.what());
    }

    RunConfig cfg;
    StrictObject root(j, "");

    std::string scenario = to_string(cfg.scenario);
    std::string agent = to_string(cfg.agent);
    root.get("scenario", scenario);
    root.get("agent", agent);
    cfg.scenario = scenario_from_string(scenario);
    cfg.agent = agent_selection_from_string(agent);

    root.get("runs", cfg.runs);
    root.get("episodes", cfg.episodes);
    root.get("seed", cfg.seed);
    root.get("out", cfg.out_dir);
    root.get("workers", cfg.workers);
    root.get("pool", cfg.pool_path);
    root.get("initial_ordering", cfg.initial_ordering);
    root.get("save_metrics", cfg.save_metrics);

    if (root.has("shifts")) {
        const json& js = root.raw("shifts");
        if (!js.is_array()) throw std::runtime_error("config: 'shifts' must be an array");
        std::vector<std::pair<int, std::string>> shifts;
        for (const auto& item : js) {
            if (!item.is_array() || item.size() != 2)
                throw std::runtime_error(
                    "config: each shift must be [episode, ordering]");
            shifts.emplace_back(item.at(0).get<int>(), item.at(1).get<std::string>());
        }
        cfg.shifts = std::move(shifts);
    }

    if (root.has("rewards")) {
        StrictObject o(root.raw("rewards"), "rewards");
        o.get("step_cost", cfg.rewards.step_cost);
        o.get("ditch_penalty", cfg.rewards.ditch_penalty);
        o.get("collect_reward", cfg.rewards.collect_reward);
        o.get("out_of_order_penalty", cfg.rewards.out_of_order_penalty);
        o.get("mission_reward", cfg.rewards.mission_reward);
        o.get("action_limit_penalty", cfg.rewards.action_limit_penalty);
        o.get("collect_attempt_limit", cfg.rewards.collect_attempt_limit);
        o.get("step_limit", cfg.rewards.step_limit);
        o.finish();
    }
    if (root.has("learning")) {
        StrictObject o(root.raw("learning"), "learning");
        o.get("alpha", cfg.learning.alpha);
        o.get("gamma", cfg.learning.gamma);
        o.finish();
    }
    if (root.has("intrinsic")) {
        StrictObject o(root.raw("intrinsic"), "intrinsic");
        o.get("beta_novelty", cfg.weights.beta_novelty);
        o.get("beta_info", cfg.weights.beta_info);
        o.get("beta_align_pos", cfg.weights.beta_align_pos);
        o.get("beta_align_neg", cfg.weights.beta_align_neg);
        o.get("w_novelty", cfg.weights.w_novelty);
        o.get("w_info", cfg.weights.w_info);
        o.get("w_align", cfg.weights.w_align);
        o.finish();
    }
    if (root.has("adaptation")) {
        StrictObject o(root.raw("adaptation"), "adaptation");
        o.get("lambda_boost", cfg.adapt.lambda_boost);
        o.get("eps_max", cfg.adapt.eps_max);
        o.get("d_boost", cfg.adapt.d_boost);
        o.get("lambda_reset", cfg.adapt.lambda_reset);
        o.get("detector_window", cfg.adapt.detector_window);
        o.get("detector_drop", cfg.adapt.detector_drop);
        if (o.has("mode")) {
            std::string mode;
            o.get("mode", mode);
            cfg.adapt.mode = detection_mode_from_string(mode);
        }
        o.finish();
    }
    if (root.has("schedule")) {
        StrictObject o(root.raw("schedule"), "schedule");
        o.get("eps0", cfg.eps0);
        o.get("eps_min", cfg.eps_min);
        o.finish();
    }
    if (root.has("recovery")) {
        StrictObject o(root.raw("recovery"), "recovery");
        o.get("window", cfg.recovery.window);
        o.get("fraction", cfg.recovery.fraction);
        o.finish();
    }
    if (root.has("ablation")) {
        StrictObject o(root.raw("ablation"), "ablation");
        o.get("disable_novelty", cfg.ablation.disable_novelty);
        o.get("disable_priority_components", cfg.ablation.disable_priority_components);
        o.get("disable_boost", cfg.ablation.disable_boost);
        o.get("disable_reset", cfg.ablation.disable_reset);
        if (o.has("reset_scope")) {
            std::string scope;
            o.get("reset_scope", scope);
            cfg.ablation.reset_scope = reset_scope_from_string(scope);
        }
        o.finish();
    }
    root.finish();
    cfg.validate();
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    return parse_config_text(read_file(path));
}

std::string config_to_json(const RunConfig& cfg) {
    json j;
    j["scenario"] = to_string(cfg.scenario);
    j["agent"] = to_string(cfg.agent);
    j["runs"] = cfg.runs;
    j["episodes"] = cfg.episodes;
    j["seed"] = cfg.seed;
    j["out"] = cfg.out_dir;
    j["workers"] = cfg.workers;
    j["pool"] = cfg.pool_path;
    j["initial_ordering"] = cfg.initial_ordering;
    j["save_metrics"] = cfg.save_metrics;
    if (cfg.shifts) {
        json js = json::array();
        for (const auto& [episode, ordering] : *cfg.shifts)
            js.push_back(json::array({episode, ordering}));
        j["shifts"] = js;
    }
    j["rewards"] = {{"step_cost", cfg.rewards.step_cost},
                    {"ditch_penalty", cfg.rewards.ditch_penalty},
                    {"collect_reward", cfg.rewards.collect_reward},
                    {"out_of_order_penalty", cfg.rewards.out_of_order_penalty},
                    {"mission_reward", cfg.rewards.mission_reward},
                    {"action_limit_penalty", cfg.rewards.action_limit_penalty},
                    {"collect_attempt_limit", cfg.rewards.collect_attempt_limit},
                    {"step_limit", cfg.rewards.step_limit}};
    j["learning"] = {{"alpha", cfg.learning.alpha}, {"gamma", cfg.learning.gamma}};
    j["intrinsic"] = {{"beta_novelty", cfg.weights.beta_novelty},
                      {"beta_info", cfg.weights.beta_info},
                      {"beta_align_pos", cfg.weights.beta_align_pos},
                      {"beta_align_neg", cfg.weights.beta_align_neg},
                      {"w_novelty", cfg.weights.w_novelty},
                      {"w_info", cfg.weights.w_info},
                      {"w_align", cfg.weights.w_align}};
    j["adaptation"] = {{"lambda_boost", cfg.adapt.lambda_boost},
                       {"eps_max", cfg.adapt.eps_max},
                       {"d_boost", cfg.adapt.d_boost},
                       {"lambda_reset", cfg.adapt.lambda_reset},
                       {"detector_window", cfg.adapt.detector_window},
                       {"detector_drop", cfg.adapt.detector_drop},
                       {"mode", to_string(cfg.adapt.mode)}};
    j["schedule"] = {{"eps0", cfg.eps0}, {"eps_min", cfg.eps_min}};
    j["recovery"] = {{"window", cfg.recovery.window},
                     {"fraction", cfg.recovery.fraction}};
    j["ablation"] = {{"disable_novelty", cfg.ablation.disable_novelty},
                     {"disable_priority_components",
                      cfg.ablation.disable_priority_components},
                     {"disable_boost", cfg.ablation.disable_boost},
                     {"disable_reset", cfg.ablation.disable_reset},
                     {"reset_scope", to_string(cfg.ablation.reset_scope)}};
    return j.dump(2) + "\n";
}

ScenarioSpec to_scenario_spec(const RunConfig& cfg) {
    cfg.validate();
    ScenarioSpec spec;
    spec.episodes = cfg.episodes;
    spec.runs = cfg.runs;
    spec.base_seed = cfg.seed;
    spec.layout_pool = cfg.pool_path.empty()
                           ? default_layout_pool()
                           : parse_layout_pool(read_file(cfg.pool_path));
    spec.initial_ordering = parse_ordering(cfg.initial_ordering);
    spec.rewards = cfg.rewards;
    spec.learning = cfg.learning;
    spec.weights = cfg.weights;
    spec.adapt = cfg.adapt;
    spec.eps0 = cfg.eps0;
    spec.eps_min = cfg.eps_min;
    spec.recovery = cfg.recovery;

    if (cfg.shifts) {
        for (const auto& [episode, ordering] : *cfg.shifts)
            spec.shifts.push_back({episode, parse_ordering(ordering)});
    } else {
        switch (cfg.scenario) {
            case Scenario::static_priorities: break;
            case Scenario::single_shift:
                spec.shifts = {{1700, parse_ordering("Y>Z>X")}};
                break;
            case Scenario::multi_shift:
                spec.shifts = {{1700, parse_ordering("Y>Z>X")},
                               {3500, parse_ordering("Z>X>Y")}};
                break;
        }
    }
    spec.validate();
    return spec;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    return content;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.parent_path() /
                         (target.filename().string() + ".tmp." +
                          std::to_string(static_cast<unsigned>(::getpid())));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) {
            fs::remove(tmp);
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, target);
}

}  // namespace camiq
