#pragma once

#include <optional>
#include <string>

#include "camiq/harness.hpp"

namespace camiq {

enum class Scenario : int { static_priorities, single_shift, multi_shift };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

/// Which agents a `run` command executes.
enum class AgentSelection : int { baseline, baseline_boosted, camiq, all };

std::string to_string(AgentSelection s);
AgentSelection agent_selection_from_string(const std::string& name);

/// Fully resolved run configuration: scenario, agent selection, scale,
/// output location and every module configuration. parse/serialize
/// round-trip to JSON; unknown keys are errors.
struct RunConfig {
    Scenario scenario = Scenario::static_priorities;
    AgentSelection agent = AgentSelection::all;
    int runs = 10;
    int episodes = 5000;
    std::uint32_t seed = 42;
    std::string out_dir = "out";
    int workers = 1;
    std::string pool_path;  // empty = bundled pool
    std::string initial_ordering = "X>Y>Z";
    /// Empty = the scenario's default schedule (shifts at 1700 / 3500).
    std::optional<std::vector<std::pair<int, std::string>>> shifts;
    bool save_metrics = false;

    RewardConfig rewards;
    LearningConfig learning;
    IntrinsicWeights weights;
    AdaptationConfig adapt;
    double eps0 = 1.0;
    double eps_min = 0.1;
    RecoveryParams recovery;
    AblationFlags ablation;

    void validate() const;
    bool operator==(const RunConfig&) const = default;
};

/// Parses a JSON config document. Missing keys keep their defaults; unknown
/// keys are errors naming the offending key; out-of-range values name the
/// violated invariant.
RunConfig parse_config_text(const std::string& json_text);

RunConfig load_config_file(const std::string& path);

/// Full echo of a resolved config, parseable back to an equal RunConfig.
std::string config_to_json(const RunConfig& cfg);

/// Builds the harness spec: resolves the layout pool, the scenario's shift
/// schedule and the module configs.
ScenarioSpec to_scenario_spec(const RunConfig& cfg);

/// Writes via a temporary file and an atomic rename; no partial files
/// survive a failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace camiq
