#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "camiq/agent.hpp"
#include "camiq/env.hpp"
#include "camiq/layout.hpp"

namespace camiq {

struct ScheduledShift {
    int episode = 0;
    Ordering new_ordering;
};

/// Window size and fraction used to decide post-shift recovery.
struct RecoveryParams {
    int window = 50;
    double fraction = 0.8;

    void validate() const;
    bool operator==(const RecoveryParams&) const = default;
};

/// Everything a training run needs: horizon, shift schedule, layout pool,
/// module configurations and the base seed. Factories build the three
/// experiment scenarios.
struct ScenarioSpec {
    int episodes = 5000;
    std::vector<ScheduledShift> shifts;
    int runs = 10;
    std::vector<Layout> layout_pool;
    Ordering initial_ordering;
    std::uint32_t base_seed = 42;

    RewardConfig rewards;
    LearningConfig learning;
    IntrinsicWeights weights;
    AdaptationConfig adapt;
    double eps0 = 1.0;
    double eps_min = 0.1;
    RecoveryParams recovery;

    void validate() const;

    static ScenarioSpec static_priorities();
    static ScenarioSpec single_shift();
    static ScenarioSpec multi_shift();
};

struct EpisodeRecord {
    int episode = 0;
    double total_reward = 0.0;
    bool mission_success = false;
    bool info_collection_success = false;
    int steps = 0;
    double epsilon_used = 0.0;

    bool operator==(const EpisodeRecord&) const = default;
};

struct RecoveryResult {
    bool recovered = false;
    std::optional<int> recovery_time;  // episodes after the shift
    bool degenerate_baseline = false;  // pre-shift rate was zero

    bool operator==(const RecoveryResult&) const = default;
};

/// Everything one training run produced.
struct RunMetrics {
    int layout_index = 0;
    std::uint32_t seed = 0;
    std::vector<EpisodeRecord> records;
    std::vector<ShiftRecord> shifts;
    std::vector<RecoveryResult> recoveries;  // one per shift
    std::uint64_t rng_words = 0;             // stream position at run end
};

/// Aggregates of one agent's runs, Table-style metrics plus the mean-reward
/// learning curve with across-run standard error.
struct AgentSummary {
    double mission_success_pct = 0.0;
    double info_collection_pct = 0.0;
    double recovery_success_pct = 0.0;
    std::optional<double> mean_recovery_time;
    double mean_reward_per_episode = 0.0;
    std::vector<double> curve_mean;
    std::vector<double> curve_stderr;
};

struct AgentConfig {
    AgentKind kind = AgentKind::camiq;
    AblationFlags ablation;
};

/// Plays one episode to termination, learning along the way.
EpisodeRecord run_episode(Agent& agent, const GridWorld& env, Rng& rng, int episode);

/// One seeded training run: samples a layout from the pool, executes the
/// episode loop, applies scheduled priority swaps (notifying the agent per
/// its kind) and computes per-shift recovery.
RunMetrics run_training(const ScenarioSpec& spec, const AgentConfig& agent_cfg,
                        std::uint32_t run_seed);

/// As run_training, but hands back the trained agent for greedy evaluation.
struct TrainingResult {
    RunMetrics metrics;
    Agent agent;
};
TrainingResult run_training_full(const ScenarioSpec& spec, const AgentConfig& agent_cfg,
                                 std::uint32_t run_seed);

/// Recovery after one shift: the baseline rate is the mission-success rate
/// over the window ending just before the shift; recovered at the first
/// post-shift episode whose trailing window reaches fraction * baseline.
/// The search stops at `boundary` (the next shift or the horizon).
RecoveryResult compute_recovery(const std::vector<EpisodeRecord>& records,
                                int shift_episode, int boundary,
                                const RecoveryParams& params);

/// Means and percentages across runs. Throws on an empty input.
AgentSummary aggregate(const std::vector<RunMetrics>& runs);

/// All runs of one agent configuration, seeded base_seed + run index.
std::vector<RunMetrics> run_scenario(const ScenarioSpec& spec,
                                     const AgentConfig& agent_cfg, int workers = 1);

/// The full CA-MIQ configuration plus its six ablations on paired seeds.
/// Returns (configuration label, summary) rows in the fixed report order.
std::vector<std::pair<std::string, AgentSummary>> run_ablation(
    const ScenarioSpec& spec, int workers = 1);

std::vector<std::pair<std::string, AblationFlags>> ablation_grid();

/// Serialization: RunMetrics round-trips losslessly through JSON text.
std::string run_metrics_to_json(const std::vector<RunMetrics>& runs);
std::vector<RunMetrics> run_metrics_from_json(const std::string& text);

/// Report formatting.
std::string format_summary_table(
    const std::vector<std::pair<std::string, AgentSummary>>& rows);
std::string format_ablation_table(
    const std::vector<std::pair<std::string, AgentSummary>>& rows);
std::string curve_csv(const AgentSummary& summary);
std::string event_log_text(const std::vector<RunMetrics>& runs);

}  // namespace camiq
