#pragma once

#include <optional>
#include <string>

#include "camiq/critics.hpp"
#include "camiq/rng.hpp"

namespace camiq {

/// Transient exploration boost installed after a priority shift.
struct BoostState {
    int start_episode = 0;
    double boosted_eps = 1.0;  // value at the shift episode, already clipped
    int duration = 50;

    bool operator==(const BoostState&) const = default;
};

/// Linear per-episode epsilon decay with an optional boost override.
struct EpsilonSchedule {
    double eps0 = 1.0;
    double eps_min = 0.1;
    int horizon = 5000;
    std::optional<BoostState> boost;

    double linear_at(int episode) const;
    void validate() const;
};

/// Effective exploration rate at an episode. Without an active boost this is
/// the linear schedule; with one, the decayed boost value overrides but never
/// falls below the linear value or eps_min.
double epsilon_at(const EpsilonSchedule& schedule, int episode);

/// Boost value k episodes after the boost was applied (k == 0 is the boosted
/// value itself). Only meaningful for 0 <= k <= duration.
double boosted_epsilon(const BoostState& boost, int k);

enum class AgentKind : int { baseline, baseline_boosted, camiq };

std::string to_string(AgentKind k);
AgentKind agent_kind_from_string(const std::string& name);

enum class ResetScope : int { both, intrinsic_only, extrinsic_only };

std::string to_string(ResetScope s);
ResetScope reset_scope_from_string(const std::string& name);

/// Component switches for the ablation grid. Only meaningful for camiq.
struct AblationFlags {
    bool disable_novelty = false;
    bool disable_priority_components = false;  // zeroes info and alignment
    bool disable_boost = false;
    bool disable_reset = false;
    ResetScope reset_scope = ResetScope::both;

    bool operator==(const AblationFlags&) const = default;
};

/// Lowest-index tie-break, so equal rows always select the same action.
int argmax_action(const double* row, int n);

/// With probability eps the greedy action of the intrinsic critic, otherwise
/// the greedy action of the extrinsic critic. Consumes exactly one uniform
/// draw per call.
Action select_action_camiq(const CriticPair& critics, int s, double eps, Rng& rng);

/// Epsilon-greedy over the extrinsic critic: one uniform draw for the branch,
/// then at most one bounded draw for the random action.
Action select_action_baseline(const CriticPair& critics, int s, double eps, Rng& rng);

}  // namespace camiq
