#include "camiq/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace camiq {

void EpsilonSchedule::validate() const {
    if (!(eps0 >= eps_min && eps_min >= 0.0))
        throw std::runtime_error("schedule: eps0 >= eps_min >= 0");
    if (eps0 > 1.0) throw std::runtime_error("schedule: eps0 <= 1");
    if (horizon < 1) throw std::runtime_error("schedule: horizon >= 1");
}

double EpsilonSchedule::linear_at(int episode) const {
    if (episode < 0) throw std::out_of_range("epsilon_at: negative episode");
    if (episode >= horizon) return eps_min;
    return eps0 - (eps0 - eps_min) * static_cast<double>(episode) /
                      static_cast<double>(horizon);
}

double boosted_epsilon(const BoostState& boost, int k) {
    if (k < 0 || k > boost.duration)
        throw std::out_of_range("boosted_epsilon: k outside [0, duration]");
    if (k == 0) return boost.boosted_eps;
    return boost.boosted_eps *
           std::exp(-static_cast<double>(k) / static_cast<double>(boost.duration));
}

double epsilon_at(const EpsilonSchedule& schedule, int episode) {
    const double linear = schedule.linear_at(episode);
    if (!schedule.boost) return linear;
    const int k = episode - schedule.boost->start_episode;
    if (k < 0 || k > schedule.boost->duration) return linear;
    // The boost overrides but never dips below the plain schedule.
    return std::max(linear, boosted_epsilon(*schedule.boost, k));
}

std::string to_string(AgentKind k) {
    switch (k) {
        case AgentKind::baseline: return "baseline";
        case AgentKind::baseline_boosted: return "baseline_boosted";
        case AgentKind::camiq: return "camiq";
    }
    throw std::invalid_argument("unknown agent kind");
}

AgentKind agent_kind_from_string(const std::string& name) {
    if (name == "baseline") return AgentKind::baseline;
    if (name == "baseline_boosted") return AgentKind::baseline_boosted;
    if (name == "camiq") return AgentKind::camiq;
    throw std::invalid_argument("unknown agent kind '" + name + "'");
}

std::string to_string(ResetScope s) {
    switch (s) {
        case ResetScope::both: return "both";
        case ResetScope::intrinsic_only: return "intrinsic_only";
        case ResetScope::extrinsic_only: return "extrinsic_only";
    }
    throw std::invalid_argument("unknown reset scope");
}

ResetScope reset_scope_from_string(const std::string& name) {
    if (name == "both") return ResetScope::both;
    if (name == "intrinsic_only") return ResetScope::intrinsic_only;
    if (name == "extrinsic_only") return ResetScope::extrinsic_only;
    throw std::invalid_argument("unknown reset scope '" + name + "'");
}

int argmax_action(const double* row, int n) {
    int best = 0;
    for (int a = 1; a < n; ++a) {
        if (row[a] > row[best]) best = a;
    }
    return best;
}

Action select_action_camiq(const CriticPair& critics, int s, double eps, Rng& rng) {
    if (eps < 0.0 || eps > 1.0)
        throw std::invalid_argument("select_action: eps outside [0, 1]");
    const bool intrinsic = rng.uniform() < eps;
    const double* row = intrinsic ? critics.intrinsic_row(s) : critics.extrinsic_row(s);
    return static_cast<Action>(argmax_action(row, critics.n_actions()));
}

Action select_action_baseline(const CriticPair& critics, int s, double eps, Rng& rng) {
    if (eps < 0.0 || eps > 1.0)
        throw std::invalid_argument("select_action: eps outside [0, 1]");
    if (rng.uniform() < eps)
        return static_cast<Action>(rng.bounded(critics.n_actions()));
    return static_cast<Action>(argmax_action(critics.extrinsic_row(s), critics.n_actions()));
}

}  // namespace camiq
