#include "camiq/agent.hpp"

namespace camiq {

Agent::Agent(AgentKind kind_in, int n_states, int n_actions)
    : kind(kind_in), critics(n_states, n_actions) {}

void on_shift(Agent& agent, int episode, const ShiftRecord& record) {
    agent.shift_log.push_back(record);
    if (agent.kind == AgentKind::baseline) return;

    const double current_eps = epsilon_at(agent.schedule, episode);
    if (agent.kind == AgentKind::baseline_boosted) {
        apply_boost(agent.schedule, current_eps, agent.adapt, episode);
        return;
    }

    if (!agent.ablation.disable_boost)
        apply_boost(agent.schedule, current_eps, agent.adapt, episode);
    if (!agent.ablation.disable_reset)
        selective_reset(agent.critics, {kCollectAction}, agent.adapt.lambda_reset,
                        agent.ablation.reset_scope);
}

Action select_action(Agent& agent, int s, double eps, Rng& rng) {
    if (agent.uses_intrinsic()) return select_action_camiq(agent.critics, s, eps, rng);
    return select_action_baseline(agent.critics, s, eps, rng);
}

double observe_transition(Agent& agent, int s, Action a, const Transition& t,
                          int s_next, bool arrival_is_info_cell) {
    const int action = static_cast<int>(a);
    if (!agent.uses_intrinsic()) {
        agent.critics.extrinsic_update(s, action, t.reward, s_next, t.done,
                                       agent.learning);
        return 0.0;
    }

    // Counts first, so the bonuses never see a zero denominator.
    agent.critics.record_visit(s, action);
    if (arrival_is_info_cell) agent.critics.record_info_visit(s_next);

    const double novelty =
        agent.ablation.disable_novelty
            ? 0.0
            : novelty_reward(agent.critics.visits(s, action), agent.weights);
    double info = 0.0;
    double align = 0.0;
    if (!agent.ablation.disable_priority_components) {
        info = info_location_reward(
            arrival_is_info_cell ? agent.critics.info_visits(s_next) : 0,
            arrival_is_info_cell, agent.weights);
        align = alignment_reward(t.action_event, agent.weights);
    }
    const double r_int = intrinsic_reward(novelty, info, align, agent.weights);

    agent.critics.extrinsic_update(s, action, t.reward, s_next, t.done, agent.learning);
    agent.critics.intrinsic_update(s, action, r_int, s_next, t.done, agent.learning);
    return r_int;
}

}  // namespace camiq
