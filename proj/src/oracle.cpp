#include "camiq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "camiq/policy.hpp"

namespace camiq {

namespace {

struct ModelEntry {
    double reward = 0.0;
    int next_state = 0;
    bool terminal = false;
};

// Enumerates the (cell, mask) MDP once. Fresh per-query states keep the
// attempt and step budgets out of the model; the optimal policy never
// triggers them.
std::vector<ModelEntry> build_model(const GridWorld& env) {
    const int n_states = env.state_count();
    const int n_masks = 1 << env.info().item_count();
    std::vector<ModelEntry> model(static_cast<std::size_t>(n_states) * kNumActions);

    const EnvState proto = env.reset();
    for (int s = 0; s < n_states; ++s) {
        EnvState state = proto;
        const int cell_idx = s / n_masks;
        state.cell = {cell_idx % env.layout().width, cell_idx / env.layout().width};
        state.collected = static_cast<std::uint32_t>(s % n_masks);
        for (int a = 0; a < kNumActions; ++a) {
            const Transition t = env.step(state, static_cast<Action>(a));
            ModelEntry& e = model[static_cast<std::size_t>(s) * kNumActions + a];
            e.reward = t.reward;
            e.next_state = env.state_index(t.next.cell, t.next.collected);
            e.terminal = t.action_event == Event::ditch ||
                         t.action_event == Event::mission_complete;
        }
    }
    return model;
}

}  // namespace

OracleResult value_iteration(const GridWorld& env, double gamma, double tol,
                             int max_sweeps) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("value_iteration: 0 <= gamma < 1");
    const int n_states = env.state_count();
    const auto model = build_model(env);

    OracleResult result;
    result.q.assign(static_cast<std::size_t>(n_states) * kNumActions, 0.0);
    std::vector<double> value(static_cast<std::size_t>(n_states), 0.0);

    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        double residual = 0.0;
        for (int s = 0; s < n_states; ++s) {
            double best = -std::numeric_limits<double>::infinity();
            for (int a = 0; a < kNumActions; ++a) {
                const ModelEntry& e = model[static_cast<std::size_t>(s) * kNumActions + a];
                const double q = e.reward + (e.terminal ? 0.0 : gamma * value[e.next_state]);
                result.q[static_cast<std::size_t>(s) * kNumActions + a] = q;
                best = std::max(best, q);
            }
            residual = std::max(residual, std::abs(best - value[s]));
            value[s] = best;
        }
        result.sweeps = sweep;
        result.residual = residual;
        if (residual < tol) return result;
    }
    return result;
}

double greedy_rollout_return(const GridWorld& env, const std::vector<double>& q) {
    if (q.size() != static_cast<std::size_t>(env.state_count()) * kNumActions)
        throw std::invalid_argument("greedy_rollout_return: table size mismatch");
    EnvState state = env.reset();
    double total = 0.0;
    while (!state.done) {
        const int s = env.state_index(state);
        const int a = argmax_action(&q[static_cast<std::size_t>(s) * kNumActions], kNumActions);
        Transition t = env.step(state, static_cast<Action>(a));
        total += t.reward;
        state = std::move(t.next);
    }
    return total;
}

double optimal_episode_return(const GridWorld& env, double gamma) {
    return greedy_rollout_return(env, value_iteration(env, gamma).q);
}

}  // namespace camiq
