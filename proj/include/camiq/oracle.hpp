#pragma once

#include <vector>

#include "camiq/env.hpp"

namespace camiq {

/// Optimal action values of the enumerated (cell, collected-mask) MDP,
/// computed by value iteration.
struct OracleResult {
    std::vector<double> q;  // n_states * n_actions, row-major
    int sweeps = 0;
    double residual = 0.0;

    double value(int s, int a, int n_actions) const { return q[s * n_actions + a]; }
};

/// Sweeps the Bellman optimality backup over every (cell, mask, action)
/// triple until the sup-norm residual drops below tol. Transitions come from
/// the environment's own step function applied to fresh per-query states, so
/// attempt and step budgets never bind inside the model.
OracleResult value_iteration(const GridWorld& env, double gamma,
                             double tol = 1e-13, int max_sweeps = 20000);

/// Undiscounted episode return of the greedy policy induced by `q`, rolled
/// out through the real environment (budgets included) from reset.
double greedy_rollout_return(const GridWorld& env, const std::vector<double>& q);

/// Value iteration plus greedy rollout: the optimal episode return.
double optimal_episode_return(const GridWorld& env, double gamma);

}  // namespace camiq
