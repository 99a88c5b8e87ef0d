#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "camiq/grid.hpp"
#include "camiq/info_space.hpp"
#include "camiq/layout.hpp"

namespace camiq {

/// Reward components plus the per-episode budgets. Magnitudes are
/// configurable; the defaults below are the ones used throughout the
/// bundled experiments.
struct RewardConfig {
    double step_cost = -1.0;              // charged on every movement action
    double ditch_penalty = -50.0;         // terminal
    double collect_reward = 20.0;
    double out_of_order_penalty = -10.0;  // item is rejected, not granted
    double mission_reward = 100.0;
    double action_limit_penalty = -5.0;   // futile collect
    int collect_attempt_limit = 3;        // per cell, per episode
    int step_limit = 100;                 // per episode

    void validate() const;
    bool operator==(const RewardConfig&) const = default;
};

enum class Event : int {
    moved,
    blocked,
    ditch,
    collected_in_order,
    collected_out_of_order_rejected,
    attempt_limit_exceeded,
    mission_complete,
    step_limit,
};

std::string to_string(Event e);

struct EnvState {
    Cell cell{};
    std::uint32_t collected = 0;        // bit i = item items[i] collected
    int steps = 0;
    std::vector<int> collect_attempts;  // per cell, indexed by cell_index
    bool done = false;
    bool mission_success = false;

    bool operator==(const EnvState&) const = default;
};

struct Transition {
    EnvState next;
    double reward = 0.0;
    bool done = false;
    Event event = Event::moved;
    /// What the action itself did. Differs from `event` only when the step
    /// budget ran out on a non-terminal action (event == step_limit).
    Event action_event = Event::moved;
};

/// Deterministic SAR gridworld with an embedded dynamic-priority information
/// space. Transitions are pure functions of (state, action); all mutability
/// lives in the caller-held EnvState.
class GridWorld {
public:
    GridWorld(Layout layout, InformationSpace info, RewardConfig rewards = {});

    /// Agent at start, nothing collected, counters zeroed. The environment is
    /// deterministic; the seed is accepted for interface uniformity only.
    EnvState reset(std::uint32_t seed = 0) const;

    /// One transition. Throws on a done state or an out-of-range action.
    Transition step(const EnvState& state, Action action) const;

    /// Bijection (cell, collected mask) -> [0, cell_count * 2^items).
    int state_index(const EnvState& state) const;
    int state_index(Cell cell, std::uint32_t mask) const;
    int state_count() const;

    bool is_item_cell(Cell c) const { return layout_.is_item_cell(c); }
    bool full_mask(std::uint32_t mask) const;

    const Layout& layout() const { return layout_; }
    const InformationSpace& info() const { return info_; }

    /// Installs the information space produced by swap_priorities().
    void set_info(InformationSpace info);

private:
    Layout layout_;
    InformationSpace info_;
    RewardConfig rewards_;
};

}  // namespace camiq
