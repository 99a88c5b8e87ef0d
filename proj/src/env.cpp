#include "camiq/env.hpp"

#include <stdexcept>

namespace camiq {

void RewardConfig::validate() const {
    if (step_cost > 0.0) throw std::runtime_error("rewards: step_cost <= 0");
    if (ditch_penalty >= 0.0) throw std::runtime_error("rewards: ditch_penalty < 0");
    if (collect_reward <= 0.0) throw std::runtime_error("rewards: collect_reward > 0");
    if (mission_reward <= collect_reward)
        throw std::runtime_error("rewards: mission_reward > collect_reward");
    if (collect_attempt_limit < 1)
        throw std::runtime_error("rewards: collect_attempt_limit >= 1");
    if (step_limit < 1) throw std::runtime_error("rewards: step_limit >= 1");
}

std::string to_string(Event e) {
    switch (e) {
        case Event::moved: return "moved";
        case Event::blocked: return "blocked";
        case Event::ditch: return "ditch";
        case Event::collected_in_order: return "collected_in_order";
        case Event::collected_out_of_order_rejected:
            return "collected_out_of_order_rejected";
        case Event::attempt_limit_exceeded: return "attempt_limit_exceeded";
        case Event::mission_complete: return "mission_complete";
        case Event::step_limit: return "step_limit";
    }
    throw std::invalid_argument("unknown event");
}

GridWorld::GridWorld(Layout layout, InformationSpace info, RewardConfig rewards)
    : layout_(std::move(layout)), info_(std::move(info)), rewards_(rewards) {
    layout_.validate();
    info_.validate();
    rewards_.validate();
    for (char item : info_.items) {
        if (!layout_.item_cells.count(item))
            throw std::runtime_error(std::string("layout '") + layout_.id +
                                     "' hosts no cell for item '" + item + "'");
    }
}

void GridWorld::set_info(InformationSpace info) {
    info.validate();
    if (info.items != info_.items)
        throw std::invalid_argument("set_info: item set must not change");
    info_ = std::move(info);
}

EnvState GridWorld::reset(std::uint32_t /*seed*/) const {
    EnvState s;
    s.cell = layout_.start;
    s.collected = 0;
    s.steps = 0;
    s.collect_attempts.assign(static_cast<std::size_t>(layout_.cell_count()), 0);
    s.done = false;
    s.mission_success = false;
    return s;
}

bool GridWorld::full_mask(std::uint32_t mask) const {
    return mask == (1u << info_.item_count()) - 1u;
}

int GridWorld::state_index(Cell cell, std::uint32_t mask) const {
    if (!layout_.in_bounds(cell))
        throw std::out_of_range("state_index: cell out of bounds");
    const int n_masks = 1 << info_.item_count();
    if (mask >= static_cast<std::uint32_t>(n_masks))
        throw std::out_of_range("state_index: mask out of range");
    return layout_.cell_index(cell) * n_masks + static_cast<int>(mask);
}

int GridWorld::state_index(const EnvState& state) const {
    return state_index(state.cell, state.collected);
}

int GridWorld::state_count() const {
    return layout_.cell_count() * (1 << info_.item_count());
}

Transition GridWorld::step(const EnvState& state, Action action) const {
    if (state.done) throw std::logic_error("step: episode already done");
    const int a = static_cast<int>(action);
    if (a < 0 || a >= kNumActions)
        throw std::invalid_argument("step: unknown action id " + std::to_string(a));

    EnvState next = state;
    double reward = 0.0;
    Event event = Event::moved;

    if (action == Action::collect) {
        const auto item = layout_.item_at(state.cell);
        const bool uncollected =
            item && (state.collected & (1u << info_.item_index(*item))) == 0;
        if (!uncollected) {
            // Nothing (left) to pick up here.
            event = Event::attempt_limit_exceeded;
            reward = rewards_.action_limit_penalty;
        } else {
            int& attempts = next.collect_attempts[layout_.cell_index(state.cell)];
            ++attempts;
            if (attempts > rewards_.collect_attempt_limit) {
                event = Event::attempt_limit_exceeded;
                reward = rewards_.action_limit_penalty;
            } else {
                // The item is granted only while every lower rank is already in.
                int lowest_uncollected_rank = 0;
                for (int r = 1; r <= info_.item_count(); ++r) {
                    const char candidate = info_.ordering.item_at_rank(r);
                    if ((state.collected & (1u << info_.item_index(candidate))) == 0) {
                        lowest_uncollected_rank = r;
                        break;
                    }
                }
                if (info_.ordering.rank_of(*item) == lowest_uncollected_rank) {
                    next.collected |= 1u << info_.item_index(*item);
                    event = Event::collected_in_order;
                    reward = rewards_.collect_reward;
                } else {
                    event = Event::collected_out_of_order_rejected;
                    reward = rewards_.out_of_order_penalty;
                }
            }
        }
    } else {
        const Cell delta = action_delta(action);
        const Cell dest{state.cell.x + delta.x, state.cell.y + delta.y};
        reward = rewards_.step_cost;
        if (!layout_.in_bounds(dest)) {
            event = Event::blocked;
        } else {
            next.cell = dest;
            if (layout_.is_ditch(dest)) {
                event = Event::ditch;
                reward += rewards_.ditch_penalty;
                next.done = true;
            } else if (dest == layout_.target && full_mask(next.collected)) {
                event = Event::mission_complete;
                reward += rewards_.mission_reward;
                next.done = true;
                next.mission_success = true;
            } else {
                event = Event::moved;
            }
        }
    }

    ++next.steps;
    const Event action_event = event;
    if (!next.done && next.steps >= rewards_.step_limit) {
        next.done = true;
        event = Event::step_limit;
    }
    const bool done = next.done;
    return Transition{std::move(next), reward, done, event, action_event};
}

}  // namespace camiq
