#pragma once

// Property checks shared by the standalone property suite and the acceptance
// gate. Each check throws std::runtime_error with a description on failure.

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "camiq/adaptation.hpp"
#include "camiq/env.hpp"
#include "camiq/harness.hpp"
#include "camiq/policy.hpp"
#include "camiq/rng.hpp"

namespace camiq::properties {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

/// Equal-valued rows always select the same action, across repeated calls and
/// across positive rescaling.
inline void check_argmax_determinism() {
    Rng rng(1001);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> row(static_cast<std::size_t>(kNumActions));
        for (double& v : row) v = std::floor(rng.uniform() * 4.0);  // force ties
        const int first = argmax_action(row.data(), kNumActions);
        for (int repeat = 0; repeat < 5; ++repeat)
            require(argmax_action(row.data(), kNumActions) == first,
                    "argmax changed across repeated calls");
        const double k = 0.5 + rng.uniform() * 9.5;
        std::vector<double> scaled = row;
        for (double& v : scaled) v *= k;
        require(argmax_action(scaled.data(), kNumActions) == first,
                "argmax changed under positive scaling");
        for (int a = 0; a < kNumActions; ++a)
            require(row[static_cast<std::size_t>(first)] >= row[static_cast<std::size_t>(a)],
                    "argmax not maximal");
        for (int a = 0; a < first; ++a)
            require(row[static_cast<std::size_t>(a)] < row[static_cast<std::size_t>(first)],
                    "tie not broken to the lowest index");
    }
}

/// Monotone non-increasing without a boost; with one, bounded by eps_max from
/// above and by the linear schedule from below.
inline void check_epsilon_schedule() {
    EpsilonSchedule plain;
    plain.horizon = 5000;
    double last = 2.0;
    for (int e = 0; e <= 6000; ++e) {
        const double eps = epsilon_at(plain, e);
        require(eps <= last + 1e-15, "epsilon increased without a boost");
        require(eps >= plain.eps_min - 1e-15, "epsilon fell below eps_min");
        last = eps;
    }

    AdaptationConfig cfg;
    for (const int shift : {200, 1700, 4800}) {
        EpsilonSchedule boosted = plain;
        apply_boost(boosted, epsilon_at(boosted, shift), cfg, shift);
        for (int e = shift; e <= shift + cfg.d_boost + 10 && e <= 6000; ++e) {
            const double eps = epsilon_at(boosted, e);
            require(eps <= cfg.eps_max + 1e-15, "boosted epsilon above eps_max");
            require(eps >= boosted.linear_at(e) - 1e-15,
                    "boosted epsilon below the linear schedule");
        }
        require(epsilon_at(boosted, shift + cfg.d_boost + 1) ==
                    boosted.linear_at(shift + cfg.d_boost + 1),
                "epsilon did not return to the schedule after the boost");
    }
}

/// Mission success implies collection success on every simulated episode.
inline void check_mission_implies_collection() {
    ScenarioSpec spec;
    spec.episodes = 300;
    spec.runs = 2;
    spec.layout_pool = default_layout_pool();
    spec.initial_ordering = parse_ordering("X>Y>Z");
    spec.shifts = {{150, parse_ordering("Y>Z>X")}};
    for (const AgentKind kind :
         {AgentKind::baseline, AgentKind::baseline_boosted, AgentKind::camiq}) {
        AgentConfig cfg;
        cfg.kind = kind;
        for (const auto& run : run_scenario(spec, cfg, 1)) {
            int missions = 0;
            for (const auto& rec : run.records) {
                if (rec.mission_success) {
                    ++missions;
                    require(rec.info_collection_success,
                            "mission success without collection success");
                }
            }
            (void)missions;
        }
    }
}

/// The detector never fires on a constant success history.
inline void check_detector_no_false_positive() {
    AdaptationConfig cfg;
    for (const int window : {1, 5, 50}) {
        cfg.detector_window = window;
        for (const bool value : {false, true}) {
            for (int len = 0; len <= 4 * window; ++len) {
                std::vector<bool> history(static_cast<std::size_t>(len), value);
                require(!detect_shift(history, cfg),
                        "detector fired on a constant history");
            }
        }
    }
}

/// Rewards reconstruct from the event (via the action event for timeouts),
/// exhaustively over all event types on a small grid.
inline void check_reward_decomposition() {
    RewardConfig rewards;
    rewards.step_limit = 15;
    const Layout layout = parse_layout_pool("layout mini\nAXY\nD.T\n").at(0);
    GridWorld env(layout,
                  InformationSpace::with_default_priorities(layout.item_ids(),
                                                            parse_ordering("X>Y")),
                  rewards);

    auto expected = [&](Event e) {
        switch (e) {
            case Event::moved:
            case Event::blocked: return rewards.step_cost;
            case Event::ditch: return rewards.step_cost + rewards.ditch_penalty;
            case Event::collected_in_order: return rewards.collect_reward;
            case Event::collected_out_of_order_rejected:
                return rewards.out_of_order_penalty;
            case Event::attempt_limit_exceeded: return rewards.action_limit_penalty;
            case Event::mission_complete:
                return rewards.step_cost + rewards.mission_reward;
            case Event::step_limit: break;
        }
        throw std::logic_error("expected() called with step_limit");
    };

    Rng rng(881);
    std::set<Event> seen;
    for (int episode = 0; episode < 4000; ++episode) {
        EnvState s = env.reset();
        while (!s.done) {
            Transition t = env.step(s, static_cast<Action>(rng.bounded(kNumActions)));
            seen.insert(t.event);
            const Event key =
                t.event == Event::step_limit ? t.action_event : t.event;
            require(t.reward == expected(key), "reward does not match its event");
            s = std::move(t.next);
        }
    }
    require(seen.size() == 8, "not every event type was exercised");
}

/// state_index is a bijection onto [0, cells * 2^items) by enumeration.
inline void check_state_index_bijection() {
    for (const Layout& layout : default_layout_pool()) {
        GridWorld env(layout, InformationSpace::with_default_priorities(
                                  layout.item_ids(), parse_ordering("X>Y>Z")));
        const int expected = layout.cell_count() * 8;
        require(env.state_count() == expected, "state_count mismatch");
        std::set<int> seen;
        for (int y = 0; y < layout.height; ++y)
            for (int x = 0; x < layout.width; ++x)
                for (std::uint32_t mask = 0; mask < 8; ++mask) {
                    const int idx = env.state_index(Cell{x, y}, mask);
                    require(idx >= 0 && idx < expected, "index out of range");
                    seen.insert(idx);
                }
        require(static_cast<int>(seen.size()) == expected,
                "state indices collide");
    }
}

}  // namespace camiq::properties
