#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "camiq/env.hpp"
#include "camiq/rng.hpp"
#include "test_helpers.hpp"

using namespace camiq;
using camiq::testing::make_env;
using camiq::testing::make_layout;

namespace {

const char* kGrid =
    "A..X\n"
    ".D..\n"
    "Y..Z\n"
    "..T.\n";

GridWorld alpha_env(const std::string& ordering = "X>Y>Z") {
    return make_env(make_layout("alpha", kGrid), ordering);
}

EnvState at(const GridWorld& env, Cell cell, std::uint32_t mask = 0) {
    EnvState s = env.reset();
    s.cell = cell;
    s.collected = mask;
    return s;
}

}  // namespace

TEST_CASE("reset yields the start state with nothing collected") {
    GridWorld env = alpha_env();
    const EnvState s = env.reset(7);
    CHECK(s.cell == Cell{0, 0});
    CHECK(s.collected == 0);
    CHECK(s.steps == 0);
    CHECK_FALSE(s.done);
    for (int a : s.collect_attempts) CHECK(a == 0);

    // Equal seeds, equal states; the environment is deterministic anyway.
    CHECK(env.reset(7) == env.reset(7));
    CHECK(env.reset(7) == env.reset(8));
}

TEST_CASE("reset after a priority swap changes only the ordering") {
    GridWorld env = alpha_env();
    const EnvState before = env.reset();
    env.set_info(swap_priorities(env.info(), parse_ordering("Y>Z>X"), 42));
    CHECK(env.reset() == before);
    CHECK(to_string(env.info().ordering) == "Y>Z>X");
}

TEST_CASE("movement pays step cost; walls block without moving") {
    GridWorld env = alpha_env();
    const EnvState s = env.reset();

    const Transition right = env.step(s, Action::right);
    CHECK(right.event == Event::moved);
    CHECK(right.reward == -1.0);
    CHECK(right.next.cell == Cell{1, 0});

    const Transition up = env.step(s, Action::up);
    CHECK(up.event == Event::blocked);
    CHECK(up.reward == -1.0);
    CHECK(up.next.cell == s.cell);
    CHECK(up.next.steps == 1);
}

TEST_CASE("moving onto a ditch terminates with the ditch penalty") {
    GridWorld env = alpha_env();
    const EnvState s = at(env, {1, 0});  // ditch is at (1,1)
    const Transition t = env.step(s, Action::down);
    CHECK(t.event == Event::ditch);
    CHECK(t.reward == -1.0 + -50.0);
    CHECK(t.done);
    CHECK_FALSE(t.next.mission_success);
    CHECK_THROWS_AS(env.step(t.next, Action::up), std::logic_error);
}

TEST_CASE("collect at the lowest-uncollected-rank item succeeds") {
    GridWorld env = alpha_env();  // X>Y>Z
    const EnvState s = at(env, {3, 0});
    const Transition t = env.step(s, Action::collect);
    CHECK(t.event == Event::collected_in_order);
    CHECK(t.reward == 20.0);
    CHECK(t.next.collected == 0b001);
}

TEST_CASE("collect at a higher-rank item's cell is rejected") {
    GridWorld env = alpha_env("Y>Z>X");
    const EnvState s = at(env, {3, 0});  // X's cell, but Y is rank 1
    const Transition t = env.step(s, Action::collect);
    CHECK(t.event == Event::collected_out_of_order_rejected);
    CHECK(t.reward == -10.0);
    CHECK(t.next.collected == 0);
}

TEST_CASE("futile collects pay the action-limit penalty") {
    GridWorld env = alpha_env();

    SUBCASE("non-item cell") {
        const Transition t = env.step(env.reset(), Action::collect);
        CHECK(t.event == Event::attempt_limit_exceeded);
        CHECK(t.reward == -5.0);
    }
    SUBCASE("already-collected item's cell") {
        const EnvState s = at(env, {3, 0}, 0b001);
        const Transition t = env.step(s, Action::collect);
        CHECK(t.event == Event::attempt_limit_exceeded);
        CHECK(t.reward == -5.0);
    }
    SUBCASE("beyond the per-cell attempt limit") {
        // Out-of-order attempts burn the budget without granting the item.
        GridWorld blocked = alpha_env("Y>Z>X");
        EnvState s = at(blocked, {3, 0});
        for (int i = 0; i < 3; ++i) {
            const Transition t = blocked.step(s, Action::collect);
            CHECK(t.event == Event::collected_out_of_order_rejected);
            s = t.next;
        }
        const Transition t = blocked.step(s, Action::collect);
        CHECK(t.event == Event::attempt_limit_exceeded);
        CHECK(t.reward == -5.0);
    }
}

TEST_CASE("reaching the target with everything collected completes the mission") {
    GridWorld env = alpha_env();
    const EnvState s = at(env, {2, 2}, 0b111);
    const Transition t = env.step(s, Action::down);
    CHECK(t.event == Event::mission_complete);
    CHECK(t.reward == -1.0 + 100.0);
    CHECK(t.done);
    CHECK(t.next.mission_success);

    // Without the full set the target is an ordinary cell.
    const Transition partial = env.step(at(env, {2, 2}, 0b011), Action::down);
    CHECK(partial.event == Event::moved);
}

TEST_CASE("step limit forces done, keeping the action's reward") {
    RewardConfig rewards;
    rewards.step_limit = 3;
    GridWorld env = make_env(make_layout("alpha", kGrid), "X>Y>Z", rewards);
    EnvState s = env.reset();
    s = env.step(s, Action::right).next;
    s = env.step(s, Action::right).next;
    const Transition t = env.step(s, Action::right);
    CHECK(t.event == Event::step_limit);
    CHECK(t.action_event == Event::moved);
    CHECK(t.reward == -1.0);
    CHECK(t.done);
    CHECK(t.next.steps == 3);
}

TEST_CASE("unknown actions and done states are rejected") {
    GridWorld env = alpha_env();
    CHECK_THROWS_AS(env.step(env.reset(), static_cast<Action>(9)),
                    std::invalid_argument);
}

TEST_CASE("state indexing is a bijection onto [0, 128)") {
    GridWorld env = alpha_env();
    REQUIRE(env.state_count() == 128);

    // Exhaustive enumeration oracle over all (cell, mask) pairs.
    std::set<int> seen;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x)
            for (std::uint32_t mask = 0; mask < 8; ++mask) {
                const int idx = env.state_index(Cell{x, y}, mask);
                CHECK(idx >= 0);
                CHECK(idx < 128);
                seen.insert(idx);
            }
    CHECK(seen.size() == 128);

    CHECK(env.state_index(env.reset()) == 0);  // start (0,0), empty mask
    CHECK(env.state_index(Cell{2, 3}, 0b111) != env.state_index(Cell{2, 3}, 0));
}

TEST_CASE("identical action sequences give bit-identical transitions") {
    auto play = [](GridWorld& env, Rng& rng) {
        std::vector<double> rewards;
        EnvState s = env.reset();
        for (int i = 0; i < 200 && !s.done; ++i) {
            Transition t = env.step(s, static_cast<Action>(rng.bounded(kNumActions)));
            rewards.push_back(t.reward);
            s = std::move(t.next);
        }
        return rewards;
    };
    GridWorld env1 = alpha_env();
    GridWorld env2 = alpha_env();
    Rng rng1(99);
    Rng rng2(99);
    CHECK(play(env1, rng1) == play(env2, rng2));
}

TEST_CASE("collected set is always a prefix of the active ordering") {
    GridWorld env = alpha_env("Z>X>Y");
    Rng rng(5);
    for (int episode = 0; episode < 50; ++episode) {
        EnvState s = env.reset();
        while (!s.done) {
            Transition t = env.step(s, static_cast<Action>(rng.bounded(kNumActions)));
            // Count collected items; they must be exactly the top-ranked ones.
            int collected = 0;
            for (int i = 0; i < 3; ++i)
                collected += (t.next.collected >> i) & 1u;
            for (int r = 1; r <= collected; ++r) {
                const char item = env.info().ordering.item_at_rank(r);
                CHECK(((t.next.collected >> env.info().item_index(item)) & 1u) == 1u);
            }
            s = std::move(t.next);
        }
    }
}

TEST_CASE("mission success iff all items collected in order and agent at target") {
    // 2x3 grid with two items; random play finishes often here.
    GridWorld env = make_env(make_layout("mini", "AXY\nD.T\n"), "X>Y");
    Rng rng(17);
    int successes = 0;
    for (int episode = 0; episode < 500; ++episode) {
        EnvState s = env.reset();
        while (!s.done) {
            s = env.step(s, static_cast<Action>(rng.bounded(kNumActions))).next;
        }
        if (s.mission_success) {
            ++successes;
            CHECK(s.collected == 0b11);
            CHECK(s.cell == env.layout().target);
        } else {
            CHECK((s.collected != 0b11 || s.cell != env.layout().target));
        }
    }
    CHECK(successes > 0);
}

TEST_CASE("every reward reconstructs from its event") {
    RewardConfig rewards;
    rewards.step_limit = 15;
    GridWorld env = make_env(make_layout("mini", "AXY\nD.T\n"), "X>Y", rewards);

    const std::map<Event, double> expected = {
        {Event::moved, rewards.step_cost},
        {Event::blocked, rewards.step_cost},
        {Event::ditch, rewards.step_cost + rewards.ditch_penalty},
        {Event::collected_in_order, rewards.collect_reward},
        {Event::collected_out_of_order_rejected, rewards.out_of_order_penalty},
        {Event::attempt_limit_exceeded, rewards.action_limit_penalty},
        {Event::mission_complete, rewards.step_cost + rewards.mission_reward},
    };

    Rng rng(1234);
    std::set<Event> seen;
    for (int episode = 0; episode < 3000; ++episode) {
        EnvState s = env.reset();
        while (!s.done) {
            Transition t = env.step(s, static_cast<Action>(rng.bounded(kNumActions)));
            seen.insert(t.event);
            // step_limit keeps the underlying action's reward.
            const Event key = t.event == Event::step_limit ? t.action_event : t.event;
            CHECK(t.reward == expected.at(key));
            s = std::move(t.next);
        }
    }
    CHECK(seen.size() == 8);  // every event type exercised
}

// --- information space ---

TEST_CASE("swap remaps ranks and records the shift") {
    InformationSpace info = InformationSpace::with_default_priorities(
        {'X', 'Y', 'Z'}, parse_ordering("X>Y>Z"));
    CHECK(info.priorities.at('X') == 3.0);

    const InformationSpace swapped =
        swap_priorities(info, parse_ordering("Y>Z>X"), 1700);
    CHECK(swapped.ordering.rank_of('Y') == 1);
    CHECK(swapped.ordering.rank_of('Z') == 2);
    CHECK(swapped.ordering.rank_of('X') == 3);
    CHECK(swapped.priorities.at('Y') == 3.0);  // largest value follows rank 1
    REQUIRE(swapped.shift_history.size() == 1);
    CHECK(swapped.shift_history[0].episode == 1700);
    CHECK(to_string(swapped.shift_history[0].old_ordering) == "X>Y>Z");

    const InformationSpace again =
        swap_priorities(swapped, parse_ordering("Z>X>Y"), 3500);
    CHECK(again.ordering.rank_of('Z') == 1);
    CHECK(again.shift_history.size() == 2);
}

TEST_CASE("identity swap is a no-op but still recorded") {
    InformationSpace info = InformationSpace::with_default_priorities(
        {'X', 'Y', 'Z'}, parse_ordering("X>Y>Z"));
    const InformationSpace same = swap_priorities(info, parse_ordering("X>Y>Z"), 10);
    CHECK(same.ordering == info.ordering);
    CHECK(same.priorities == info.priorities);
    CHECK(same.shift_history.size() == 1);
}

TEST_CASE("swap rejects non-permutations and foreign orderings") {
    InformationSpace info = InformationSpace::with_default_priorities(
        {'X', 'Y', 'Z'}, parse_ordering("X>Y>Z"));
    CHECK_THROWS_AS(swap_priorities(info, parse_ordering("X>Y"), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(swap_priorities(info, parse_ordering("X>X>Y"), 0),
                    std::invalid_argument);

    info.contexts = {parse_ordering("X>Y>Z"), parse_ordering("Y>Z>X")};
    CHECK_THROWS_WITH_AS(swap_priorities(info, parse_ordering("Z>X>Y"), 0),
                         doctest::Contains("context"), std::invalid_argument);
}
