#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "camiq/adaptation.hpp"
#include "camiq/agent.hpp"
#include "camiq/rng.hpp"

using namespace camiq;

namespace {

std::vector<bool> history_with_rates(double early, double late, int window) {
    // Two windows of deterministic successes approximating the given rates.
    std::vector<bool> h;
    for (int i = 0; i < window; ++i)
        h.push_back(i < static_cast<int>(std::lround(early * window)));
    for (int i = 0; i < window; ++i)
        h.push_back(i < static_cast<int>(std::lround(late * window)));
    return h;
}

}  // namespace

TEST_CASE("detector fires on a drop below the threshold") {
    AdaptationConfig cfg;  // window 50, drop 0.5
    CHECK(detect_shift(history_with_rates(0.8, 0.2, 50), cfg));       // 0.2 < 0.4
    CHECK_FALSE(detect_shift(history_with_rates(0.8, 0.8, 50), cfg)); // no drop
    CHECK_FALSE(detect_shift(history_with_rates(0.8, 0.5, 50), cfg)); // 0.5 >= 0.4
    CHECK_FALSE(detect_shift(history_with_rates(0.0, 0.0, 50), cfg)); // zero baseline
}

TEST_CASE("detector needs two full windows of history") {
    AdaptationConfig cfg;
    std::vector<bool> h(99, true);
    h.back() = false;
    CHECK_FALSE(detect_shift(h, cfg));  // 99 < 2 * 50
}

TEST_CASE("detector never fires on constant histories") {
    AdaptationConfig cfg;
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const bool value = rng.bounded(2) == 1;
        const int len = 100 + rng.bounded(300);
        std::vector<bool> h(static_cast<std::size_t>(len), value);
        CHECK_FALSE(detect_shift(h, cfg));
    }
}

TEST_CASE("boost multiplies epsilon and clips at eps_max") {
    AdaptationConfig cfg;  // lambda_boost 2, eps_max 1, d_boost 50
    EpsilonSchedule schedule;
    schedule.horizon = 5000;

    apply_boost(schedule, 0.4, cfg, 100);
    REQUIRE(schedule.boost.has_value());
    CHECK(schedule.boost->boosted_eps == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(schedule.boost->start_episode == 100);
    CHECK(schedule.boost->duration == 50);

    apply_boost(schedule, 0.7, cfg, 200);
    CHECK(schedule.boost->boosted_eps == 1.0);  // clipped

    cfg.lambda_boost = 1.0;
    apply_boost(schedule, 0.4, cfg, 300);
    CHECK(schedule.boost->boosted_eps == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("boost hand-off returns to the plain schedule") {
    AdaptationConfig cfg;
    EpsilonSchedule schedule;
    schedule.horizon = 5000;
    const int shift = 1700;
    apply_boost(schedule, epsilon_at(schedule, shift), cfg, shift);

    // With the default factor 2 the decayed boost sinks below the linear value
    // before the window ends, so the envelope is continuous at hand-off.
    CHECK(epsilon_at(schedule, shift + cfg.d_boost) ==
          schedule.linear_at(shift + cfg.d_boost));
    CHECK(epsilon_at(schedule, shift + cfg.d_boost + 1) ==
          schedule.linear_at(shift + cfg.d_boost + 1));
}

TEST_CASE("selective reset scales only collection entries") {
    CriticPair critics(8, 5);
    LearningConfig cfg;
    Rng rng(64);
    for (int s = 0; s < 8; ++s)
        for (int a = 0; a < 5; ++a) {
            critics.set_q_extrinsic(s, a, rng.uniform() * 20 - 10);
            critics.set_q_intrinsic(s, a, rng.uniform() * 20 - 10);
        }
    critics.set_q_extrinsic(3, kCollectAction, 10.0);
    critics.set_q_extrinsic(3, 0, 7.0);
    const CriticPair before = critics;

    selective_reset(critics, {kCollectAction}, 0.5, ResetScope::both);
    CHECK(critics.q_extrinsic(3, kCollectAction) == 5.0);
    CHECK(critics.q_extrinsic(3, 0) == 7.0);
    for (int s = 0; s < 8; ++s)
        for (int a = 0; a < 5; ++a) {
            if (a == kCollectAction) {
                CHECK(critics.q_extrinsic(s, a) == 0.5 * before.q_extrinsic(s, a));
                CHECK(critics.q_intrinsic(s, a) == 0.5 * before.q_intrinsic(s, a));
                // Sign preserved for positive lambda.
                CHECK(std::signbit(critics.q_extrinsic(s, a)) ==
                      std::signbit(before.q_extrinsic(s, a)));
            } else {
                // Bit-identical, not merely approximately equal.
                CHECK(critics.q_extrinsic(s, a) == before.q_extrinsic(s, a));
                CHECK(critics.q_intrinsic(s, a) == before.q_intrinsic(s, a));
            }
        }

    // Applying the reset twice scales by lambda squared.
    CriticPair twice = before;
    selective_reset(twice, {kCollectAction}, 0.5, ResetScope::both);
    selective_reset(twice, {kCollectAction}, 0.5, ResetScope::both);
    for (int s = 0; s < 8; ++s) {
        CHECK(twice.q_extrinsic(s, kCollectAction) ==
              doctest::Approx(0.25 * before.q_extrinsic(s, kCollectAction)).epsilon(1e-15));
        CHECK(twice.q_extrinsic(s, 1) == before.q_extrinsic(s, 1));
    }
}

TEST_CASE("reset scopes touch only their table") {
    CriticPair critics(4, 5);
    critics.set_q_extrinsic(1, kCollectAction, 8.0);
    critics.set_q_intrinsic(1, kCollectAction, 6.0);

    CriticPair intrinsic_only = critics;
    selective_reset(intrinsic_only, {kCollectAction}, 0.5, ResetScope::intrinsic_only);
    CHECK(intrinsic_only.q_extrinsic(1, kCollectAction) == 8.0);
    CHECK(intrinsic_only.q_intrinsic(1, kCollectAction) == 3.0);

    CriticPair extrinsic_only = critics;
    selective_reset(extrinsic_only, {kCollectAction}, 0.5, ResetScope::extrinsic_only);
    CHECK(extrinsic_only.q_extrinsic(1, kCollectAction) == 4.0);
    CHECK(extrinsic_only.q_intrinsic(1, kCollectAction) == 6.0);

    CHECK_THROWS_AS(selective_reset(critics, {}, 0.5, ResetScope::both),
                    std::invalid_argument);
}

namespace {

ShiftRecord some_shift(int episode) {
    return ShiftRecord{episode, ShiftSource::operator_notice, parse_ordering("X>Y>Z"),
                       parse_ordering("Y>Z>X")};
}

}  // namespace

TEST_CASE("on_shift composes boost and reset for camiq") {
    Agent agent(AgentKind::camiq, 16, 5);
    agent.schedule.horizon = 5000;
    agent.critics.set_q_extrinsic(3, kCollectAction, 10.0);

    on_shift(agent, 1700, some_shift(1700));
    CHECK(agent.shift_log.size() == 1);
    CHECK(agent.schedule.boost.has_value());
    CHECK(agent.critics.q_extrinsic(3, kCollectAction) == 5.0);
}

TEST_CASE("on_shift with both mechanisms disabled only logs") {
    Agent agent(AgentKind::camiq, 16, 5);
    agent.schedule.horizon = 5000;
    agent.ablation.disable_boost = true;
    agent.ablation.disable_reset = true;
    agent.critics.set_q_extrinsic(3, kCollectAction, 10.0);

    on_shift(agent, 1700, some_shift(1700));
    CHECK(agent.shift_log.size() == 1);
    CHECK_FALSE(agent.schedule.boost.has_value());
    CHECK(agent.critics.q_extrinsic(3, kCollectAction) == 10.0);
}

TEST_CASE("baselines adapt per their kind") {
    Agent plain(AgentKind::baseline, 16, 5);
    plain.schedule.horizon = 5000;
    plain.critics.set_q_extrinsic(0, kCollectAction, 4.0);
    on_shift(plain, 1700, some_shift(1700));
    CHECK(plain.shift_log.size() == 1);
    CHECK_FALSE(plain.schedule.boost.has_value());
    CHECK(plain.critics.q_extrinsic(0, kCollectAction) == 4.0);

    Agent boosted(AgentKind::baseline_boosted, 16, 5);
    boosted.schedule.horizon = 5000;
    boosted.critics.set_q_extrinsic(0, kCollectAction, 4.0);
    on_shift(boosted, 1700, some_shift(1700));
    CHECK(boosted.schedule.boost.has_value());                       // boost, ...
    CHECK(boosted.critics.q_extrinsic(0, kCollectAction) == 4.0);    // ...no reset
}

TEST_CASE("adaptation config invariants") {
    AdaptationConfig cfg;
    cfg.lambda_boost = 0.5;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("lambda_boost"),
                         std::runtime_error);
    cfg = AdaptationConfig{};
    cfg.lambda_reset = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
    cfg = AdaptationConfig{};
    cfg.d_boost = 0;
    CHECK_THROWS_AS(cfg.validate(), std::runtime_error);
}
