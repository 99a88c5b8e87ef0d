#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "camiq/adaptation.hpp"
#include "camiq/agent.hpp"
#include "camiq/config.hpp"
#include "camiq/harness.hpp"
#include "camiq/oracle.hpp"

namespace py = pybind11;
using namespace camiq;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dual-critic tabular Q-learning with priority-aware exploration "
              "in a SAR gridworld";

    py::class_<Cell>(m, "Cell")
        .def(py::init<int, int>(), py::arg("x") = 0, py::arg("y") = 0)
        .def_readwrite("x", &Cell::x)
        .def_readwrite("y", &Cell::y)
        .def(py::self == py::self)
        .def("__repr__", [](const Cell& c) {
            return "Cell(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")";
        });

    py::enum_<Action>(m, "Action")
        .value("up", Action::up)
        .value("down", Action::down)
        .value("left", Action::left)
        .value("right", Action::right)
        .value("collect", Action::collect);

    py::enum_<Event>(m, "Event")
        .value("moved", Event::moved)
        .value("blocked", Event::blocked)
        .value("ditch", Event::ditch)
        .value("collected_in_order", Event::collected_in_order)
        .value("collected_out_of_order_rejected", Event::collected_out_of_order_rejected)
        .value("attempt_limit_exceeded", Event::attempt_limit_exceeded)
        .value("mission_complete", Event::mission_complete)
        .value("step_limit", Event::step_limit);

    py::class_<Layout>(m, "Layout")
        .def(py::init<>())
        .def_readwrite("width", &Layout::width)
        .def_readwrite("height", &Layout::height)
        .def_readwrite("start", &Layout::start)
        .def_readwrite("target", &Layout::target)
        .def_readwrite("ditches", &Layout::ditches)
        .def_readwrite("item_cells", &Layout::item_cells)
        .def_readwrite("id", &Layout::id)
        .def("validate", &Layout::validate)
        .def("item_ids", &Layout::item_ids)
        .def("__repr__",
             [](const Layout& l) { return "<Layout '" + l.id + "'>"; });

    m.def("parse_layout_pool", &parse_layout_pool);
    m.def("serialize_layout_pool", &serialize_layout_pool);
    m.def("default_layout_pool", &default_layout_pool,
          py::return_value_policy::copy);

    py::class_<Ordering>(m, "Ordering")
        .def(py::init([](const std::string& text) { return parse_ordering(text); }))
        .def("rank_of", &Ordering::rank_of)
        .def("item_at_rank", &Ordering::item_at_rank)
        .def(py::self == py::self)
        .def("__str__", [](const Ordering& o) { return to_string(o); })
        .def("__repr__",
             [](const Ordering& o) { return "Ordering('" + to_string(o) + "')"; });

    py::class_<InformationSpace>(m, "InformationSpace")
        .def_static("with_default_priorities", &InformationSpace::with_default_priorities)
        .def_readonly("items", &InformationSpace::items)
        .def_readonly("priorities", &InformationSpace::priorities)
        .def_readonly("ordering", &InformationSpace::ordering)
        .def_readonly("contexts", &InformationSpace::contexts);

    m.def("swap_priorities", &swap_priorities, py::arg("info"), py::arg("new_ordering"),
          py::arg("episode"));

    py::class_<RewardConfig>(m, "RewardConfig")
        .def(py::init<>())
        .def_readwrite("step_cost", &RewardConfig::step_cost)
        .def_readwrite("ditch_penalty", &RewardConfig::ditch_penalty)
        .def_readwrite("collect_reward", &RewardConfig::collect_reward)
        .def_readwrite("out_of_order_penalty", &RewardConfig::out_of_order_penalty)
        .def_readwrite("mission_reward", &RewardConfig::mission_reward)
        .def_readwrite("action_limit_penalty", &RewardConfig::action_limit_penalty)
        .def_readwrite("collect_attempt_limit", &RewardConfig::collect_attempt_limit)
        .def_readwrite("step_limit", &RewardConfig::step_limit);

    py::class_<EnvState>(m, "EnvState")
        .def_readonly("cell", &EnvState::cell)
        .def_readonly("collected", &EnvState::collected)
        .def_readonly("steps", &EnvState::steps)
        .def_readonly("done", &EnvState::done)
        .def_readonly("mission_success", &EnvState::mission_success);

    py::class_<Transition>(m, "Transition")
        .def_readonly("next", &Transition::next)
        .def_readonly("reward", &Transition::reward)
        .def_readonly("done", &Transition::done)
        .def_readonly("event", &Transition::event)
        .def_readonly("action_event", &Transition::action_event);

    py::class_<GridWorld>(m, "GridWorld")
        .def(py::init<Layout, InformationSpace, RewardConfig>(), py::arg("layout"),
             py::arg("info"), py::arg("rewards") = RewardConfig{})
        .def("reset", &GridWorld::reset, py::arg("seed") = 0)
        .def("step", &GridWorld::step)
        .def("state_index",
             py::overload_cast<const EnvState&>(&GridWorld::state_index, py::const_))
        .def("state_count", &GridWorld::state_count)
        .def("set_info", &GridWorld::set_info)
        .def_property_readonly("info", &GridWorld::info)
        .def_property_readonly("layout", &GridWorld::layout);

    py::class_<LearningConfig>(m, "LearningConfig")
        .def(py::init<>())
        .def_readwrite("alpha", &LearningConfig::alpha)
        .def_readwrite("gamma", &LearningConfig::gamma);

    py::class_<IntrinsicWeights>(m, "IntrinsicWeights")
        .def(py::init<>())
        .def_readwrite("beta_novelty", &IntrinsicWeights::beta_novelty)
        .def_readwrite("beta_info", &IntrinsicWeights::beta_info)
        .def_readwrite("beta_align_pos", &IntrinsicWeights::beta_align_pos)
        .def_readwrite("beta_align_neg", &IntrinsicWeights::beta_align_neg)
        .def_readwrite("w_novelty", &IntrinsicWeights::w_novelty)
        .def_readwrite("w_info", &IntrinsicWeights::w_info)
        .def_readwrite("w_align", &IntrinsicWeights::w_align);

    py::class_<CriticPair>(m, "CriticPair")
        .def(py::init<int, int>(), py::arg("n_states"), py::arg("n_actions"))
        .def("q_extrinsic", &CriticPair::q_extrinsic)
        .def("q_intrinsic", &CriticPair::q_intrinsic)
        .def("set_q_extrinsic", &CriticPair::set_q_extrinsic)
        .def("set_q_intrinsic", &CriticPair::set_q_intrinsic)
        .def("extrinsic_update", &CriticPair::extrinsic_update)
        .def("intrinsic_update", &CriticPair::intrinsic_update)
        .def("record_visit", &CriticPair::record_visit)
        .def("record_info_visit", &CriticPair::record_info_visit)
        .def("visits", &CriticPair::visits)
        .def("info_visits", &CriticPair::info_visits)
        .def("extrinsic_csv", &CriticPair::extrinsic_csv)
        .def("intrinsic_csv", &CriticPair::intrinsic_csv);

    m.def("novelty_reward", &novelty_reward);
    m.def("info_location_reward", &info_location_reward);
    m.def("alignment_reward", &alignment_reward);
    m.def("intrinsic_reward", &intrinsic_reward);

    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint32_t>())
        .def("uniform", &Rng::uniform)
        .def("bounded", &Rng::bounded)
        .def("words_consumed", &Rng::words_consumed);

    py::class_<BoostState>(m, "BoostState")
        .def(py::init<>())
        .def_readwrite("start_episode", &BoostState::start_episode)
        .def_readwrite("boosted_eps", &BoostState::boosted_eps)
        .def_readwrite("duration", &BoostState::duration);

    py::class_<EpsilonSchedule>(m, "EpsilonSchedule")
        .def(py::init<>())
        .def_readwrite("eps0", &EpsilonSchedule::eps0)
        .def_readwrite("eps_min", &EpsilonSchedule::eps_min)
        .def_readwrite("horizon", &EpsilonSchedule::horizon)
        .def_readwrite("boost", &EpsilonSchedule::boost);

    m.def("epsilon_at", &epsilon_at);
    m.def("boosted_epsilon", &boosted_epsilon);
    m.def("select_action_camiq", &select_action_camiq);
    m.def("select_action_baseline", &select_action_baseline);

    py::enum_<AgentKind>(m, "AgentKind")
        .value("baseline", AgentKind::baseline)
        .value("baseline_boosted", AgentKind::baseline_boosted)
        .value("camiq", AgentKind::camiq);

    py::enum_<ResetScope>(m, "ResetScope")
        .value("both", ResetScope::both)
        .value("intrinsic_only", ResetScope::intrinsic_only)
        .value("extrinsic_only", ResetScope::extrinsic_only);

    py::class_<AblationFlags>(m, "AblationFlags")
        .def(py::init<>())
        .def_readwrite("disable_novelty", &AblationFlags::disable_novelty)
        .def_readwrite("disable_priority_components",
                       &AblationFlags::disable_priority_components)
        .def_readwrite("disable_boost", &AblationFlags::disable_boost)
        .def_readwrite("disable_reset", &AblationFlags::disable_reset)
        .def_readwrite("reset_scope", &AblationFlags::reset_scope);

    py::class_<AdaptationConfig>(m, "AdaptationConfig")
        .def(py::init<>())
        .def_readwrite("lambda_boost", &AdaptationConfig::lambda_boost)
        .def_readwrite("eps_max", &AdaptationConfig::eps_max)
        .def_readwrite("d_boost", &AdaptationConfig::d_boost)
        .def_readwrite("lambda_reset", &AdaptationConfig::lambda_reset)
        .def_readwrite("detector_window", &AdaptationConfig::detector_window)
        .def_readwrite("detector_drop", &AdaptationConfig::detector_drop);

    m.def("detect_shift", &detect_shift);
    m.def("apply_boost", &apply_boost);
    m.def("selective_reset", &selective_reset);

    py::class_<RecoveryParams>(m, "RecoveryParams")
        .def(py::init<>())
        .def_readwrite("window", &RecoveryParams::window)
        .def_readwrite("fraction", &RecoveryParams::fraction);

    py::class_<ScheduledShift>(m, "ScheduledShift")
        .def(py::init<>())
        .def_readwrite("episode", &ScheduledShift::episode)
        .def_readwrite("new_ordering", &ScheduledShift::new_ordering);

    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def(py::init<>())
        .def_static("static_priorities", &ScenarioSpec::static_priorities)
        .def_static("single_shift", &ScenarioSpec::single_shift)
        .def_static("multi_shift", &ScenarioSpec::multi_shift)
        .def_readwrite("episodes", &ScenarioSpec::episodes)
        .def_readwrite("shifts", &ScenarioSpec::shifts)
        .def_readwrite("runs", &ScenarioSpec::runs)
        .def_readwrite("layout_pool", &ScenarioSpec::layout_pool)
        .def_readwrite("initial_ordering", &ScenarioSpec::initial_ordering)
        .def_readwrite("base_seed", &ScenarioSpec::base_seed)
        .def_readwrite("rewards", &ScenarioSpec::rewards)
        .def_readwrite("learning", &ScenarioSpec::learning)
        .def_readwrite("weights", &ScenarioSpec::weights)
        .def_readwrite("adapt", &ScenarioSpec::adapt)
        .def_readwrite("eps0", &ScenarioSpec::eps0)
        .def_readwrite("eps_min", &ScenarioSpec::eps_min)
        .def_readwrite("recovery", &ScenarioSpec::recovery);

    py::class_<EpisodeRecord>(m, "EpisodeRecord")
        .def_readonly("episode", &EpisodeRecord::episode)
        .def_readonly("total_reward", &EpisodeRecord::total_reward)
        .def_readonly("mission_success", &EpisodeRecord::mission_success)
        .def_readonly("info_collection_success", &EpisodeRecord::info_collection_success)
        .def_readonly("steps", &EpisodeRecord::steps)
        .def_readonly("epsilon_used", &EpisodeRecord::epsilon_used);

    py::class_<RecoveryResult>(m, "RecoveryResult")
        .def_readonly("recovered", &RecoveryResult::recovered)
        .def_readonly("recovery_time", &RecoveryResult::recovery_time)
        .def_readonly("degenerate_baseline", &RecoveryResult::degenerate_baseline);

    py::enum_<ShiftSource>(m, "ShiftSource")
        .value("operator_notice", ShiftSource::operator_notice)
        .value("detector", ShiftSource::detector);

    py::class_<ShiftRecord>(m, "ShiftRecord")
        .def_readonly("episode", &ShiftRecord::episode)
        .def_readonly("source", &ShiftRecord::source)
        .def_readonly("old_ordering", &ShiftRecord::old_ordering)
        .def_readonly("new_ordering", &ShiftRecord::new_ordering);

    py::class_<RunMetrics>(m, "RunMetrics")
        .def_readonly("layout_index", &RunMetrics::layout_index)
        .def_readonly("seed", &RunMetrics::seed)
        .def_readonly("records", &RunMetrics::records)
        .def_readonly("shifts", &RunMetrics::shifts)
        .def_readonly("recoveries", &RunMetrics::recoveries)
        .def_readonly("rng_words", &RunMetrics::rng_words);

    py::class_<AgentSummary>(m, "AgentSummary")
        .def_readonly("mission_success_pct", &AgentSummary::mission_success_pct)
        .def_readonly("info_collection_pct", &AgentSummary::info_collection_pct)
        .def_readonly("recovery_success_pct", &AgentSummary::recovery_success_pct)
        .def_readonly("mean_recovery_time", &AgentSummary::mean_recovery_time)
        .def_readonly("mean_reward_per_episode", &AgentSummary::mean_reward_per_episode)
        .def_readonly("curve_mean", &AgentSummary::curve_mean)
        .def_readonly("curve_stderr", &AgentSummary::curve_stderr);

    py::class_<AgentConfig>(m, "AgentConfig")
        .def(py::init<>())
        .def_readwrite("kind", &AgentConfig::kind)
        .def_readwrite("ablation", &AgentConfig::ablation);

    m.def("run_training", &run_training, py::arg("spec"), py::arg("agent"),
          py::arg("run_seed"));
    m.def("run_scenario", &run_scenario, py::arg("spec"), py::arg("agent"),
          py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("run_ablation", &run_ablation, py::arg("spec"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("compute_recovery", &compute_recovery);
    m.def("aggregate", &aggregate);
    m.def("format_summary_table", &format_summary_table);
    m.def("format_ablation_table", &format_ablation_table);
    m.def("curve_csv", &curve_csv);
    m.def("event_log_text", &event_log_text);
    m.def("run_metrics_to_json", &run_metrics_to_json);
    m.def("run_metrics_from_json", &run_metrics_from_json);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("q", &OracleResult::q)
        .def_readonly("sweeps", &OracleResult::sweeps)
        .def_readonly("residual", &OracleResult::residual);

    m.def("value_iteration", &value_iteration, py::arg("env"), py::arg("gamma"),
          py::arg("tol") = 1e-13, py::arg("max_sweeps") = 20000);
    m.def("greedy_rollout_return", &greedy_rollout_return);
    m.def("optimal_episode_return", &optimal_episode_return);
}
