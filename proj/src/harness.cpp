#include "camiq/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace camiq {

using nlohmann::json;

void RecoveryParams::validate() const {
    if (window < 1) throw std::runtime_error("recovery: window >= 1");
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::runtime_error("recovery: 0 < fraction <= 1");
}

void ScenarioSpec::validate() const {
    if (episodes < 1) throw std::runtime_error("scenario: episodes >= 1");
    if (runs < 1) throw std::runtime_error("scenario: runs >= 1");
    if (layout_pool.empty()) throw std::runtime_error("scenario: empty layout pool");
    for (const auto& layout : layout_pool) layout.validate();
    int prev = -1;
    for (const auto& shift : shifts) {
        if (shift.episode <= prev)
            throw std::runtime_error("scenario: shift episodes strictly increasing");
        if (shift.episode >= episodes)
            throw std::runtime_error("scenario: shift episode " +
                                     std::to_string(shift.episode) +
                                     " not before the horizon");
        prev = shift.episode;
    }
    rewards.validate();
    learning.validate();
    weights.validate();
    adapt.validate();
    recovery.validate();
    if (!(eps0 >= eps_min && eps_min >= 0.0 && eps0 <= 1.0))
        throw std::runtime_error("scenario: eps0 >= eps_min >= 0 and eps0 <= 1");
}

namespace {

ScenarioSpec base_spec() {
    ScenarioSpec spec;
    spec.episodes = 5000;
    spec.runs = 10;
    spec.layout_pool = default_layout_pool();
    spec.initial_ordering = parse_ordering("X>Y>Z");
    return spec;
}

}  // namespace

ScenarioSpec ScenarioSpec::static_priorities() { return base_spec(); }

ScenarioSpec ScenarioSpec::single_shift() {
    ScenarioSpec spec = base_spec();
    spec.shifts = {{1700, parse_ordering("Y>Z>X")}};
    return spec;
}

ScenarioSpec ScenarioSpec::multi_shift() {
    ScenarioSpec spec = base_spec();
    spec.shifts = {{1700, parse_ordering("Y>Z>X")}, {3500, parse_ordering("Z>X>Y")}};
    return spec;
}

EpisodeRecord run_episode(Agent& agent, const GridWorld& env, Rng& rng, int episode) {
    const double eps = epsilon_at(agent.schedule, episode);

    EpisodeRecord record;
    record.episode = episode;
    record.epsilon_used = eps;

    EnvState state = env.reset();
    int s = env.state_index(state);
    while (!state.done) {
        const Action a = select_action(agent, s, eps, rng);
        Transition t = env.step(state, a);
        const int s_next = env.state_index(t.next.cell, t.next.collected);
        observe_transition(agent, s, a, t, s_next, env.is_item_cell(t.next.cell));
        record.total_reward += t.reward;
        state = std::move(t.next);
        s = s_next;
    }

    record.steps = state.steps;
    record.mission_success = state.mission_success;
    record.info_collection_success = env.full_mask(state.collected);
    return record;
}

RecoveryResult compute_recovery(const std::vector<EpisodeRecord>& records,
                                int shift_episode, int boundary,
                                const RecoveryParams& params) {
    params.validate();
    const int n = static_cast<int>(records.size());
    if (shift_episode < 0 || shift_episode >= n)
        throw std::out_of_range("compute_recovery: shift episode outside the records");
    boundary = std::min(boundary, n);
    const int w = params.window;

    auto window_rate = [&](int end) {  // rate over [end - w, end)
        const int begin = std::max(0, end - w);
        if (end <= begin) return 0.0;
        int hits = 0;
        for (int i = begin; i < end; ++i)
            hits += records[static_cast<std::size_t>(i)].mission_success ? 1 : 0;
        return static_cast<double>(hits) / static_cast<double>(end - begin);
    };

    RecoveryResult result;
    const double baseline = window_rate(shift_episode);
    if (baseline <= 0.0) {
        result.degenerate_baseline = true;
        return result;  // vacuously unrecovered
    }
    const double target = params.fraction * baseline;
    // Earliest candidate keeps the trailing window fully post-shift.
    for (int e = shift_episode + w; e <= boundary; ++e) {
        if (window_rate(e) >= target) {
            result.recovered = true;
            result.recovery_time = e - shift_episode;
            return result;
        }
    }
    return result;
}

RunMetrics run_training(const ScenarioSpec& spec, const AgentConfig& agent_cfg,
                        std::uint32_t run_seed) {
    return run_training_full(spec, agent_cfg, run_seed).metrics;
}

TrainingResult run_training_full(const ScenarioSpec& spec, const AgentConfig& agent_cfg,
                                 std::uint32_t run_seed) {
    spec.validate();
    Rng rng(run_seed);

    RunMetrics metrics;
    metrics.seed = run_seed;
    metrics.layout_index = rng.bounded(static_cast<int>(spec.layout_pool.size()));
    const Layout& layout = spec.layout_pool[static_cast<std::size_t>(metrics.layout_index)];

    InformationSpace info = InformationSpace::with_default_priorities(
        layout.item_ids(), spec.initial_ordering);
    GridWorld env(layout, info, spec.rewards);

    Agent agent(agent_cfg.kind, env.state_count(), kNumActions);
    agent.ablation = agent_cfg.ablation;
    agent.learning = spec.learning;
    agent.weights = spec.weights;
    agent.adapt = spec.adapt;
    agent.schedule.eps0 = spec.eps0;
    agent.schedule.eps_min = spec.eps_min;
    agent.schedule.horizon = spec.episodes;
    agent.schedule.validate();

    std::size_t next_shift = 0;
    for (int episode = 0; episode < spec.episodes; ++episode) {
        if (next_shift < spec.shifts.size() &&
            spec.shifts[next_shift].episode == episode) {
            const Ordering old_ordering = env.info().ordering;
            env.set_info(swap_priorities(env.info(), spec.shifts[next_shift].new_ordering,
                                         episode));
            const ShiftRecord record{episode, ShiftSource::operator_notice, old_ordering,
                                     env.info().ordering};
            on_shift(agent, episode, record);
            if (agent.adapt.mode == DetectionMode::both)
                agent.detector_suppressed_until = episode + agent.adapt.detector_window;
            ++next_shift;
        }

        const EpisodeRecord record = run_episode(agent, env, rng, episode);
        agent.collection_history.push_back(record.info_collection_success);
        metrics.records.push_back(record);

        const bool detector_on = agent.kind == AgentKind::camiq &&
                                 (agent.adapt.mode == DetectionMode::detected ||
                                  agent.adapt.mode == DetectionMode::both);
        if (detector_on && episode + 1 >= agent.detector_suppressed_until &&
            detect_shift(agent.collection_history, agent.adapt)) {
            const ShiftRecord record_det{episode + 1, ShiftSource::detector,
                                         env.info().ordering, env.info().ordering};
            on_shift(agent, episode + 1, record_det);
            // A fired detector needs two fresh windows before it may fire again.
            agent.detector_suppressed_until = episode + 1 + 2 * agent.adapt.detector_window;
        }
    }

    metrics.shifts = agent.shift_log;
    for (std::size_t i = 0; i < metrics.shifts.size(); ++i) {
        const int boundary = i + 1 < metrics.shifts.size()
                                 ? metrics.shifts[i + 1].episode
                                 : spec.episodes;
        metrics.recoveries.push_back(compute_recovery(
            metrics.records, metrics.shifts[i].episode, boundary, spec.recovery));
    }
    metrics.rng_words = rng.words_consumed();
    return TrainingResult{std::move(metrics), std::move(agent)};
}

AgentSummary aggregate(const std::vector<RunMetrics>& runs) {
    if (runs.empty()) throw std::invalid_argument("aggregate: no runs");

    AgentSummary summary;
    std::size_t episodes = 0;
    for (const auto& run : runs)
        episodes = std::max(episodes, run.records.size());
    summary.curve_mean.assign(episodes, 0.0);
    summary.curve_stderr.assign(episodes, 0.0);

    std::int64_t total_episodes = 0;
    std::int64_t missions = 0;
    std::int64_t collections = 0;
    double reward_sum = 0.0;
    std::int64_t shift_pairs = 0;
    std::int64_t recovered = 0;
    double recovery_time_sum = 0.0;
    std::int64_t recovery_time_count = 0;

    for (const auto& run : runs) {
        for (const auto& rec : run.records) {
            ++total_episodes;
            missions += rec.mission_success ? 1 : 0;
            collections += rec.info_collection_success ? 1 : 0;
            reward_sum += rec.total_reward;
        }
        for (const auto& rec : run.recoveries) {
            ++shift_pairs;
            if (rec.recovered) {
                ++recovered;
                recovery_time_sum += static_cast<double>(*rec.recovery_time);
                ++recovery_time_count;
            }
        }
    }

    summary.mission_success_pct =
        100.0 * static_cast<double>(missions) / static_cast<double>(total_episodes);
    summary.info_collection_pct =
        100.0 * static_cast<double>(collections) / static_cast<double>(total_episodes);
    summary.recovery_success_pct =
        shift_pairs == 0 ? 0.0
                         : 100.0 * static_cast<double>(recovered) /
                               static_cast<double>(shift_pairs);
    if (recovery_time_count > 0)
        summary.mean_recovery_time =
            recovery_time_sum / static_cast<double>(recovery_time_count);
    summary.mean_reward_per_episode = reward_sum / static_cast<double>(total_episodes);

    for (std::size_t e = 0; e < episodes; ++e) {
        double sum = 0.0;
        int count = 0;
        for (const auto& run : runs) {
            if (e < run.records.size()) {
                sum += run.records[e].total_reward;
                ++count;
            }
        }
        const double mean = sum / static_cast<double>(count);
        summary.curve_mean[e] = mean;
        if (count > 1) {
            double sq = 0.0;
            for (const auto& run : runs) {
                if (e < run.records.size()) {
                    const double d = run.records[e].total_reward - mean;
                    sq += d * d;
                }
            }
            summary.curve_stderr[e] =
                std::sqrt(sq / static_cast<double>(count - 1)) /
                std::sqrt(static_cast<double>(count));
        }
    }
    return summary;
}

std::vector<RunMetrics> run_scenario(const ScenarioSpec& spec,
                                     const AgentConfig& agent_cfg, int workers) {
    spec.validate();
    std::vector<RunMetrics> results(static_cast<std::size_t>(spec.runs));
    auto run_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i)
            results[static_cast<std::size_t>(i)] =
                run_training(spec, agent_cfg, spec.base_seed + static_cast<std::uint32_t>(i));
    };
    workers = std::max(1, std::min(workers, spec.runs));
    if (workers == 1) {
        run_range(0, spec.runs);
        return results;
    }
    std::vector<std::thread> threads;
    const int chunk = (spec.runs + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(spec.runs, begin + chunk);
        if (begin < end) threads.emplace_back(run_range, begin, end);
    }
    for (auto& t : threads) t.join();
    return results;
}

std::vector<std::pair<std::string, AblationFlags>> ablation_grid() {
    std::vector<std::pair<std::string, AblationFlags>> grid;
    grid.emplace_back("Full CA-MIQ", AblationFlags{});
    {
        AblationFlags f;
        f.disable_priority_components = true;
        grid.emplace_back("w/o Priority Alignment + Awareness", f);
    }
    {
        AblationFlags f;
        f.disable_novelty = true;
        grid.emplace_back("w/o State Novelty", f);
    }
    {
        AblationFlags f;
        f.disable_boost = true;
        grid.emplace_back("w/o Exploration Boost", f);
    }
    {
        AblationFlags f;
        f.disable_reset = true;
        grid.emplace_back("w/o Selective Reset", f);
    }
    {
        AblationFlags f;
        f.reset_scope = ResetScope::intrinsic_only;
        grid.emplace_back("Intrinsic Reset Only", f);
    }
    {
        AblationFlags f;
        f.reset_scope = ResetScope::extrinsic_only;
        grid.emplace_back("Extrinsic Reset Only", f);
    }
    return grid;
}

std::vector<std::pair<std::string, AgentSummary>> run_ablation(const ScenarioSpec& spec,
                                                               int workers) {
    std::vector<std::pair<std::string, AgentSummary>> rows;
    for (const auto& [label, flags] : ablation_grid()) {
        AgentConfig cfg;
        cfg.kind = AgentKind::camiq;
        cfg.ablation = flags;
        rows.emplace_back(label, aggregate(run_scenario(spec, cfg, workers)));
    }
    return rows;
}

// --- serialization ---

namespace {

json ordering_to_json(const Ordering& o) { return to_string(o); }

Ordering ordering_from_json(const json& j) {
    return parse_ordering(j.get<std::string>());
}

json record_to_json(const EpisodeRecord& r) {
    return json{{"episode", r.episode},
                {"total_reward", r.total_reward},
                {"mission_success", r.mission_success},
                {"info_collection_success", r.info_collection_success},
                {"steps", r.steps},
                {"epsilon_used", r.epsilon_used}};
}

EpisodeRecord record_from_json(const json& j) {
    EpisodeRecord r;
    r.episode = j.at("episode").get<int>();
    r.total_reward = j.at("total_reward").get<double>();
    r.mission_success = j.at("mission_success").get<bool>();
    r.info_collection_success = j.at("info_collection_success").get<bool>();
    r.steps = j.at("steps").get<int>();
    r.epsilon_used = j.at("epsilon_used").get<double>();
    return r;
}

}  // namespace

std::string run_metrics_to_json(const std::vector<RunMetrics>& runs) {
    json out = json::array();
    for (const auto& run : runs) {
        json jrun;
        jrun["layout_index"] = run.layout_index;
        jrun["seed"] = run.seed;
        jrun["rng_words"] = run.rng_words;
        jrun["records"] = json::array();
        for (const auto& rec : run.records) jrun["records"].push_back(record_to_json(rec));
        jrun["shifts"] = json::array();
        for (const auto& s : run.shifts)
            jrun["shifts"].push_back(json{{"episode", s.episode},
                                          {"source", to_string(s.source)},
                                          {"old_ordering", ordering_to_json(s.old_ordering)},
                                          {"new_ordering", ordering_to_json(s.new_ordering)}});
        jrun["recoveries"] = json::array();
        for (const auto& r : run.recoveries) {
            json jr{{"recovered", r.recovered},
                    {"degenerate_baseline", r.degenerate_baseline}};
            if (r.recovery_time) jr["recovery_time"] = *r.recovery_time;
            jrun["recoveries"].push_back(jr);
        }
        out.push_back(jrun);
    }
    return out.dump(2) + "\n";
}

std::vector<RunMetrics> run_metrics_from_json(const std::string& text) {
    const json in = json::parse(text);
    std::vector<RunMetrics> runs;
    for (const auto& jrun : in) {
        RunMetrics run;
        run.layout_index = jrun.at("layout_index").get<int>();
        run.seed = jrun.at("seed").get<std::uint32_t>();
        run.rng_words = jrun.at("rng_words").get<std::uint64_t>();
        for (const auto& jrec : jrun.at("records"))
            run.records.push_back(record_from_json(jrec));
        for (const auto& js : jrun.at("shifts")) {
            ShiftRecord s;
            s.episode = js.at("episode").get<int>();
            s.source = js.at("source").get<std::string>() == "detector"
                           ? ShiftSource::detector
                           : ShiftSource::operator_notice;
            s.old_ordering = ordering_from_json(js.at("old_ordering"));
            s.new_ordering = ordering_from_json(js.at("new_ordering"));
            run.shifts.push_back(s);
        }
        for (const auto& jr : jrun.at("recoveries")) {
            RecoveryResult r;
            r.recovered = jr.at("recovered").get<bool>();
            r.degenerate_baseline = jr.at("degenerate_baseline").get<bool>();
            if (jr.contains("recovery_time")) r.recovery_time = jr.at("recovery_time").get<int>();
            run.recoveries.push_back(r);
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

// --- report formatting ---

namespace {

std::string fixed1(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

std::string shortest(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace

std::string format_summary_table(
    const std::vector<std::pair<std::string, AgentSummary>>& rows) {
    const std::vector<std::string> metrics = {
        "Mission Success (%)", "Info Collection (%)", "Recovery Success (%)",
        "Recovery Time (Ep.)", "Reward (per Ep.)"};

    std::vector<std::vector<std::string>> cells(metrics.size());
    for (const auto& [label, s] : rows) {
        cells[0].push_back(fixed1(s.mission_success_pct));
        cells[1].push_back(fixed1(s.info_collection_pct));
        cells[2].push_back(fixed1(s.recovery_success_pct));
        cells[3].push_back(s.mean_recovery_time ? fixed1(*s.mean_recovery_time)
                                                : std::string("N/A"));
        cells[4].push_back(fixed1(s.mean_reward_per_episode));
    }

    std::size_t metric_w = std::string("Metric").size();
    for (const auto& m : metrics) metric_w = std::max(metric_w, m.size());
    std::vector<std::size_t> col_w(rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c) {
        col_w[c] = rows[c].first.size();
        for (const auto& row : cells) col_w[c] = std::max(col_w[c], row[c].size());
    }

    std::ostringstream out;
    out << pad("Metric", metric_w);
    for (std::size_t c = 0; c < rows.size(); ++c)
        out << "  " << pad(rows[c].first, col_w[c]);
    out << "\n";
    for (std::size_t m = 0; m < metrics.size(); ++m) {
        out << pad(metrics[m], metric_w);
        for (std::size_t c = 0; c < rows.size(); ++c)
            out << "  " << pad(cells[m][c], col_w[c]);
        out << "\n";
    }
    return out.str();
}

std::string format_ablation_table(
    const std::vector<std::pair<std::string, AgentSummary>>& rows) {
    std::size_t label_w = std::string("Configuration").size();
    for (const auto& [label, s] : rows) label_w = std::max(label_w, label.size());

    std::ostringstream out;
    out << pad("Configuration", label_w) << "  " << pad("Adapt. Time (Ep.)", 17) << "  "
        << pad("Mission Success", 15) << "  Info Collection\n";
    for (const auto& [label, s] : rows) {
        out << pad(label, label_w) << "  "
            << pad(s.mean_recovery_time ? fixed1(*s.mean_recovery_time)
                                        : std::string("N/A"),
                   17)
            << "  " << pad(fixed1(s.mission_success_pct) + "%", 15) << "  "
            << fixed1(s.info_collection_pct) << "%\n";
    }
    return out.str();
}

std::string curve_csv(const AgentSummary& summary) {
    std::string out = "episode,mean_reward,stderr\n";
    for (std::size_t e = 0; e < summary.curve_mean.size(); ++e) {
        out += std::to_string(e);
        out += ',';
        out += shortest(summary.curve_mean[e]);
        out += ',';
        out += shortest(summary.curve_stderr[e]);
        out += '\n';
    }
    return out;
}

std::string event_log_text(const std::vector<RunMetrics>& runs) {
    std::string out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (const auto& s : runs[i].shifts) {
            out += "run=" + std::to_string(i);
            out += " episode=" + std::to_string(s.episode);
            out += " source=" + to_string(s.source);
            out += " old=" + to_string(s.old_ordering);
            out += " new=" + to_string(s.new_ordering);
            out += '\n';
        }
    }
    return out;
}

}  // namespace camiq
