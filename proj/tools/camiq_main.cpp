// Command-line entry point: run scenarios, run the ablation grid, inspect
// layout pools and query the value-iteration oracle.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "camiq/config.hpp"
#include "camiq/harness.hpp"
#include "camiq/oracle.hpp"

namespace {

using namespace camiq;

struct CommonFlags {
    std::string config_path;
    std::optional<std::string> scenario;
    std::optional<std::string> agent;
    std::optional<int> runs;
    std::optional<int> episodes;
    std::optional<std::uint32_t> seed;
    std::optional<std::string> out_dir;
    std::optional<int> workers;
    bool paper_scale = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file");
    cmd->add_option("--scenario", flags.scenario, "static|single_shift|multi_shift");
    cmd->add_option("--agent", flags.agent, "baseline|baseline_boosted|camiq|all");
    cmd->add_option("--runs", flags.runs, "independent training runs");
    cmd->add_option("--episodes", flags.episodes, "episodes per run");
    cmd->add_option("--seed", flags.seed, "base seed");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--workers", flags.workers, "worker thread cap");
    cmd->add_flag("--paper-scale", flags.paper_scale, "run 100 runs per agent");
}

RunConfig resolve_config(const CommonFlags& flags) {
    RunConfig cfg;
    if (!flags.config_path.empty()) cfg = load_config_file(flags.config_path);
    // Flags override file values.
    if (flags.scenario) cfg.scenario = scenario_from_string(*flags.scenario);
    if (flags.agent) cfg.agent = agent_selection_from_string(*flags.agent);
    if (flags.runs) cfg.runs = *flags.runs;
    if (flags.episodes) cfg.episodes = *flags.episodes;
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.out_dir) cfg.out_dir = *flags.out_dir;
    if (flags.workers) cfg.workers = *flags.workers;
    if (flags.paper_scale) cfg.runs = 100;
    cfg.validate();
    return cfg;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

int cmd_run(const CommonFlags& flags) {
    const RunConfig cfg = resolve_config(flags);
    const ScenarioSpec spec = to_scenario_spec(cfg);

    std::vector<std::pair<std::string, AgentKind>> agents;
    if (cfg.agent == AgentSelection::baseline || cfg.agent == AgentSelection::all)
        agents.emplace_back("Standard Baseline", AgentKind::baseline);
    if (cfg.agent == AgentSelection::baseline_boosted || cfg.agent == AgentSelection::all)
        agents.emplace_back("Boosted Baseline", AgentKind::baseline_boosted);
    if (cfg.agent == AgentSelection::camiq || cfg.agent == AgentSelection::all)
        agents.emplace_back("CA-MIQ", AgentKind::camiq);

    write_file_atomic(out_path(cfg, "config.json"), config_to_json(cfg));

    std::vector<std::pair<std::string, AgentSummary>> rows;
    for (const auto& [label, kind] : agents) {
        AgentConfig agent_cfg;
        agent_cfg.kind = kind;
        if (kind == AgentKind::camiq) agent_cfg.ablation = cfg.ablation;
        const auto runs = run_scenario(spec, agent_cfg, cfg.workers);
        const AgentSummary summary = aggregate(runs);

        const std::string slug = to_string(kind);
        write_file_atomic(out_path(cfg, "curve_" + slug + ".csv"), curve_csv(summary));
        write_file_atomic(out_path(cfg, "events_" + slug + ".log"), event_log_text(runs));
        if (cfg.save_metrics)
            write_file_atomic(out_path(cfg, "metrics_" + slug + ".json"),
                              run_metrics_to_json(runs));
        rows.emplace_back(label, summary);
    }

    const std::string table = format_summary_table(rows);
    write_file_atomic(out_path(cfg, "summary.txt"), table);
    std::cout << table;
    return 0;
}

int cmd_ablate(const CommonFlags& flags) {
    CommonFlags adjusted = flags;
    if (!adjusted.scenario) adjusted.scenario = "multi_shift";
    const RunConfig cfg = resolve_config(adjusted);
    const ScenarioSpec spec = to_scenario_spec(cfg);

    write_file_atomic(out_path(cfg, "config.json"), config_to_json(cfg));
    const auto rows = run_ablation(spec, cfg.workers);
    const std::string table = format_ablation_table(rows);
    write_file_atomic(out_path(cfg, "ablation.txt"), table);
    std::cout << table;
    return 0;
}

int cmd_layouts(const std::string& pool_path) {
    const std::vector<Layout> pool = pool_path.empty()
                                         ? default_layout_pool()
                                         : parse_layout_pool(read_file(pool_path));
    std::cout << serialize_layout_pool(pool);
    std::cerr << "pool ok: " << pool.size() << " layouts\n";
    return 0;
}

int cmd_oracle(const std::string& pool_path, const std::string& layout_id,
               const std::string& ordering_text, double gamma) {
    const std::vector<Layout> pool = pool_path.empty()
                                         ? default_layout_pool()
                                         : parse_layout_pool(read_file(pool_path));
    const Ordering ordering = parse_ordering(ordering_text);

    for (const Layout& layout : pool) {
        if (!layout_id.empty() && layout.id != layout_id) continue;
        const InformationSpace info =
            InformationSpace::with_default_priorities(layout.item_ids(), ordering);
        GridWorld env(layout, info);
        const OracleResult vi = value_iteration(env, gamma);
        const double ret = greedy_rollout_return(env, vi.q);
        std::printf("layout=%s ordering=%s optimal_return=%.17g sweeps=%d\n",
                    layout.id.c_str(), to_string(ordering).c_str(), ret, vi.sweeps);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CA-MIQ gridworld experiments"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "train agents on a scenario");
    add_common_flags(run, run_flags);

    CommonFlags ablate_flags;
    CLI::App* ablate = app.add_subcommand("ablate", "run the ablation grid");
    add_common_flags(ablate, ablate_flags);

    std::string layouts_pool;
    CLI::App* layouts = app.add_subcommand("layouts", "validate and print a layout pool");
    layouts->add_option("--pool", layouts_pool, "pool document (default: bundled)");

    std::string oracle_pool;
    std::string oracle_layout;
    std::string oracle_ordering = "X>Y>Z";
    double oracle_gamma = 0.99;
    CLI::App* oracle = app.add_subcommand("oracle", "value-iteration optimal returns");
    oracle->add_option("--pool", oracle_pool, "pool document (default: bundled)");
    oracle->add_option("--layout", oracle_layout, "layout id (default: all)");
    oracle->add_option("--ordering", oracle_ordering, "collection ordering");
    oracle->add_option("--gamma", oracle_gamma, "discount factor");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_flags);
        if (ablate->parsed()) return cmd_ablate(ablate_flags);
        if (layouts->parsed()) return cmd_layouts(layouts_pool);
        if (oracle->parsed())
            return cmd_oracle(oracle_pool, oracle_layout, oracle_ordering, oracle_gamma);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
