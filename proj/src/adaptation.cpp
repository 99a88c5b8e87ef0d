#include "camiq/adaptation.hpp"

#include <numeric>
#include <stdexcept>

namespace camiq {

std::string to_string(DetectionMode m) {
    switch (m) {
        case DetectionMode::explicit_only: return "explicit";
        case DetectionMode::detected: return "detected";
        case DetectionMode::both: return "both";
    }
    throw std::invalid_argument("unknown detection mode");
}

DetectionMode detection_mode_from_string(const std::string& name) {
    if (name == "explicit") return DetectionMode::explicit_only;
    if (name == "detected") return DetectionMode::detected;
    if (name == "both") return DetectionMode::both;
    throw std::invalid_argument("unknown detection mode '" + name + "'");
}

std::string to_string(ShiftSource s) {
    switch (s) {
        case ShiftSource::operator_notice: return "operator";
        case ShiftSource::detector: return "detector";
    }
    throw std::invalid_argument("unknown shift source");
}

void AdaptationConfig::validate() const {
    if (lambda_boost < 1.0) throw std::runtime_error("adaptation: lambda_boost >= 1");
    if (!(lambda_reset > 0.0 && lambda_reset <= 1.0))
        throw std::runtime_error("adaptation: 0 < lambda_reset <= 1");
    if (eps_max > 1.0 || eps_max <= 0.0)
        throw std::runtime_error("adaptation: 0 < eps_max <= 1");
    if (d_boost < 1) throw std::runtime_error("adaptation: d_boost >= 1");
    if (detector_window < 1) throw std::runtime_error("adaptation: detector_window >= 1");
    if (!(detector_drop > 0.0 && detector_drop <= 1.0))
        throw std::runtime_error("adaptation: 0 < detector_drop <= 1");
}

bool detect_shift(const std::vector<bool>& success_history,
                  const AdaptationConfig& cfg) {
    const int w = cfg.detector_window;
    const int n = static_cast<int>(success_history.size());
    if (n < 2 * w) return false;
    auto window_mean = [&](int begin) {
        int hits = 0;
        for (int i = begin; i < begin + w; ++i)
            hits += success_history[static_cast<std::size_t>(i)] ? 1 : 0;
        return static_cast<double>(hits) / static_cast<double>(w);
    };
    const double previous = window_mean(n - 2 * w);
    const double recent = window_mean(n - w);
    return previous > 0.0 && recent < (1.0 - cfg.detector_drop) * previous;
}

void apply_boost(EpsilonSchedule& schedule, double current_eps,
                 const AdaptationConfig& cfg, int episode) {
    BoostState boost;
    boost.start_episode = episode;
    boost.boosted_eps = std::min(cfg.eps_max, current_eps * cfg.lambda_boost);
    boost.duration = cfg.d_boost;
    schedule.boost = boost;
}

void selective_reset(CriticPair& critics, const std::vector<int>& collection_actions,
                     double lambda_reset, ResetScope scope) {
    if (collection_actions.empty())
        throw std::invalid_argument("selective_reset: empty collection action set");
    for (int a : collection_actions) {
        if (a < 0 || a >= critics.n_actions())
            throw std::out_of_range("selective_reset: action index " + std::to_string(a));
    }
    auto scale = [&](std::vector<double>& table) {
        for (int s = 0; s < critics.n_states(); ++s)
            for (int a : collection_actions)
                table[static_cast<std::size_t>(s) * critics.n_actions() + a] *= lambda_reset;
    };
    if (scope == ResetScope::both || scope == ResetScope::extrinsic_only)
        scale(critics.extrinsic_table());
    if (scope == ResetScope::both || scope == ResetScope::intrinsic_only)
        scale(critics.intrinsic_table());
}

}  // namespace camiq
