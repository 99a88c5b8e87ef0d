#pragma once

#include <string>
#include <vector>

#include "camiq/critics.hpp"
#include "camiq/info_space.hpp"
#include "camiq/policy.hpp"

namespace camiq {

enum class DetectionMode : int { explicit_only, detected, both };

std::string to_string(DetectionMode m);
DetectionMode detection_mode_from_string(const std::string& name);

struct AdaptationConfig {
    double lambda_boost = 2.0;
    double eps_max = 1.0;
    int d_boost = 50;
    double lambda_reset = 0.5;
    int detector_window = 50;
    double detector_drop = 0.5;  // relative drop that counts as a shift
    DetectionMode mode = DetectionMode::explicit_only;

    void validate() const;
    bool operator==(const AdaptationConfig&) const = default;
};

enum class ShiftSource : int { operator_notice, detector };

std::string to_string(ShiftSource s);

struct ShiftRecord {
    int episode = 0;
    ShiftSource source = ShiftSource::operator_notice;
    Ordering old_ordering;
    Ordering new_ordering;
};

/// True iff the mean success over the most recent detector_window episodes
/// fell below (1 - detector_drop) times the mean over the preceding window,
/// and that preceding mean is positive. Histories shorter than two windows
/// never fire.
bool detect_shift(const std::vector<bool>& success_history,
                  const AdaptationConfig& cfg);

/// Installs a boost: base value min(eps_max, current_eps * lambda_boost),
/// decaying over d_boost episodes starting at `episode`.
void apply_boost(EpsilonSchedule& schedule, double current_eps,
                 const AdaptationConfig& cfg, int episode);

/// Q(s,a) *= lambda_reset for every state and every collection action, on the
/// table(s) selected by scope. All other entries are left bit-identical.
void selective_reset(CriticPair& critics, const std::vector<int>& collection_actions,
                     double lambda_reset, ResetScope scope);

}  // namespace camiq
