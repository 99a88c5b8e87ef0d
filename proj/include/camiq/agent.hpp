#pragma once

#include <vector>

#include "camiq/adaptation.hpp"
#include "camiq/critics.hpp"
#include "camiq/env.hpp"
#include "camiq/policy.hpp"
#include "camiq/rng.hpp"

namespace camiq {

/// One learner: kind, ablation switches, critics, schedule state and the
/// per-episode histories the detector and the event log feed on.
struct Agent {
    AgentKind kind = AgentKind::camiq;
    AblationFlags ablation;
    LearningConfig learning;
    IntrinsicWeights weights;
    AdaptationConfig adapt;
    EpsilonSchedule schedule;
    CriticPair critics;

    std::vector<ShiftRecord> shift_log;
    std::vector<bool> collection_history;  // detector input, one flag per episode
    int detector_suppressed_until = 0;

    Agent(AgentKind kind_in, int n_states, int n_actions);

    bool uses_intrinsic() const { return kind == AgentKind::camiq; }
};

/// Reacts to a priority shift: camiq applies the epsilon boost and the
/// selective critic reset (subject to its ablation flags); the boosted
/// baseline applies only the fixed-duration boost; the plain baseline does
/// nothing. The record is always appended to the agent's shift log.
void on_shift(Agent& agent, int episode, const ShiftRecord& record);

/// Action choice for either agent kind at the given exploration rate.
Action select_action(Agent& agent, int s, double eps, Rng& rng);

/// One learning step after an environment transition. For camiq this records
/// the visit counts, composes the intrinsic reward and updates both critics;
/// baselines update the extrinsic critic only. Returns the intrinsic reward
/// used (0 for baselines).
double observe_transition(Agent& agent, int s, Action a, const Transition& t,
                          int s_next, bool arrival_is_info_cell);

}  // namespace camiq
