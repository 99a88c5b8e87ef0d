#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "camiq/env.hpp"

namespace camiq {

struct LearningConfig {
    double alpha = 0.1;
    double gamma = 0.99;

    void validate() const;
    bool operator==(const LearningConfig&) const = default;
};

/// Coefficients of the three intrinsic components and their mixture weights.
/// The weights must sum to 1; ablations zero a component's contribution at
/// composition time instead of editing the weights.
struct IntrinsicWeights {
    double beta_novelty = 1.0;    // novelty bonus scale
    double beta_info = 1.0;       // info-location bonus scale
    double beta_align_pos = 1.0;  // in-order collection bonus
    double beta_align_neg = 1.0;  // out-of-order collection penalty
    double w_novelty = 0.3;
    double w_info = 0.4;
    double w_align = 0.3;

    void validate() const;
    bool operator==(const IntrinsicWeights&) const = default;
};

/// The two tabular critics plus the visit counters backing the intrinsic
/// bonuses. Tables are dense |S| x |A|, zero-initialized.
class CriticPair {
public:
    CriticPair(int n_states, int n_actions);

    int n_states() const { return n_states_; }
    int n_actions() const { return n_actions_; }

    double q_extrinsic(int s, int a) const { return q_e_[idx(s, a)]; }
    double q_intrinsic(int s, int a) const { return q_i_[idx(s, a)]; }
    void set_q_extrinsic(int s, int a, double v) { q_e_[idx(s, a)] = v; }
    void set_q_intrinsic(int s, int a, double v) { q_i_[idx(s, a)] = v; }

    const double* extrinsic_row(int s) const { return &q_e_[idx(s, 0)]; }
    const double* intrinsic_row(int s) const { return &q_i_[idx(s, 0)]; }

    double max_extrinsic(int s) const;
    double max_intrinsic(int s) const;

    /// Q^E(s,a) += alpha * (r + gamma * max_a' Q^E(s',a') - Q^E(s,a)).
    /// The bootstrap term is 0 on terminal transitions. Returns the updated
    /// entry.
    double extrinsic_update(int s, int a, double r, int s_next, bool terminal,
                            const LearningConfig& cfg);

    /// Same update rule applied to Q^I with the intrinsic reward.
    double intrinsic_update(int s, int a, double r_int, int s_next, bool terminal,
                            const LearningConfig& cfg);

    /// N(s,a) += 1. Counts persist across episodes and across priority
    /// shifts; resets touch Q-values only.
    void record_visit(int s, int a);

    /// N_info(s) += 1. Called for the arrival state whenever its cell hosts
    /// an item, collected or not.
    void record_info_visit(int s);

    std::int64_t visits(int s, int a) const { return visits_[idx(s, a)]; }
    std::int64_t info_visits(int s) const { return info_visits_[check_state(s)]; }

    /// Raw table access for resets and serialization.
    std::vector<double>& extrinsic_table() { return q_e_; }
    std::vector<double>& intrinsic_table() { return q_i_; }
    const std::vector<double>& extrinsic_table() const { return q_e_; }
    const std::vector<double>& intrinsic_table() const { return q_i_; }

    /// Binary snapshot (bit-exact round-trip).
    void save(std::ostream& out) const;
    static CriticPair load(std::istream& in);

    /// Flat text matrix, one state per row, one action per column.
    std::string extrinsic_csv() const;
    std::string intrinsic_csv() const;

    bool operator==(const CriticPair&) const = default;

private:
    int idx(int s, int a) const;
    int check_state(int s) const;

    int n_states_ = 0;
    int n_actions_ = 0;
    std::vector<double> q_e_;
    std::vector<double> q_i_;
    std::vector<std::int64_t> visits_;
    std::vector<std::int64_t> info_visits_;
};

/// beta_novelty / sqrt(N(s,a)). The visit must be recorded first; n_sa == 0
/// is a contract violation.
double novelty_reward(std::int64_t n_sa, const IntrinsicWeights& w);

/// beta_info / sqrt(N_info(s)) when the (post-action) cell hosts an item,
/// 0 otherwise.
double info_location_reward(std::int64_t n_info, bool is_info_cell,
                            const IntrinsicWeights& w);

/// +beta_align_pos on in-order collection, -beta_align_neg on a rejected
/// out-of-order attempt, 0 on every other event.
double alignment_reward(Event event, const IntrinsicWeights& w);

/// Weighted combination of the three components.
double intrinsic_reward(double novelty, double info, double align,
                        const IntrinsicWeights& w);

}  // namespace camiq
