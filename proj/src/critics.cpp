#include "camiq/critics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace camiq {

void LearningConfig::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::runtime_error("learning: 0 < alpha <= 1");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::runtime_error("learning: 0 <= gamma < 1");
}

void IntrinsicWeights::validate() const {
    if (beta_novelty < 0.0 || beta_info < 0.0 || beta_align_pos < 0.0 ||
        beta_align_neg < 0.0)
        throw std::runtime_error("intrinsic: beta coefficients must be non-negative");
    if (w_novelty < 0.0 || w_info < 0.0 || w_align < 0.0)
        throw std::runtime_error("intrinsic: mixture weights must be non-negative");
    if (std::abs(w_novelty + w_info + w_align - 1.0) > 1e-9)
        throw std::runtime_error("intrinsic: w_novelty + w_info + w_align = 1");
}

CriticPair::CriticPair(int n_states, int n_actions)
    : n_states_(n_states), n_actions_(n_actions) {
    if (n_states <= 0 || n_actions <= 0)
        throw std::invalid_argument("critics: table dimensions must be positive");
    const std::size_t n = static_cast<std::size_t>(n_states) * n_actions;
    q_e_.assign(n, 0.0);
    q_i_.assign(n, 0.0);
    visits_.assign(n, 0);
    info_visits_.assign(static_cast<std::size_t>(n_states), 0);
}

int CriticPair::check_state(int s) const {
    if (s < 0 || s >= n_states_)
        throw std::out_of_range("critics: state index " + std::to_string(s));
    return s;
}

int CriticPair::idx(int s, int a) const {
    check_state(s);
    if (a < 0 || a >= n_actions_)
        throw std::out_of_range("critics: action index " + std::to_string(a));
    return s * n_actions_ + a;
}

double CriticPair::max_extrinsic(int s) const {
    const double* row = extrinsic_row(s);
    return *std::max_element(row, row + n_actions_);
}

double CriticPair::max_intrinsic(int s) const {
    const double* row = intrinsic_row(s);
    return *std::max_element(row, row + n_actions_);
}

namespace {

double td_update(std::vector<double>& table, int i, int n_actions, double r,
                 const double* next_row, bool terminal, const LearningConfig& cfg) {
    const double bootstrap =
        terminal ? 0.0 : *std::max_element(next_row, next_row + n_actions);
    table[i] += cfg.alpha * (r + cfg.gamma * bootstrap - table[i]);
    return table[i];
}

}  // namespace

double CriticPair::extrinsic_update(int s, int a, double r, int s_next, bool terminal,
                                    const LearningConfig& cfg) {
    const int i = idx(s, a);
    check_state(s_next);
    return td_update(q_e_, i, n_actions_, r, extrinsic_row(s_next), terminal, cfg);
}

double CriticPair::intrinsic_update(int s, int a, double r_int, int s_next,
                                    bool terminal, const LearningConfig& cfg) {
    const int i = idx(s, a);
    check_state(s_next);
    return td_update(q_i_, i, n_actions_, r_int, intrinsic_row(s_next), terminal, cfg);
}

void CriticPair::record_visit(int s, int a) { ++visits_[idx(s, a)]; }

void CriticPair::record_info_visit(int s) { ++info_visits_[check_state(s)]; }

double novelty_reward(std::int64_t n_sa, const IntrinsicWeights& w) {
    if (n_sa < 1)
        throw std::logic_error("novelty_reward: visit must be recorded first (n >= 1)");
    return w.beta_novelty / std::sqrt(static_cast<double>(n_sa));
}

double info_location_reward(std::int64_t n_info, bool is_info_cell,
                            const IntrinsicWeights& w) {
    if (!is_info_cell) return 0.0;
    if (n_info < 1)
        throw std::logic_error("info_location_reward: visit must be recorded first");
    return w.beta_info / std::sqrt(static_cast<double>(n_info));
}

double alignment_reward(Event event, const IntrinsicWeights& w) {
    switch (event) {
        case Event::collected_in_order: return w.beta_align_pos;
        case Event::collected_out_of_order_rejected: return -w.beta_align_neg;
        default: return 0.0;
    }
}

double intrinsic_reward(double novelty, double info, double align,
                        const IntrinsicWeights& w) {
    return w.w_novelty * novelty + w.w_info * info + w.w_align * align;
}

namespace {

constexpr char kMagic[8] = {'c', 'a', 'm', 'i', 'q', 'q', 't', '1'};

template <typename T>
void write_raw(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_raw(std::istream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("critics: truncated snapshot");
}

template <typename T>
void write_vec(std::ostream& out, const std::vector<T>& v) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
void read_vec(std::istream& in, std::vector<T>& v) {
    in.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(T)));
    if (!in) throw std::runtime_error("critics: truncated snapshot");
}

std::string table_csv(const std::vector<double>& table, int n_states, int n_actions) {
    std::string out;
    char buf[64];
    for (int s = 0; s < n_states; ++s) {
        for (int a = 0; a < n_actions; ++a) {
            if (a > 0) out += ',';
            const double v = table[static_cast<std::size_t>(s) * n_actions + a];
            auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
            out.append(buf, p);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

void CriticPair::save(std::ostream& out) const {
    out.write(kMagic, sizeof(kMagic));
    write_raw(out, n_states_);
    write_raw(out, n_actions_);
    write_vec(out, q_e_);
    write_vec(out, q_i_);
    write_vec(out, visits_);
    write_vec(out, info_visits_);
    if (!out) throw std::runtime_error("critics: snapshot write failed");
}

CriticPair CriticPair::load(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(magic)) != 0)
        throw std::runtime_error("critics: not a critic snapshot");
    int n_states = 0;
    int n_actions = 0;
    read_raw(in, n_states);
    read_raw(in, n_actions);
    CriticPair critics(n_states, n_actions);
    read_vec(in, critics.q_e_);
    read_vec(in, critics.q_i_);
    read_vec(in, critics.visits_);
    read_vec(in, critics.info_visits_);
    return critics;
}

std::string CriticPair::extrinsic_csv() const {
    return table_csv(q_e_, n_states_, n_actions_);
}

std::string CriticPair::intrinsic_csv() const {
    return table_csv(q_i_, n_states_, n_actions_);
}

}  // namespace camiq
