#include "camiq/info_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace camiq {

int Ordering::rank_of(char item) const {
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        if (sequence[i] == item) return static_cast<int>(i) + 1;
    }
    throw std::invalid_argument(std::string("ordering has no item '") + item + "'");
}

char Ordering::item_at_rank(int rank) const {
    if (rank < 1 || rank > size())
        throw std::out_of_range("ordering rank " + std::to_string(rank));
    return sequence[rank - 1];
}

Ordering parse_ordering(const std::string& text) {
    Ordering o;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '>' || c == '-' || c == ' ') continue;
        o.sequence.push_back(c);
    }
    if (o.sequence.empty())
        throw std::invalid_argument("empty ordering '" + text + "'");
    return o;
}

std::string to_string(const Ordering& o) {
    std::string out;
    for (std::size_t i = 0; i < o.sequence.size(); ++i) {
        if (i > 0) out += '>';
        out += o.sequence[i];
    }
    return out;
}

int InformationSpace::item_index(char item) const {
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i] == item) return static_cast<int>(i);
    }
    throw std::invalid_argument(std::string("unknown item '") + item + "'");
}

namespace {

bool is_permutation_of(const Ordering& o, const std::vector<char>& items) {
    if (o.sequence.size() != items.size()) return false;
    auto sorted = o.sequence;
    std::sort(sorted.begin(), sorted.end());
    auto expected = items;
    std::sort(expected.begin(), expected.end());
    return sorted == expected;
}

std::vector<Ordering> all_orderings(std::vector<char> items) {
    std::sort(items.begin(), items.end());
    std::vector<Ordering> out;
    do {
        out.emplace_back(items);
    } while (std::next_permutation(items.begin(), items.end()));
    return out;
}

}  // namespace

InformationSpace InformationSpace::with_default_priorities(std::vector<char> items_in,
                                                           const Ordering& ordering_in) {
    InformationSpace info;
    info.items = std::move(items_in);
    info.ordering = ordering_in;
    info.contexts = all_orderings(info.items);
    const int n = info.item_count();
    for (char item : info.items)
        info.priorities[item] = static_cast<double>(n - ordering_in.rank_of(item) + 1);
    info.validate();
    return info;
}

void InformationSpace::validate() const {
    if (items.empty()) throw std::runtime_error("information space: no items");
    if (!is_permutation_of(ordering, items))
        throw std::runtime_error("information space: ordering is not a permutation of the items");
    for (char item : items) {
        if (!priorities.count(item))
            throw std::runtime_error(std::string("information space: item '") + item +
                                     "' has no priority value");
        if (priorities.at(item) <= 0.0)
            throw std::runtime_error(std::string("information space: priority of '") + item +
                                     "' must be positive");
    }
    // Rank 1 holds the largest priority value, and so on down.
    for (int r = 1; r < item_count(); ++r) {
        if (priorities.at(ordering.item_at_rank(r)) <=
            priorities.at(ordering.item_at_rank(r + 1)))
            throw std::runtime_error(
                "information space: ordering not induced by descending priorities");
    }
    if (std::find(contexts.begin(), contexts.end(), ordering) == contexts.end())
        throw std::runtime_error("information space: active ordering outside the context set");
}

InformationSpace swap_priorities(const InformationSpace& info,
                                 const Ordering& new_ordering, int episode) {
    if (!is_permutation_of(new_ordering, info.items))
        throw std::invalid_argument("swap_priorities: '" + to_string(new_ordering) +
                                    "' is not a permutation of the items");
    if (std::find(info.contexts.begin(), info.contexts.end(), new_ordering) ==
        info.contexts.end())
        throw std::invalid_argument("swap_priorities: ordering '" + to_string(new_ordering) +
                                    "' outside the context set");

    InformationSpace next = info;
    next.ordering = new_ordering;

    // Keep the multiset of priority values; the r-th largest value moves to
    // the item now holding rank r.
    std::vector<double> values;
    values.reserve(info.priorities.size());
    for (const auto& [item, p] : info.priorities) values.push_back(p);
    std::sort(values.begin(), values.end(), std::greater<>());
    for (int r = 1; r <= next.item_count(); ++r)
        next.priorities[new_ordering.item_at_rank(r)] = values[r - 1];

    next.shift_history.push_back({episode, info.ordering, new_ordering});
    next.validate();
    return next;
}

}  // namespace camiq
