#pragma once

#include <map>
#include <string>
#include <vector>

#include "camiq/grid.hpp"

namespace camiq {

/// Collection ordering: a permutation of the item ids, highest priority
/// first. rank_of() is 1-based, rank 1 being the item to collect first.
struct Ordering {
    std::vector<char> sequence;

    Ordering() = default;
    explicit Ordering(std::vector<char> seq) : sequence(std::move(seq)) {}

    int size() const { return static_cast<int>(sequence.size()); }
    int rank_of(char item) const;
    char item_at_rank(int rank) const;
    bool operator==(const Ordering&) const = default;
};

/// "X>Y>Z" (also accepts "X->Y->Z" and bare "XYZ").
Ordering parse_ordering(const std::string& text);
std::string to_string(const Ordering& o);

struct PriorityShiftEvent {
    int episode = 0;
    Ordering old_ordering;
    Ordering new_ordering;
};

/// Item set, per-item priority values, the active collection ordering and the
/// finite context set of feasible orderings. The ordering is always the one
/// induced by descending priority values.
struct InformationSpace {
    std::vector<char> items;
    std::map<char, double> priorities;
    Ordering ordering;
    std::vector<Ordering> contexts;
    std::vector<PriorityShiftEvent> shift_history;

    int item_count() const { return static_cast<int>(items.size()); }
    int item_index(char item) const;

    /// Builds a space over `items` with priorities n - rank + 1 under the
    /// given ordering and contexts = all permutations of the item set.
    static InformationSpace with_default_priorities(std::vector<char> items_in,
                                                    const Ordering& ordering_in);

    void validate() const;
};

/// Replaces the active ordering, remaps priority values so the largest value
/// keeps rank 1, and records the shift event with its episode index.
/// Throws if new_ordering is not a permutation of the items or is outside
/// the context set.
InformationSpace swap_priorities(const InformationSpace& info,
                                 const Ordering& new_ordering, int episode);

}  // namespace camiq
