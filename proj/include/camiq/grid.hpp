#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace camiq {

/// Grid coordinate. x is the column, y is the row; (0,0) is the top-left cell.
struct Cell {
    int x = 0;
    int y = 0;

    auto operator<=>(const Cell&) const = default;
};

enum class Action : int {
    up = 0,
    down = 1,
    left = 2,
    right = 3,
    collect = 4,
};

inline constexpr int kNumActions = 5;

/// Index of the single collection action within the action set.
inline constexpr int kCollectAction = static_cast<int>(Action::collect);

std::string to_string(Action a);
Action action_from_string(const std::string& name);

/// Displacement of a movement action; collect maps to (0,0).
Cell action_delta(Action a);

}  // namespace camiq
