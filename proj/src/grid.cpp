#include "camiq/grid.hpp"

#include <stdexcept>

namespace camiq {

std::string to_string(Action a) {
    switch (a) {
        case Action::up: return "up";
        case Action::down: return "down";
        case Action::left: return "left";
        case Action::right: return "right";
        case Action::collect: return "collect";
    }
    throw std::invalid_argument("unknown action id " +
                                std::to_string(static_cast<int>(a)));
}

Action action_from_string(const std::string& name) {
    if (name == "up") return Action::up;
    if (name == "down") return Action::down;
    if (name == "left") return Action::left;
    if (name == "right") return Action::right;
    if (name == "collect") return Action::collect;
    throw std::invalid_argument("unknown action '" + name + "'");
}

Cell action_delta(Action a) {
    switch (a) {
        case Action::up: return {0, -1};
        case Action::down: return {0, 1};
        case Action::left: return {-1, 0};
        case Action::right: return {1, 0};
        case Action::collect: return {0, 0};
    }
    throw std::invalid_argument("unknown action id " +
                                std::to_string(static_cast<int>(a)));
}

}  // namespace camiq
