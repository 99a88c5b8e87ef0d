// Standalone property suite; every check here also runs inside the
// acceptance gate.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_checks.hpp"

TEST_CASE("argmax tie-break is deterministic") {
    CHECK_NOTHROW(camiq::properties::check_argmax_determinism());
}

TEST_CASE("epsilon schedule is monotone and the boost envelope holds") {
    CHECK_NOTHROW(camiq::properties::check_epsilon_schedule());
}

TEST_CASE("mission success implies collection success") {
    CHECK_NOTHROW(camiq::properties::check_mission_implies_collection());
}

TEST_CASE("detector has zero false positives on constant histories") {
    CHECK_NOTHROW(camiq::properties::check_detector_no_false_positive());
}

TEST_CASE("rewards decompose by event over all event types") {
    CHECK_NOTHROW(camiq::properties::check_reward_decomposition());
}

TEST_CASE("state indexing is bijective by exhaustive enumeration") {
    CHECK_NOTHROW(camiq::properties::check_state_index_bijection());
}
