#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "camiq/layout.hpp"
#include "camiq/rng.hpp"
#include "test_helpers.hpp"

using namespace camiq;
using camiq::testing::make_layout;

TEST_CASE("bundled pool has five 4x4 layouts with items X, Y, Z") {
    const auto& pool = default_layout_pool();
    REQUIRE(pool.size() == 5);
    for (const auto& layout : pool) {
        CHECK(layout.width == 4);
        CHECK(layout.height == 4);
        CHECK(layout.item_ids() == std::vector<char>{'X', 'Y', 'Z'});
        CHECK_NOTHROW(layout.validate());
    }
    // Distinct ids, in document order.
    CHECK(pool[0].id == "alpha");
    CHECK(pool[4].id == "epsilon");
}

TEST_CASE("empty pool document is an error") {
    CHECK_THROWS_WITH_AS(parse_layout_pool(""), doctest::Contains("empty pool"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_layout_pool("# only a comment\n"),
                         doctest::Contains("empty pool"), std::runtime_error);
}

TEST_CASE("item on a ditch cell is rejected naming the constraint") {
    // X sits on the same cell as a ditch: inexpressible in one grid, so build
    // the layout by hand.
    Layout layout = make_layout("bad", "A..X\n....\n....\n..T.\n");
    layout.ditches.push_back(layout.item_cells.at('X'));
    std::sort(layout.ditches.begin(), layout.ditches.end(),
              [](Cell a, Cell b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); });
    CHECK_THROWS_WITH_AS(layout.validate(), doctest::Contains("ditch"),
                         std::runtime_error);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_layout_pool("grid foo\nA..T\n"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_layout_pool("layout ragged\nA..T\n..\n"),
                         doctest::Contains("ragged"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_layout_pool("layout nostart\n...T\n....\n"),
                         doctest::Contains("start"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_layout_pool("layout twostarts\nA..T\nA...\n"),
                         doctest::Contains("duplicate start"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_layout_pool("layout glyph\nA?.T\n....\n"),
                         doctest::Contains("unknown glyph"), std::runtime_error);
}

TEST_CASE("canonical document round-trips bit-exactly") {
    const std::string& doc = default_layout_pool_text();
    CHECK(serialize_layout_pool(parse_layout_pool(doc)) == doc);
}

TEST_CASE("value round-trip on randomly generated layouts") {
    Rng rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const int w = 2 + rng.bounded(5);
        const int h = 2 + rng.bounded(5);
        // Deal distinct cells: start, target, up to 3 items, a few ditches.
        std::vector<int> cells(static_cast<std::size_t>(w * h));
        for (int i = 0; i < w * h; ++i) cells[static_cast<std::size_t>(i)] = i;
        for (int i = w * h - 1; i > 0; --i)
            std::swap(cells[static_cast<std::size_t>(i)],
                      cells[static_cast<std::size_t>(rng.bounded(i + 1))]);

        Layout layout;
        layout.id = "gen" + std::to_string(trial);
        layout.width = w;
        layout.height = h;
        std::size_t next = 0;
        auto take = [&]() {
            const int c = cells[next++];
            return Cell{c % w, c / w};
        };
        layout.start = take();
        layout.target = take();
        const int n_items = 1 + rng.bounded(3);
        for (int i = 0; i < n_items && next < cells.size(); ++i)
            layout.item_cells[static_cast<char>('X' + i)] = take();
        const int n_ditch = rng.bounded(3);
        for (int i = 0; i < n_ditch && next < cells.size(); ++i)
            layout.ditches.push_back(take());
        std::sort(layout.ditches.begin(), layout.ditches.end(), [](Cell a, Cell b) {
            return std::pair(a.y, a.x) < std::pair(b.y, b.x);
        });
        layout.validate();

        const auto parsed = parse_layout_pool(serialize_layout(layout));
        REQUIRE(parsed.size() == 1);
        const Layout& back = parsed[0];
        CHECK(back.id == layout.id);
        CHECK(back.start == layout.start);
        CHECK(back.target == layout.target);
        CHECK(back.ditches == layout.ditches);
        CHECK(back.item_cells == layout.item_cells);
    }
}
