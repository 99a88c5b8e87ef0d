#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "camiq/grid.hpp"

namespace camiq {

/// Static map of one gridworld instance: start, target, ditches and the cell
/// hosting each information item. Items are identified by single glyphs
/// (the bundled pool uses X, Y, Z).
struct Layout {
    int width = 0;
    int height = 0;
    Cell start{};
    Cell target{};
    std::vector<Cell> ditches;          // kept sorted row-major
    std::map<char, Cell> item_cells;    // item id -> cell
    std::string id;

    int cell_count() const { return width * height; }
    int cell_index(Cell c) const { return c.y * width + c.x; }
    bool in_bounds(Cell c) const {
        return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
    }
    bool is_ditch(Cell c) const;
    bool is_item_cell(Cell c) const;
    std::optional<char> item_at(Cell c) const;
    std::vector<char> item_ids() const;

    /// Throws std::runtime_error naming the layout id and the violated
    /// constraint. Grids must be at least 2x2 with a start and a target.
    void validate() const;
};

/// Parses a layout pool document. The format is one block per layout:
///
///   layout <id>
///   <height rows of width glyphs>
///
/// with blocks separated by a single blank line. Glyphs: A = agent start,
/// T = target, D = ditch, '.' = free cell, any other letter = an item.
/// Lines starting with '#' are skipped on parse. Throws on malformed input,
/// on invariant violations and on an empty pool.
std::vector<Layout> parse_layout_pool(const std::string& text);

/// Canonical serialization; parse(serialize(pool)) == pool and
/// serialize(parse(doc)) == doc for canonical documents.
std::string serialize_layout_pool(const std::vector<Layout>& pool);

std::string serialize_layout(const Layout& layout);

/// The bundled pool: five 4x4 layouts, each with items X, Y, Z.
const std::vector<Layout>& default_layout_pool();

/// The bundled pool in document form (canonical text).
const std::string& default_layout_pool_text();

}  // namespace camiq
