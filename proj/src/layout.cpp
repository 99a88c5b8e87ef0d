#include "camiq/layout.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace camiq {

namespace {

[[noreturn]] void fail(const std::string& layout_id, const std::string& what) {
    throw std::runtime_error("layout '" + layout_id + "': " + what);
}

bool is_item_glyph(char g) {
    return g != 'A' && g != 'T' && g != 'D' && g != '.' &&
           (std::isalnum(static_cast<unsigned char>(g)) != 0);
}

}  // namespace

bool Layout::is_ditch(Cell c) const {
    return std::binary_search(ditches.begin(), ditches.end(), c,
                              [](Cell a, Cell b) {
                                  return std::pair(a.y, a.x) < std::pair(b.y, b.x);
                              });
}

bool Layout::is_item_cell(Cell c) const { return item_at(c).has_value(); }

std::optional<char> Layout::item_at(Cell c) const {
    for (const auto& [id, cell] : item_cells) {
        if (cell == c) return id;
    }
    return std::nullopt;
}

std::vector<char> Layout::item_ids() const {
    std::vector<char> ids;
    ids.reserve(item_cells.size());
    for (const auto& [id, cell] : item_cells) ids.push_back(id);
    return ids;
}

void Layout::validate() const {
    if (width < 2 || height < 2) fail(id, "grid must be at least 2x2");
    if (!in_bounds(start)) fail(id, "start out of bounds");
    if (!in_bounds(target)) fail(id, "target out of bounds");
    for (Cell d : ditches) {
        if (!in_bounds(d)) fail(id, "ditch out of bounds");
    }
    if (is_ditch(start)) fail(id, "start placed on a ditch cell");
    if (is_ditch(target)) fail(id, "target placed on a ditch cell");
    std::vector<Cell> seen;
    for (const auto& [item, cell] : item_cells) {
        if (!in_bounds(cell)) fail(id, std::string("item ") + item + " out of bounds");
        if (is_ditch(cell))
            fail(id, std::string("item ") + item + " placed on a ditch cell");
        if (std::find(seen.begin(), seen.end(), cell) != seen.end())
            fail(id, std::string("item ") + item + " shares a cell with another item");
        seen.push_back(cell);
    }
}

std::string serialize_layout(const Layout& layout) {
    std::vector<std::string> rows(layout.height, std::string(layout.width, '.'));
    auto put = [&](Cell c, char g, const char* what) {
        char& slot = rows[c.y][c.x];
        if (slot != '.')
            fail(layout.id, std::string(what) + " overlaps glyph '" + slot +
                                "'; grid documents need distinct cells");
        slot = g;
    };
    put(layout.start, 'A', "start");
    put(layout.target, 'T', "target");
    for (Cell d : layout.ditches) put(d, 'D', "ditch");
    for (const auto& [item, cell] : layout.item_cells) put(cell, item, "item");

    std::ostringstream out;
    out << "layout " << layout.id << "\n";
    for (const auto& row : rows) out << row << "\n";
    return out.str();
}

std::string serialize_layout_pool(const std::vector<Layout>& pool) {
    std::string out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i > 0) out += "\n";
        out += serialize_layout(pool[i]);
    }
    return out;
}

std::vector<Layout> parse_layout_pool(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    }

    std::vector<Layout> pool;
    std::size_t i = 0;
    while (i < lines.size()) {
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') {
            ++i;
            continue;
        }
        if (line.rfind("layout ", 0) != 0)
            throw std::runtime_error("layout pool: expected 'layout <id>' at line " +
                                     std::to_string(i + 1) + ", got '" + line + "'");
        Layout layout;
        layout.id = line.substr(7);
        if (layout.id.empty())
            throw std::runtime_error("layout pool: missing layout id at line " +
                                     std::to_string(i + 1));
        ++i;

        std::vector<std::string> rows;
        while (i < lines.size() && !lines[i].empty() && lines[i][0] != '#' &&
               lines[i].rfind("layout ", 0) != 0) {
            rows.push_back(lines[i]);
            ++i;
        }
        if (rows.empty()) fail(layout.id, "no grid rows");

        layout.height = static_cast<int>(rows.size());
        layout.width = static_cast<int>(rows[0].size());
        bool saw_start = false;
        bool saw_target = false;
        for (int y = 0; y < layout.height; ++y) {
            if (static_cast<int>(rows[y].size()) != layout.width)
                fail(layout.id, "ragged grid row " + std::to_string(y + 1));
            for (int x = 0; x < layout.width; ++x) {
                const char g = rows[y][x];
                const Cell c{x, y};
                if (g == '.') continue;
                if (g == 'A') {
                    if (saw_start) fail(layout.id, "duplicate start glyph");
                    layout.start = c;
                    saw_start = true;
                } else if (g == 'T') {
                    if (saw_target) fail(layout.id, "duplicate target glyph");
                    layout.target = c;
                    saw_target = true;
                } else if (g == 'D') {
                    layout.ditches.push_back(c);
                } else if (is_item_glyph(g)) {
                    if (layout.item_cells.count(g))
                        fail(layout.id, std::string("duplicate item glyph '") + g + "'");
                    layout.item_cells[g] = c;
                } else {
                    fail(layout.id, std::string("unknown glyph '") + g + "'");
                }
            }
        }
        if (!saw_start) fail(layout.id, "missing start glyph 'A'");
        if (!saw_target) fail(layout.id, "missing target glyph 'T'");
        layout.validate();
        pool.push_back(std::move(layout));
    }

    if (pool.empty()) throw std::runtime_error("layout pool: empty pool");
    return pool;
}

namespace {

const char* kDefaultPoolText =
    "layout alpha\n"
    "A..X\n"
    ".D..\n"
    "Y..Z\n"
    "..T.\n"
    "\n"
    "layout beta\n"
    "..DT\n"
    "X...\n"
    ".D.Y\n"
    "A.Z.\n"
    "\n"
    "layout gamma\n"
    "T..A\n"
    "..D.\n"
    "X...\n"
    "Z.DY\n"
    "\n"
    "layout delta\n"
    ".X..\n"
    ".DT.\n"
    "Z...\n"
    "..YA\n"
    "\n"
    "layout epsilon\n"
    "..Y.\n"
    "AD..\n"
    "..DZ\n"
    "XT..\n";

}  // namespace

const std::string& default_layout_pool_text() {
    static const std::string text = kDefaultPoolText;
    return text;
}

const std::vector<Layout>& default_layout_pool() {
    static const std::vector<Layout> pool = parse_layout_pool(default_layout_pool_text());
    return pool;
}

}  // namespace camiq
