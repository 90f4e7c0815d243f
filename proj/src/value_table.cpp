#include "viscval/value_table.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace viscval {

void ValueTable::soft_update_from(const ValueTable& source, double rate) {
    if (source.values_.size() != values_.size())
        throw std::invalid_argument("soft_update_from: shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] = (1.0 - rate) * values_[i] + rate * source.values_[i];
}

void ValueTable::save_json(const std::string& path) const {
    nlohmann::json j = {
        {"width", width_},
        {"height", height_},
        {"n_free", n_free_},
        {"values", values_},
    };
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_json: cannot open " + path);
    out << j.dump() << "\n";
}

ValueTable ValueTable::load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_json: cannot open " + path);
    nlohmann::json j;
    in >> j;
    ValueTable t;
    t.width_ = j.at("width").get<int>();
    t.height_ = j.at("height").get<int>();
    t.n_free_ = j.at("n_free").get<int>();
    t.n_cells_ = t.width_ * t.height_;
    t.values_ = j.at("values").get<std::vector<double>>();
    if (t.values_.size() !=
        static_cast<std::size_t>(t.n_cells_) * static_cast<std::size_t>(t.n_cells_))
        throw std::runtime_error("load_json: value array does not match header shape");
    return t;
}

double value(const ValueTable& table, const GridMaze& maze, int s, int g) {
    if (s < 0 || s >= maze.n_cells() || !maze.is_free(s))
        throw std::invalid_argument("value: s is not a free cell");
    if (g < 0 || g >= maze.n_cells() || !maze.is_free(g))
        throw std::invalid_argument("value: g is not a free cell");
    return table.value(s, g);
}

Vec2 value_gradient(const ValueTable& table, const GridMaze& maze, int s, int g) {
    int x = maze.cell_x(s), y = maze.cell_y(s);
    auto axis = [&](int dx, int dy) -> double {
        bool plus = maze.is_free(x + dx, y + dy);
        bool minus = maze.is_free(x - dx, y - dy);
        double v0 = table.value(s, g);
        if (plus && minus) {
            double vp = table.value(maze.cell_index(x + dx, y + dy), g);
            double vm = table.value(maze.cell_index(x - dx, y - dy), g);
            return 0.5 * (vp - vm);
        }
        if (plus) return table.value(maze.cell_index(x + dx, y + dy), g) - v0;
        if (minus) return v0 - table.value(maze.cell_index(x - dx, y - dy), g);
        return 0.0;
    };
    bool any_x = maze.is_free(x + 1, y) || maze.is_free(x - 1, y);
    bool any_y = maze.is_free(x, y + 1) || maze.is_free(x, y - 1);
    if (!any_x && !any_y)
        throw std::invalid_argument("value_gradient: cell has no free axis neighbor");
    return {axis(1, 0), axis(0, 1)};
}

}  // namespace viscval
