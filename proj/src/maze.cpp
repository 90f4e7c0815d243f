#include "viscval/maze.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace viscval {

GridMaze GridMaze::from_text(const std::string& text) {
    std::vector<std::string> rows;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(line);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    if (rows.empty()) throw std::invalid_argument("maze: empty input");

    GridMaze m;
    m.height_ = static_cast<int>(rows.size());
    m.width_ = static_cast<int>(rows[0].size());
    if (m.width_ == 0) throw std::invalid_argument("maze: empty first row");
    m.wall_.assign(static_cast<std::size_t>(m.width_) * m.height_, 0);

    for (int y = 0; y < m.height_; ++y) {
        if (static_cast<int>(rows[y].size()) != m.width_)
            throw std::invalid_argument("maze: non-rectangular input at row " +
                                        std::to_string(y));
        for (int x = 0; x < m.width_; ++x) {
            char c = rows[y][x];
            int idx = m.cell_index(x, y);
            switch (c) {
                case '#': m.wall_[idx] = 1; break;
                case '.': break;
                case 'S': m.start_cells_.push_back(idx); break;
                case 'G': m.goal_cells_.push_back(idx); break;
                default:
                    throw std::invalid_argument(
                        std::string("maze: unknown character '") + c + "'");
            }
        }
    }

    for (int x = 0; x < m.width_; ++x) {
        if (!m.wall_[m.cell_index(x, 0)] ||
            !m.wall_[m.cell_index(x, m.height_ - 1)])
            throw std::invalid_argument("maze: border must be wall");
    }
    for (int y = 0; y < m.height_; ++y) {
        if (!m.wall_[m.cell_index(0, y)] ||
            !m.wall_[m.cell_index(m.width_ - 1, y)])
            throw std::invalid_argument("maze: border must be wall");
    }

    for (int c = 0; c < m.n_cells(); ++c)
        if (!m.wall_[c]) m.free_cells_.push_back(c);
    if (m.free_cells_.empty())
        throw std::invalid_argument("maze: no free cell");

    // 4-connected flood fill from the first free cell.
    std::vector<std::uint8_t> seen(m.wall_.size(), 0);
    std::deque<int> queue{m.free_cells_[0]};
    seen[m.free_cells_[0]] = 1;
    int reached = 0;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        ++reached;
        int x = m.cell_x(c), y = m.cell_y(c);
        const int dx[4] = {1, -1, 0, 0};
        const int dy[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int nx = x + dx[k], ny = y + dy[k];
            if (!m.is_free(nx, ny)) continue;
            int nidx = m.cell_index(nx, ny);
            if (!seen[nidx]) {
                seen[nidx] = 1;
                queue.push_back(nidx);
            }
        }
    }
    if (reached != static_cast<int>(m.free_cells_.size()))
        throw std::invalid_argument("maze: free region is not 4-connected");

    return m;
}

int GridMaze::cell_at(Vec2 p) const {
    int x = static_cast<int>(std::floor(p.x));
    int y = static_cast<int>(std::floor(p.y));
    if (!in_bounds(x, y)) return -1;
    return cell_index(x, y);
}

State make_state(const GridMaze& maze, int cell) {
    if (cell < 0 || cell >= maze.n_cells() || !maze.is_free(cell))
        throw std::invalid_argument("make_state: not a free cell");
    return State{cell, maze.cell_center(cell)};
}

State step(const GridMaze& maze, const State& s, int action) {
    if (action < 0 || action >= kNumActions)
        throw std::invalid_argument("step: action index out of range");
    int x = maze.cell_x(s.cell), y = maze.cell_y(s.cell);
    int nx = x + kActionDx[action], ny = y + kActionDy[action];
    if (!maze.is_free(nx, ny)) return s;
    if (is_diagonal(action)) {
        // No corner cutting: both adjacent cardinals must be free.
        if (!maze.is_free(x + kActionDx[action], y)) return s;
        if (!maze.is_free(x, y + kActionDy[action])) return s;
    }
    return make_state(maze, maze.cell_index(nx, ny));
}

double boundary_distance(const GridMaze& maze, Vec2 pos, Vec2 dir) {
    double len = norm(dir);
    if (len == 0.0) throw std::invalid_argument("boundary_distance: zero direction");
    if (std::abs(len - 1.0) > 1e-9)
        throw std::invalid_argument("boundary_distance: direction not unit length");
    int cell = maze.cell_at(pos);
    if (cell < 0 || !maze.is_free(cell))
        throw std::invalid_argument("boundary_distance: position not in free space");

    // Amanatides-Woo traversal. Walls enclose the arena, so the loop always
    // terminates at a wall face.
    int cx = maze.cell_x(cell), cy = maze.cell_y(cell);
    const double inf = std::numeric_limits<double>::infinity();
    int step_x = dir.x > 0 ? 1 : (dir.x < 0 ? -1 : 0);
    int step_y = dir.y > 0 ? 1 : (dir.y < 0 ? -1 : 0);
    double t_max_x = inf, t_max_y = inf, t_delta_x = inf, t_delta_y = inf;
    if (step_x != 0) {
        double face = step_x > 0 ? cx + 1.0 : cx;
        t_max_x = (face - pos.x) / dir.x;
        t_delta_x = 1.0 / std::abs(dir.x);
    }
    if (step_y != 0) {
        double face = step_y > 0 ? cy + 1.0 : cy;
        t_max_y = (face - pos.y) / dir.y;
        t_delta_y = 1.0 / std::abs(dir.y);
    }

    while (true) {
        bool adv_x = t_max_x <= t_max_y;
        bool adv_y = t_max_y <= t_max_x;
        double t = adv_x ? t_max_x : t_max_y;
        if (adv_x && adv_y) {
            // Exact corner crossing: blocked if either flanking cell or the
            // diagonal is a wall (rays do not tunnel through corners).
            if (!maze.is_free(cx + step_x, cy) || !maze.is_free(cx, cy + step_y) ||
                !maze.is_free(cx + step_x, cy + step_y))
                return t;
            cx += step_x;
            cy += step_y;
            t_max_x += t_delta_x;
            t_max_y += t_delta_y;
        } else if (adv_x) {
            if (!maze.is_free(cx + step_x, cy)) return t;
            cx += step_x;
            t_max_x += t_delta_x;
        } else {
            if (!maze.is_free(cx, cy + step_y)) return t;
            cy += step_y;
            t_max_y += t_delta_y;
        }
    }
}

std::vector<int> bfs_distance(const GridMaze& maze, int g_cell) {
    if (g_cell < 0 || g_cell >= maze.n_cells() || !maze.is_free(g_cell))
        throw std::invalid_argument("bfs_distance: goal not a free cell");
    std::vector<int> dist(maze.n_cells(), kUnreachable);
    std::deque<int> queue{g_cell};
    dist[g_cell] = 0;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        State s = make_state(maze, c);
        for (int a = 1; a < kNumActions; ++a) {
            int nc = step(maze, s, a).cell;
            if (nc != c && dist[nc] == kUnreachable) {
                dist[nc] = dist[c] + 1;
                queue.push_back(nc);
            }
        }
    }
    return dist;
}

}  // namespace viscval
