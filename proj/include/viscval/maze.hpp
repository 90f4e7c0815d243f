#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace viscval {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }

/** Occupancy-grid maze.
 *
 * Cells are unit squares: cell (x, y) spans [x, x+1) x [y, y+1) with center
 * at (x + 0.5, y + 0.5). Row 0 is the first line of the ASCII source; y
 * grows downward in text order, which is irrelevant to the dynamics. The
 * outer border is always wall, so the arena is closed and every ray from a
 * free cell hits a wall face at finite distance.
 */
class GridMaze {
public:
    /** Parse an ASCII maze. '#' wall, '.' free, 'S' free+start, 'G' free+goal.
     * Rejects ragged lines, unknown characters, open borders, mazes with no
     * free cell, and free regions that are not 4-connected. */
    static GridMaze from_text(const std::string& text);

    int width() const { return width_; }
    int height() const { return height_; }
    int n_cells() const { return width_ * height_; }

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    bool is_free(int x, int y) const {
        return in_bounds(x, y) && !wall_[cell_index(x, y)];
    }
    bool is_free(int cell) const { return !wall_[cell]; }

    int cell_index(int x, int y) const { return y * width_ + x; }
    int cell_x(int cell) const { return cell % width_; }
    int cell_y(int cell) const { return cell / width_; }

    Vec2 cell_center(int cell) const {
        return {cell_x(cell) + 0.5, cell_y(cell) + 0.5};
    }

    /** Cell containing a continuous point; -1 if outside the grid. */
    int cell_at(Vec2 p) const;

    const std::vector<int>& start_cells() const { return start_cells_; }
    const std::vector<int>& goal_cells() const { return goal_cells_; }
    const std::vector<int>& free_cells() const { return free_cells_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> wall_;
    std::vector<int> start_cells_;
    std::vector<int> goal_cells_;
    std::vector<int> free_cells_;
};

struct State {
    int cell = -1;
    Vec2 pos;
};

State make_state(const GridMaze& maze, int cell);

/** 9 discrete actions: index 0 is stay, 1..8 walk the compass
 * counterclockwise from +x (E, NE, N, NW, W, SW, S, SE). */
inline constexpr int kNumActions = 9;
inline constexpr int kActionDx[kNumActions] = {0, 1, 1, 0, -1, -1, -1, 0, 1};
inline constexpr int kActionDy[kNumActions] = {0, 0, 1, 1, 1, 0, -1, -1, -1};

inline bool is_diagonal(int action) {
    return kActionDx[action] != 0 && kActionDy[action] != 0;
}

/** Deterministic step. Wall hits (including diagonal corner cuts) leave the
 * state unchanged; they are absorbing, not errors. */
State step(const GridMaze& maze, const State& s, int action);

/** Sparse goal-conditioned reward: 0 on arrival, -1 otherwise. */
inline double reward(const State& s_next, const State& g) {
    return s_next.cell == g.cell ? 0.0 : -1.0;
}

/** Exact distance from `pos` along unit direction `dir` to the first wall
 * face, by grid ray traversal. Requires |dir| = 1 within 1e-9 and a free
 * starting cell. */
double boundary_distance(const GridMaze& maze, Vec2 pos, Vec2 dir);

inline double boundary_distance(const GridMaze& maze, const State& s, Vec2 dir) {
    return boundary_distance(maze, s.pos, dir);
}

inline constexpr int kUnreachable = -1;

/** 8-connected shortest hop counts to `g_cell`, honoring the same corner-cut
 * blocking as step(). Unreachable cells (and walls) get kUnreachable. */
std::vector<int> bfs_distance(const GridMaze& maze, int g_cell);

}  // namespace viscval
