#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "viscval/maze.hpp"

namespace viscval {

/** Dense tabular goal-conditioned value function V(s, g).
 *
 * Indexed by raw cell indices (state-major); wall rows/columns exist but are
 * never read or written. Entries start at 0 and, once training clamps them,
 * stay inside the sparse-reward range [-1/(1-gamma), 0].
 */
class ValueTable {
public:
    ValueTable() = default;
    explicit ValueTable(const GridMaze& maze)
        : n_cells_(maze.n_cells()),
          n_free_(static_cast<int>(maze.free_cells().size())),
          width_(maze.width()),
          height_(maze.height()),
          values_(static_cast<std::size_t>(n_cells_) * n_cells_, 0.0) {}

    double value(int s, int g) const { return values_[index(s, g)]; }
    void set(int s, int g, double v) { values_[index(s, g)] = v; }
    double& at(int s, int g) { return values_[index(s, g)]; }

    int n_cells() const { return n_cells_; }
    int n_free() const { return n_free_; }
    int width() const { return width_; }
    int height() const { return height_; }

    const std::vector<double>& raw() const { return values_; }
    std::vector<double>& raw() { return values_; }

    /** theta_bar <- (1 - rate) * theta_bar + rate * theta, elementwise. */
    void soft_update_from(const ValueTable& source, double rate);

    void save_json(const std::string& path) const;
    static ValueTable load_json(const std::string& path);

private:
    std::size_t index(int s, int g) const {
        return static_cast<std::size_t>(s) * n_cells_ + g;
    }

    int n_cells_ = 0;
    int n_free_ = 0;
    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

/** Guarded table read: rejects wall cells. */
double value(const ValueTable& table, const GridMaze& maze, int s, int g);

/** Asymmetric squared loss |kappa - 1[u<0]| * u^2 on the TD residual. */
inline double expectile_loss(double u, double kappa) {
    double w = u < 0.0 ? 1.0 - kappa : kappa;
    return w * u * u;
}

/** One-step bootstrapped target; bootstrapping is cut at the goal. */
inline double td_target(double r, double gamma, bool terminal, double v_next_target) {
    return terminal ? r : r + gamma * v_next_target;
}

/** Central-difference value gradient at s (one-sided against walls), spacing
 * = cell size. Throws if s has no free axis neighbor at all. */
Vec2 value_gradient(const ValueTable& table, const GridMaze& maze, int s, int g);

}  // namespace viscval
