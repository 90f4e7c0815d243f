#include "viscval/phys_reg.hpp"

#include <cmath>
#include <stdexcept>

namespace viscval {

void FKConfig::validate() const {
    if (!(nu > 0.0)) throw std::invalid_argument("FKConfig: nu must be > 0");
    if (k < 1) throw std::invalid_argument("FKConfig: k must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("FKConfig: dt must be > 0");
    if (q_cells.empty()) {
        if (!(q > 0.0)) throw std::invalid_argument("FKConfig: q must be > 0");
    } else {
        for (double v : q_cells)
            if (!(v > 0.0))
                throw std::invalid_argument("FKConfig: q_cells must be > 0");
    }
}

void EikConfig::validate() const {
    if (!(speed > 0.0)) throw std::invalid_argument("EikConfig: speed must be > 0");
}

std::vector<int> sample_neighbors(const GridMaze& maze, const State& s,
                                  const FKConfig& cfg, Rng& rng) {
    std::vector<int> out;
    out.reserve(cfg.k);
    for (int i = 0; i < cfg.k; ++i) {
        double ex = rng.gaussian();
        double ey = rng.gaussian();
        double len = std::sqrt(ex * ex + ey * ey);
        while (len == 0.0) {  // measure-zero, but keep the direction defined
            ex = rng.gaussian();
            ey = rng.gaussian();
            len = std::sqrt(ex * ex + ey * ey);
        }
        Vec2 dir{ex / len, ey / len};
        double d_wall = boundary_distance(maze, s.pos, dir);
        double jump = std::min(cfg.nu * len, d_wall - kBoundaryMargin);
        if (jump <= 0.0)
            throw std::runtime_error(
                "sample_neighbors: degenerate geometry, wall within margin");
        Vec2 p = s.pos + jump * dir;
        int cell = maze.cell_at(p);
        if (cell < 0 || !maze.is_free(cell))
            throw std::runtime_error("sample_neighbors: sample left free space");
        out.push_back(cell);
    }
    return out;
}

double fk_penalty(double v_s, std::span<const double> v_samples_target,
                  const FKConfig& cfg, double q_s) {
    if (v_samples_target.empty())
        throw std::invalid_argument("fk_penalty: no samples");
    double m = 0.0;
    for (double v : v_samples_target) m += v;
    m /= static_cast<double>(v_samples_target.size());
    double h = v_s - m - q_s * cfg.dt / cfg.nu;
    return h > 0.0 ? h * h : 0.0;
}

FKBatchResult fk_batch_loss(const ValueTable& table, const ValueTable& target,
                            const GridMaze& maze,
                            std::span<const std::pair<int, int>> batch,
                            const FKConfig& cfg, std::uint64_t sample_base) {
    if (batch.empty()) throw std::invalid_argument("fk_batch_loss: empty batch");
    FKBatchResult res;
    res.grad_v_s.resize(batch.size(), 0.0);
    std::vector<double> samples;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        auto [s_cell, g_cell] = batch[i];
        Rng rng = Rng::fork(cfg.seed, sample_base + i);
        std::vector<int> neigh = sample_neighbors(maze, make_state(maze, s_cell), cfg, rng);
        samples.clear();
        for (int c : neigh) samples.push_back(target.value(c, g_cell));
        double m = 0.0;
        for (double v : samples) m += v;
        m /= static_cast<double>(samples.size());
        double h = table.value(s_cell, g_cell) - m - cfg.slack(s_cell);
        if (h > 0.0) {
            res.loss += h * h;
            res.grad_v_s[i] = 2.0 * h;
        }
    }
    res.loss /= static_cast<double>(batch.size());
    return res;
}

double eikonal_penalty(Vec2 grad_v, double speed_s) {
    if (!(speed_s > 0.0))
        throw std::invalid_argument("eikonal_penalty: speed must be > 0");
    double n = norm(grad_v);
    double d = n - 1.0 / speed_s;
    return d * d;
}

double eikonal_penalty_grad(const ValueTable& table, const GridMaze& maze, int s,
                            int g, const EikConfig& cfg,
                            std::vector<EikGradEntry>& out) {
    out.clear();
    int x = maze.cell_x(s), y = maze.cell_y(s);
    Vec2 grad = value_gradient(table, maze, s, g);
    double n = norm(grad);
    double d = n - 1.0 / cfg.speed;
    double penalty = d * d;
    if (n <= 0.0) return penalty;  // kink of |.| at zero, take 0 subgradient

    // Chain rule through the finite-difference stencil of value_gradient.
    double coef_x = 2.0 * d * grad.x / n;
    double coef_y = 2.0 * d * grad.y / n;
    auto axis = [&](int dx, int dy, double coef) {
        if (coef == 0.0) return;
        bool plus = maze.is_free(x + dx, y + dy);
        bool minus = maze.is_free(x - dx, y - dy);
        int cp = plus ? maze.cell_index(x + dx, y + dy) : -1;
        int cm = minus ? maze.cell_index(x - dx, y - dy) : -1;
        if (plus && minus) {
            out.push_back({cp, 0.5 * coef});
            out.push_back({cm, -0.5 * coef});
        } else if (plus) {
            out.push_back({cp, coef});
            out.push_back({s, -coef});
        } else if (minus) {
            out.push_back({s, coef});
            out.push_back({cm, -coef});
        }
    };
    axis(1, 0, coef_x);
    axis(0, 1, coef_y);
    return penalty;
}

}  // namespace viscval
