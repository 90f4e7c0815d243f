#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "viscval/maze.hpp"
#include "viscval/rng.hpp"
#include "viscval/value_table.hpp"

namespace viscval {

/** Feynman-Kac hinge regularizer configuration.
 *
 * The hinge penalizes V(s,g) exceeding the sampled-neighbor mean under the
 * target table plus the slack q(s)*dt/nu. q is carried per cell so
 * nonuniform running costs stay expressible; by default q = 1 everywhere
 * (constant unit speed).
 */
struct FKConfig {
    double nu = 0.01;
    double dt = 1.0;
    int k = 10;
    double q = 1.0;                 // uniform running cost
    std::vector<double> q_cells;    // optional per-cell override
    std::uint64_t seed = 0;

    double q_at(int cell) const {
        return q_cells.empty() ? q : q_cells[static_cast<std::size_t>(cell)];
    }
    double slack(int cell) const { return q_at(cell) * dt / nu; }

    void validate() const;
};

struct EikConfig {
    double speed = 1.0;  // target gradient norm is 1/speed

    void validate() const;
};

/** Distance margin kept between a sampled point and the nearest wall face. */
inline constexpr double kBoundaryMargin = 1e-3;

/** Draw K neighbor states around s by clipped Gaussian jumps.
 *
 * Each draw: eps ~ N(0, I2), direction u = eps/|eps|, displacement
 * min(nu*|eps|, boundary_distance(s,u) - margin). The landing point is
 * snapped to its containing cell, which is free by construction, so no draw
 * ever leaves the free region. Throws degenerate-geometry if the clipped
 * displacement is not positive (wall closer than the margin).
 */
std::vector<int> sample_neighbors(const GridMaze& maze, const State& s,
                                  const FKConfig& cfg, Rng& rng);

/** Eq.-7 hinge: max(0, v_s - mean(v_samples_target) - q_s*dt/nu)^2. */
double fk_penalty(double v_s, std::span<const double> v_samples_target,
                  const FKConfig& cfg, double q_s);

struct FKBatchResult {
    double loss = 0.0;  // batch mean
    // d(penalty_i)/dV(s_i, g_i); gradient flows only into the learned entry,
    // sampled values are read from the target table and held constant.
    std::vector<double> grad_v_s;
};

/** Hinge loss over a batch of (s, g) pairs with fresh neighbor samples.
 * Per-sample RNG streams derive from (cfg.seed, sample_base + i). */
FKBatchResult fk_batch_loss(const ValueTable& table, const ValueTable& target,
                            const GridMaze& maze,
                            std::span<const std::pair<int, int>> batch,
                            const FKConfig& cfg, std::uint64_t sample_base);

/** Eikonal baseline penalty (|grad V| - 1/speed)^2. */
double eikonal_penalty(Vec2 grad_v, double speed_s);

struct EikGradEntry {
    int cell;
    double grad;  // d(penalty)/dV(cell, g)
};

/** Penalty and its exact gradient w.r.t. the table entries touched by the
 * finite-difference stencil at s. */
double eikonal_penalty_grad(const ValueTable& table, const GridMaze& maze, int s,
                            int g, const EikConfig& cfg,
                            std::vector<EikGradEntry>& out);

}  // namespace viscval
