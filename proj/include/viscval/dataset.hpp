#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "viscval/maze.hpp"

namespace viscval {

struct Transition {
    int s = -1;
    int a = 0;
    int s_next = -1;
    int g = -1;
    double r = -1.0;
    bool terminal = false;
};

/** One rollout: cells.size() == actions.size() + 1. */
struct Trajectory {
    std::vector<int> cells;
    std::vector<int> actions;

    int length() const { return static_cast<int>(actions.size()); }
};

struct RelabelRatios {
    double cur = 0.2;
    double geom = 0.5;
    double traj = 0.0;
    double rand = 0.3;

    double sum() const { return cur + geom + traj + rand; }
    bool valid() const {
        return cur >= 0 && geom >= 0 && traj >= 0 && rand >= 0 &&
               std::abs(sum() - 1.0) <= 1e-9;
    }
};

struct Dataset {
    std::vector<Transition> transitions;
    std::uint64_t seed = 0;
    RelabelRatios ratios;
};

enum class BehaviorKind { random_walk, noisy_expert };

struct Behavior {
    BehaviorKind kind = BehaviorKind::random_walk;
    double epsilon = 0.0;  // noisy_expert only

    static Behavior random_walk() { return {BehaviorKind::random_walk, 0.0}; }
    static Behavior noisy_expert(double eps) {
        return {BehaviorKind::noisy_expert, eps};
    }
};

/** Roll out `n_traj` trajectories of at most `traj_len` steps.
 *
 * random_walk picks uniformly over the 9 actions for exactly traj_len steps.
 * noisy_expert draws a uniform free goal, then walks the BFS-greedy action
 * (lowest index on ties) with probability 1-epsilon and a uniform action
 * otherwise, stopping early on arrival. Starts are drawn from the maze's
 * start cells when present, else from all free cells. Deterministic in seed.
 */
std::vector<Trajectory> generate_dataset(const GridMaze& maze, Behavior behavior,
                                         int n_traj, int traj_len,
                                         std::uint64_t seed);

/** Hindsight goal relabeling. Each of the n_samples draws picks a transition
 * uniformly over all trajectory steps, then a goal by strategy:
 *   cur   g = s_next
 *   geom  g = cells[i + delta], delta ~ Geometric(1 - gamma_geom) >= 1,
 *         clamped to the trajectory end
 *   traj  g uniform over strictly future states in the same trajectory
 *   rand  g uniform over free cells
 * Rewards and terminal flags are recomputed against the relabeled goal.
 */
Dataset relabel(const GridMaze& maze, const std::vector<Trajectory>& trajectories,
                const RelabelRatios& ratios, double gamma_geom, int n_samples,
                std::uint64_t seed);

/** JSON-lines dataset file: one header record (seed, ratios) followed by one
 * record per transition. */
void write_dataset_jsonl(const Dataset& dataset, const std::string& path);
Dataset read_dataset_jsonl(const std::string& path);

}  // namespace viscval
