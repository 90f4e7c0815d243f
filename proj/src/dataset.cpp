#include "viscval/dataset.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "viscval/rng.hpp"

namespace viscval {

namespace {

int greedy_bfs_action(const GridMaze& maze, const std::vector<int>& dist, int cell) {
    State s = make_state(maze, cell);
    int best_a = 0;
    int best_d = dist[cell];
    for (int a = 1; a < kNumActions; ++a) {
        int nc = step(maze, s, a).cell;
        if (nc == cell) continue;
        if (dist[nc] != kUnreachable && dist[nc] < best_d) {
            best_d = dist[nc];
            best_a = a;
        }
    }
    return best_a;
}

}  // namespace

std::vector<Trajectory> generate_dataset(const GridMaze& maze, Behavior behavior,
                                         int n_traj, int traj_len,
                                         std::uint64_t seed) {
    if (n_traj < 1 || traj_len < 1)
        throw std::invalid_argument("generate_dataset: n_traj and traj_len must be >= 1");
    const std::vector<int>& starts =
        maze.start_cells().empty() ? maze.free_cells() : maze.start_cells();
    if (starts.empty())
        throw std::invalid_argument("generate_dataset: no free start cell");

    std::vector<Trajectory> out;
    out.reserve(n_traj);
    for (int t = 0; t < n_traj; ++t) {
        Rng rng = Rng::fork(seed, static_cast<std::uint64_t>(t));
        Trajectory traj;
        State s = make_state(maze, starts[rng.uniform_int(starts.size())]);
        traj.cells.push_back(s.cell);

        if (behavior.kind == BehaviorKind::random_walk) {
            for (int i = 0; i < traj_len; ++i) {
                int a = static_cast<int>(rng.uniform_int(kNumActions));
                s = step(maze, s, a);
                traj.actions.push_back(a);
                traj.cells.push_back(s.cell);
            }
        } else {
            int goal = maze.free_cells()[rng.uniform_int(maze.free_cells().size())];
            std::vector<int> dist = bfs_distance(maze, goal);
            for (int i = 0; i < traj_len; ++i) {
                if (s.cell == goal) break;
                int a;
                if (rng.uniform() < behavior.epsilon)
                    a = static_cast<int>(rng.uniform_int(kNumActions));
                else
                    a = greedy_bfs_action(maze, dist, s.cell);
                s = step(maze, s, a);
                traj.actions.push_back(a);
                traj.cells.push_back(s.cell);
            }
            if (traj.actions.empty()) {
                // Start drawn on the goal: keep the length >= 1 invariant.
                s = step(maze, s, 0);
                traj.actions.push_back(0);
                traj.cells.push_back(s.cell);
            }
        }
        out.push_back(std::move(traj));
    }
    return out;
}

Dataset relabel(const GridMaze& maze, const std::vector<Trajectory>& trajectories,
                const RelabelRatios& ratios, double gamma_geom, int n_samples,
                std::uint64_t seed) {
    if (!ratios.valid())
        throw std::invalid_argument("relabel: ratios must be nonnegative and sum to 1");
    if (trajectories.empty())
        throw std::invalid_argument("relabel: no trajectories");
    if (gamma_geom <= 0.0 || gamma_geom >= 1.0)
        throw std::invalid_argument("relabel: gamma_geom must be in (0,1)");

    // Flat index of all (trajectory, step) pairs for uniform transition draws.
    std::vector<std::pair<int, int>> steps;
    for (int t = 0; t < static_cast<int>(trajectories.size()); ++t)
        for (int i = 0; i < trajectories[t].length(); ++i)
            steps.emplace_back(t, i);
    if (steps.empty()) throw std::invalid_argument("relabel: trajectories are empty");

    Dataset ds;
    ds.seed = seed;
    ds.ratios = ratios;
    ds.transitions.reserve(n_samples);

    for (int n = 0; n < n_samples; ++n) {
        Rng rng = Rng::fork(seed, static_cast<std::uint64_t>(n));
        auto [t, i] = steps[rng.uniform_int(steps.size())];
        const Trajectory& traj = trajectories[t];
        int s = traj.cells[i];
        int a = traj.actions[i];
        int s_next = traj.cells[i + 1];
        int last = traj.length();

        int g;
        double u = rng.uniform();
        if (u < ratios.cur) {
            g = s_next;
        } else if (u < ratios.cur + ratios.geom) {
            // Geometric(1 - gamma_geom) offset, at least 1, clamped to the end.
            double v = rng.uniform();
            while (v <= 0.0) v = rng.uniform();
            int delta = 1 + static_cast<int>(std::floor(std::log(v) / std::log(gamma_geom)));
            if (i + delta > last) delta = last - i;
            g = traj.cells[i + delta];
        } else if (u < ratios.cur + ratios.geom + ratios.traj) {
            int j = i + 1 + static_cast<int>(rng.uniform_int(last - i));
            g = traj.cells[j];
        } else {
            g = maze.free_cells()[rng.uniform_int(maze.free_cells().size())];
        }

        Transition tr;
        tr.s = s;
        tr.a = a;
        tr.s_next = s_next;
        tr.g = g;
        tr.terminal = (s_next == g);
        tr.r = tr.terminal ? 0.0 : -1.0;
        ds.transitions.push_back(tr);
    }
    return ds;
}

void write_dataset_jsonl(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_dataset_jsonl: cannot open " + path);
    nlohmann::json header = {
        {"seed", dataset.seed},
        {"ratios", {dataset.ratios.cur, dataset.ratios.geom, dataset.ratios.traj,
                    dataset.ratios.rand}},
        {"n", dataset.transitions.size()},
    };
    out << header.dump() << "\n";
    for (const Transition& t : dataset.transitions) {
        nlohmann::json rec = {{"s", t.s},          {"a", t.a}, {"s_next", t.s_next},
                              {"g", t.g},          {"r", t.r}, {"terminal", t.terminal}};
        out << rec.dump() << "\n";
    }
}

Dataset read_dataset_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_dataset_jsonl: cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("read_dataset_jsonl: missing header");
    nlohmann::json header = nlohmann::json::parse(line);
    Dataset ds;
    ds.seed = header.at("seed").get<std::uint64_t>();
    auto r = header.at("ratios");
    ds.ratios = {r.at(0).get<double>(), r.at(1).get<double>(), r.at(2).get<double>(),
                 r.at(3).get<double>()};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line);
        Transition t;
        t.s = rec.at("s").get<int>();
        t.a = rec.at("a").get<int>();
        t.s_next = rec.at("s_next").get<int>();
        t.g = rec.at("g").get<int>();
        t.r = rec.at("r").get<double>();
        t.terminal = rec.at("terminal").get<bool>();
        ds.transitions.push_back(t);
    }
    return ds;
}

}  // namespace viscval
