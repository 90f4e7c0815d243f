#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "viscval/dataset.hpp"
#include "viscval/maze.hpp"
#include "viscval/phys_reg.hpp"
#include "viscval/value_table.hpp"

namespace viscval {

enum class RegularizerKind { none, fk, eikonal };

struct TrainConfig {
    double gamma = 0.99;
    double kappa = 0.9;
    double lr = 0.25;
    int batch = 256;
    int steps = 100000;
    double lambda_phy = 0.0;
    double lambda_eik = 0.0;
    double target_rate = 0.005;
    std::uint64_t seed = 0;

    RegularizerKind regularizer() const {
        if (lambda_phy > 0.0) return RegularizerKind::fk;
        if (lambda_eik > 0.0) return RegularizerKind::eikonal;
        return RegularizerKind::none;
    }

    void validate() const;
};

struct StepReport {
    double td_loss = 0.0;
    double phy_loss = 0.0;
    double eik_loss = 0.0;
};

/** One SGD pass over `batch`.
 *
 * Per sample: expectile TD update on the touched entry, plus the weighted
 * regularizer gradient when enabled; entries are clamped to the sparse-reward
 * range [-1/(1-gamma), 0] after every write. The target table is soft-updated
 * once, after the whole batch. `step_index` seeds the per-sample neighbor
 * streams so identical runs are bit-identical.
 */
StepReport train_step(ValueTable& table, ValueTable& target, const GridMaze& maze,
                      std::span<const Transition> batch, const TrainConfig& config,
                      const FKConfig* fk, const EikConfig* eik,
                      std::uint64_t step_index);

struct TrainResult {
    ValueTable table;
    ValueTable target;
    std::vector<std::array<double, 4>> loss_curve;  // step, td, phy, eik
};

using CheckpointHook = std::function<void(int step, const ValueTable&)>;

/** Full training loop: samples batches uniformly from the dataset (seeded),
 * aborts on non-finite losses. `checkpoint_every` <= 0 disables the hook. */
TrainResult train(const GridMaze& maze, const Dataset& dataset,
                  const TrainConfig& config, const FKConfig* fk,
                  const EikConfig* eik, int checkpoint_every = 0,
                  const CheckpointHook& hook = nullptr);

void write_loss_csv(const std::vector<std::array<double, 4>>& curve,
                    const std::string& path);

}  // namespace viscval
