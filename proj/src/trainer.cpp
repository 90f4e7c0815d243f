#include "viscval/trainer.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "viscval/rng.hpp"

namespace viscval {

void TrainConfig::validate() const {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("TrainConfig: gamma must be in (0,1)");
    if (!(kappa > 0.5 && kappa < 1.0))
        throw std::invalid_argument("TrainConfig: kappa must be in (0.5,1)");
    if (!(lr > 0.0)) throw std::invalid_argument("TrainConfig: lr must be > 0");
    if (batch < 1) throw std::invalid_argument("TrainConfig: batch must be >= 1");
    if (steps < 1) throw std::invalid_argument("TrainConfig: steps must be >= 1");
    if (lambda_phy < 0.0 || lambda_eik < 0.0)
        throw std::invalid_argument("TrainConfig: lambda weights must be >= 0");
    if (lambda_phy > 0.0 && lambda_eik > 0.0)
        throw std::invalid_argument(
            "TrainConfig: at most one of lambda_phy, lambda_eik may be nonzero");
    if (!(target_rate > 0.0 && target_rate <= 1.0))
        throw std::invalid_argument("TrainConfig: target_rate must be in (0,1]");
}

namespace {

inline void clamp_entry(double& v, double v_min) {
    if (v < v_min) v = v_min;
    if (v > 0.0) v = 0.0;
}

}  // namespace

StepReport train_step(ValueTable& table, ValueTable& target, const GridMaze& maze,
                      std::span<const Transition> batch, const TrainConfig& config,
                      const FKConfig* fk, const EikConfig* eik,
                      std::uint64_t step_index) {
    if (batch.empty()) throw std::invalid_argument("train_step: empty batch");
    const double v_min = -1.0 / (1.0 - config.gamma);
    StepReport report;
    std::vector<double> sample_values;
    std::vector<EikGradEntry> eik_grads;

    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Transition& t = batch[i];
        double y = td_target(t.r, config.gamma, t.terminal, target.value(t.s_next, t.g));
        double u = y - table.value(t.s, t.g);
        double w = u < 0.0 ? 1.0 - config.kappa : config.kappa;
        report.td_loss += w * u * u;
        double& entry = table.at(t.s, t.g);
        entry += config.lr * 2.0 * w * u;
        clamp_entry(entry, v_min);

        if (config.lambda_phy > 0.0) {
            Rng rng = Rng::fork(fk->seed,
                                step_index * static_cast<std::uint64_t>(batch.size()) + i);
            std::vector<int> neigh =
                sample_neighbors(maze, make_state(maze, t.s), *fk, rng);
            sample_values.clear();
            for (int c : neigh) sample_values.push_back(target.value(c, t.g));
            double m = 0.0;
            for (double v : sample_values) m += v;
            m /= static_cast<double>(sample_values.size());
            double h = table.value(t.s, t.g) - m - fk->slack(t.s);
            if (h > 0.0) {
                report.phy_loss += h * h;
                double& e = table.at(t.s, t.g);
                e -= config.lr * config.lambda_phy * 2.0 * h;
                clamp_entry(e, v_min);
            }
        } else if (config.lambda_eik > 0.0) {
            double p = eikonal_penalty_grad(table, maze, t.s, t.g, *eik, eik_grads);
            report.eik_loss += p;
            for (const EikGradEntry& ge : eik_grads) {
                double& e = table.at(ge.cell, t.g);
                e -= config.lr * config.lambda_eik * ge.grad;
                clamp_entry(e, v_min);
            }
        }
    }

    target.soft_update_from(table, config.target_rate);

    double n = static_cast<double>(batch.size());
    report.td_loss /= n;
    report.phy_loss /= n;
    report.eik_loss /= n;
    if (!std::isfinite(report.td_loss) || !std::isfinite(report.phy_loss) ||
        !std::isfinite(report.eik_loss))
        throw std::runtime_error("train_step: non-finite loss");
    return report;
}

TrainResult train(const GridMaze& maze, const Dataset& dataset,
                  const TrainConfig& config, const FKConfig* fk,
                  const EikConfig* eik, int checkpoint_every,
                  const CheckpointHook& hook) {
    config.validate();
    if (config.regularizer() == RegularizerKind::fk) {
        if (!fk) throw std::invalid_argument("train: lambda_phy set but no FKConfig");
        fk->validate();
    }
    if (config.regularizer() == RegularizerKind::eikonal) {
        if (!eik) throw std::invalid_argument("train: lambda_eik set but no EikConfig");
        eik->validate();
    }
    if (dataset.transitions.empty())
        throw std::invalid_argument("train: empty dataset");

    TrainResult result{ValueTable(maze), ValueTable(maze), {}};
    std::vector<Transition> batch(static_cast<std::size_t>(config.batch));

    for (int s = 0; s < config.steps; ++s) {
        Rng rng = Rng::fork(config.seed, static_cast<std::uint64_t>(s));
        for (int b = 0; b < config.batch; ++b)
            batch[b] = dataset.transitions[rng.uniform_int(dataset.transitions.size())];
        StepReport rep = train_step(result.table, result.target, maze, batch, config,
                                    fk, eik, static_cast<std::uint64_t>(s));
        result.loss_curve.push_back(
            {static_cast<double>(s), rep.td_loss, rep.phy_loss, rep.eik_loss});
        if (hook && checkpoint_every > 0 &&
            ((s + 1) % checkpoint_every == 0 || s + 1 == config.steps))
            hook(s + 1, result.table);
    }
    return result;
}

void write_loss_csv(const std::vector<std::array<double, 4>>& curve,
                    const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_loss_csv: cannot open " + path);
    out << "step,td_loss,phy_loss,eik_loss\n";
    char buf[160];
    for (const auto& row : curve) {
        std::snprintf(buf, sizeof(buf), "%d,%.10g,%.10g,%.10g\n",
                      static_cast<int>(row[0]), row[1], row[2], row[3]);
        out << buf;
    }
}

}  // namespace viscval
