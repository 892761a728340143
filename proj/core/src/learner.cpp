#include "relq/learner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relq {

const char* to_string(Algorithm algo) {
    return algo == Algorithm::Conventional ? "conventional" : "relative";
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "conventional") return Algorithm::Conventional;
    if (name == "relative") return Algorithm::Relative;
    throw std::invalid_argument("unknown algorithm: " + name);
}

void AgentParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1]");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must lie in [0, 1)");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    if (max_steps_per_episode < 0)
        throw std::invalid_argument("max_steps_per_episode must be non-negative");
}

int AgentParams::effective_step_cap(const GridSpec& spec) const {
    return max_steps_per_episode > 0 ? max_steps_per_episode
                                     : 4 * spec.width() * spec.height();
}

double update_conventional(QTable& table, const Transition& t, double alpha,
                           double gamma) {
    double bootstrap = t.terminal ? 0.0 : table.max_q(t.s_next);
    double delta = alpha * (t.r + gamma * bootstrap - table.value(t.s, t.a));
    table.apply_delta(t.s, t.a, delta);
    return delta;
}

double update_relative(QTable& table, const Transition& t, RelativeMemory& mem,
                       double alpha, double gamma) {
    double r_eff = mem.prev_reward ? std::max(t.r, *mem.prev_reward) : t.r;
    double bootstrap = t.terminal ? 0.0 : table.max_q(t.s_next);
    double delta = alpha * (r_eff + gamma * bootstrap - table.value(t.s, t.a));
    table.apply_delta(t.s, t.a, delta);
    mem.prev_reward = t.r;
    return delta;
}

double discounted_return(std::span<const double> rewards, double gamma) {
    double total = 0.0;
    double weight = 1.0;
    for (double r : rewards) {
        total += weight * r;
        weight *= gamma;
    }
    return total;
}

EpisodeResult run_episode(const GridSpec& spec, QTable& table,
                          const AgentParams& params, Rng& rng) {
    params.validate();
    const int cap = params.effective_step_cap(spec);

    EpisodeResult result;
    RelativeMemory mem;
    State s = spec.start();
    while (result.steps < cap) {
        Action a = select_action(table, s, params.epsilon, rng);
        Transition t = step(spec, s, a);
        double delta = params.algorithm == Algorithm::Relative
                           ? update_relative(table, t, mem, params.alpha, params.gamma)
                           : update_conventional(table, t, params.alpha, params.gamma);
        result.rewards.push_back(t.r);
        result.steps += 1;
        result.max_q_delta = std::max(result.max_q_delta, std::abs(delta));
        if (t.terminal) {
            result.reached_goal = true;
            break;
        }
        s = t.s_next;
    }
    return result;
}

LearningCurve run_training(const GridSpec& spec, const AgentParams& params,
                           int episodes, Rng& rng) {
    if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
    LearningCurve curve{.records = {}, .table = QTable(spec)};
    curve.records.reserve(static_cast<size_t>(episodes));
    for (int ep = 1; ep <= episodes; ++ep) {
        EpisodeResult r = run_episode(spec, curve.table, params, rng);
        curve.records.push_back({.episode = ep,
                                 .steps = r.steps,
                                 .discounted_return =
                                     discounted_return(r.rewards, params.gamma),
                                 .max_q_delta = r.max_q_delta,
                                 .sum_q = curve.table.sum()});
    }
    return curve;
}

std::vector<State> greedy_trajectory(const GridSpec& spec, const QTable& table,
                                     int max_steps) {
    std::vector<State> path{spec.start()};
    State s = spec.start();
    for (int i = 0; i < max_steps && s != spec.goal(); ++i) {
        Transition t = step(spec, s, table.argmax_action(s));
        s = t.s_next;
        path.push_back(s);
    }
    return path;
}

}  // namespace relq
