#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "relq/gridworld.hpp"
#include "relq/qtable.hpp"
#include "relq/rng.hpp"

namespace relq {

enum class Algorithm { Conventional, Relative };

const char* to_string(Algorithm algo);
Algorithm algorithm_from_string(const std::string& name);

struct AgentParams {
    double alpha = 0.8;
    double gamma = 0.8;
    double epsilon = 0.2;
    uint64_t seed = 0;
    int max_steps_per_episode = 0;  // 0 -> 4 * width * height
    Algorithm algorithm = Algorithm::Conventional;

    void validate() const;  // throws std::invalid_argument naming the field
    int effective_step_cap(const GridSpec& spec) const;
};

struct EpisodeResult {
    int steps = 0;
    std::vector<double> rewards;
    double max_q_delta = 0.0;
    bool reached_goal = false;
};

struct EpisodeRecord {
    int episode = 0;  // 1-based
    int steps = 0;
    double discounted_return = 0.0;
    double max_q_delta = 0.0;
    double sum_q = 0.0;
};

struct LearningCurve {
    std::vector<EpisodeRecord> records;
    QTable table;
};

/// Carries the previous step's raw reward within one episode; empty at every
/// episode start.
struct RelativeMemory {
    std::optional<double> prev_reward;
};

/// One-step Q-update: Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)),
/// with zero bootstrap on terminal transitions. Returns the signed increment.
double update_conventional(QTable& table, const Transition& t, double alpha,
                           double gamma);

/// Relative variant: the TD target uses max(t.r, previous step's reward).
/// mem.prev_reward is set to the raw t.r afterwards.
double update_relative(QTable& table, const Transition& t, RelativeMemory& mem,
                       double alpha, double gamma);

/// sum_k gamma^k * rewards[k]; empty input yields 0.
double discounted_return(std::span<const double> rewards, double gamma);

EpisodeResult run_episode(const GridSpec& spec, QTable& table,
                          const AgentParams& params, Rng& rng);

/// Runs `episodes` sequential episodes against one persistent table.
LearningCurve run_training(const GridSpec& spec, const AgentParams& params,
                           int episodes, Rng& rng);

/// States visited when acting greedily from start; stops at the goal or after
/// max_steps moves. Front is the start state.
std::vector<State> greedy_trajectory(const GridSpec& spec, const QTable& table,
                                     int max_steps);

}  // namespace relq
