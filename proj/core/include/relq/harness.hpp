#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "relq/gridworld.hpp"
#include "relq/learner.hpp"

namespace relq {

struct ExperimentConfig {
    GridSpec grid;
    double alpha = 0.8;
    double gamma = 0.8;
    double epsilon = 0.2;
    int episodes = 500;
    int max_steps_per_episode = 0;  // 0 -> 4 * width * height
    std::vector<uint64_t> seeds = {0};
    double convergence_tol = 1e-3;
    int convergence_window = 10;
    std::string output_path = "out";

    void validate() const;
    AgentParams agent_params(Algorithm algo, uint64_t seed) const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Smallest episode e (1-based) with max_q_delta < tol on every episode of
/// [e, e+window-1]; nullopt when no such window exists.
std::optional<int> detect_convergence(const std::vector<EpisodeRecord>& curve,
                                      double tol, int window);

struct RunSummary {
    Algorithm algorithm;
    uint64_t seed;
    std::optional<int> convergence_episode;
    double supnorm_to_oracle;
};

void write_curve_csv(const std::filesystem::path& path,
                     const std::vector<EpisodeRecord>& records);
void write_qtable_csv(const std::filesystem::path& path, const QTable& table);
void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<RunSummary>& summaries);

/// Runs one seeded training and writes <algo>_seed<seed>_{curve,qtable}.csv
/// under out_dir. Returns the run's summary row.
RunSummary run_single(const ExperimentConfig& config, Algorithm algo,
                      uint64_t seed, const std::filesystem::path& out_dir);

/// Full comparison: both algorithms over every seed, curves and Q-tables per
/// run plus summary.csv. Identical config content yields byte-identical files.
std::vector<RunSummary> run_experiment(const ExperimentConfig& config,
                                       const std::filesystem::path& out_dir);

}  // namespace relq
