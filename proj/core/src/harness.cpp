#include "relq/harness.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "relq/oracle.hpp"

namespace relq {

void ExperimentConfig::validate() const {
    agent_params(Algorithm::Conventional, 0).validate();
    if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
    if (convergence_window < 1)
        throw std::invalid_argument("convergence_window must be >= 1");
    if (episodes < convergence_window)
        throw std::invalid_argument("episodes must be >= convergence_window");
    if (seeds.empty()) throw std::invalid_argument("seeds must be non-empty");
    if (!(convergence_tol > 0.0))
        throw std::invalid_argument("convergence_tol must be positive");
    if (output_path.empty()) throw std::invalid_argument("output_path must be set");
}

AgentParams ExperimentConfig::agent_params(Algorithm algo, uint64_t seed) const {
    return {.alpha = alpha,
            .gamma = gamma,
            .epsilon = epsilon,
            .seed = seed,
            .max_steps_per_episode = max_steps_per_episode,
            .algorithm = algo};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    if (!j.contains("grid"))
        throw std::invalid_argument("config requires a \"grid\" section");
    ExperimentConfig config{.grid = GridSpec::from_json(j["grid"])};
    config.alpha = j.value("alpha", config.alpha);
    config.gamma = j.value("gamma", config.gamma);
    config.epsilon = j.value("epsilon", config.epsilon);
    config.episodes = j.value("episodes", config.episodes);
    config.max_steps_per_episode =
        j.value("max_steps", config.max_steps_per_episode);
    if (j.contains("seeds"))
        config.seeds = j["seeds"].get<std::vector<uint64_t>>();
    config.convergence_tol = j.value("convergence_tol", config.convergence_tol);
    config.convergence_window =
        j.value("convergence_window", config.convergence_window);
    config.output_path = j.value("output", config.output_path);
    config.validate();
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("malformed config JSON in " + path.string() +
                                 ": " + e.what());
    }
    return config_from_json(j);
}

std::optional<int> detect_convergence(const std::vector<EpisodeRecord>& curve,
                                      double tol, int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    int run = 0;
    for (const EpisodeRecord& rec : curve) {
        run = rec.max_q_delta < tol ? run + 1 : 0;
        if (run == window) return rec.episode - window + 1;
    }
    return std::nullopt;
}

namespace {

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

std::string run_stem(Algorithm algo, uint64_t seed) {
    return std::string(to_string(algo)) + "_seed" + std::to_string(seed);
}

RunSummary run_one(const ExperimentConfig& config, Algorithm algo, uint64_t seed,
                   const QTable& oracle, const std::filesystem::path& out_dir) {
    Rng rng(seed);
    LearningCurve curve =
        run_training(config.grid, config.agent_params(algo, seed), config.episodes, rng);
    write_curve_csv(out_dir / (run_stem(algo, seed) + "_curve.csv"), curve.records);
    write_qtable_csv(out_dir / (run_stem(algo, seed) + "_qtable.csv"), curve.table);
    return {.algorithm = algo,
            .seed = seed,
            .convergence_episode = detect_convergence(
                curve.records, config.convergence_tol, config.convergence_window),
            .supnorm_to_oracle = sup_norm_distance(curve.table, oracle)};
}

}  // namespace

void write_curve_csv(const std::filesystem::path& path,
                     const std::vector<EpisodeRecord>& records) {
    auto out = open_output(path);
    out << "episode,steps,return,max_q_delta,sum_q\n";
    for (const EpisodeRecord& r : records)
        out << r.episode << ',' << r.steps << ',' << fixed6(r.discounted_return)
            << ',' << fixed6(r.max_q_delta) << ',' << fixed6(r.sum_q) << '\n';
}

void write_qtable_csv(const std::filesystem::path& path, const QTable& table) {
    auto out = open_output(path);
    table.write_csv(out);
}

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<RunSummary>& summaries) {
    auto out = open_output(path);
    out << "algorithm,seed,convergence_episode,supnorm_to_oracle\n";
    for (const RunSummary& s : summaries) {
        out << to_string(s.algorithm) << ',' << s.seed << ',';
        if (s.convergence_episode) out << *s.convergence_episode;
        out << ',' << fixed6(s.supnorm_to_oracle) << '\n';
    }
}

RunSummary run_single(const ExperimentConfig& config, Algorithm algo,
                      uint64_t seed, const std::filesystem::path& out_dir) {
    config.validate();
    std::filesystem::create_directories(out_dir);
    QTable oracle = value_iteration(config.grid, config.gamma);
    return run_one(config, algo, seed, oracle, out_dir);
}

std::vector<RunSummary> run_experiment(const ExperimentConfig& config,
                                       const std::filesystem::path& out_dir) {
    config.validate();
    std::filesystem::create_directories(out_dir);
    QTable oracle = value_iteration(config.grid, config.gamma);
    std::vector<RunSummary> summaries;
    for (Algorithm algo : {Algorithm::Conventional, Algorithm::Relative})
        for (uint64_t seed : config.seeds)
            summaries.push_back(run_one(config, algo, seed, oracle, out_dir));
    write_summary_csv(out_dir / "summary.csv", summaries);
    return summaries;
}

}  // namespace relq
