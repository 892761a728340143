#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "relq/harness.hpp"
#include "relq/oracle.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"Tabular Q-learning on deterministic gridworlds: conventional "
                 "and relative-reward variants, with an exact value-iteration "
                 "oracle and a seeded comparison harness."};
    app.require_subcommand(1);

    std::string config_path;
    std::string algo_name = "conventional";
    std::string out_path;
    double alpha = -1, gamma = -1, epsilon = -1;
    int episodes = -1;
    int64_t seed = -1;

    auto* train = app.add_subcommand("train", "Run one seeded training run");
    train->add_option("--config", config_path, "Experiment config JSON")->required();
    train->add_option("--algo", algo_name, "conventional|relative")
        ->check(CLI::IsMember({"conventional", "relative"}));
    train->add_option("--alpha", alpha, "Learning rate override");
    train->add_option("--gamma", gamma, "Discount factor override");
    train->add_option("--epsilon", epsilon, "Exploration rate override");
    train->add_option("--episodes", episodes, "Episode count override");
    train->add_option("--seed", seed, "Seed override (default: first config seed)");
    train->add_option("--out", out_path, "Output directory (default: config output)");

    auto* oracle = app.add_subcommand("oracle", "Write the exact Q* table as CSV");
    oracle->add_option("--config", config_path, "Experiment config JSON")->required();
    oracle->add_option("--out", out_path, "Output CSV file")->required();

    auto* compare =
        app.add_subcommand("compare", "Run both algorithms over all config seeds");
    compare->add_option("--config", config_path, "Experiment config JSON")->required();
    compare->add_option("--out", out_path, "Output directory (default: config output)");

    CLI11_PARSE(app, argc, argv);

    try {
        relq::ExperimentConfig config = relq::load_config(config_path);
        if (alpha >= 0) config.alpha = alpha;
        if (gamma >= 0) config.gamma = gamma;
        if (epsilon >= 0) config.epsilon = epsilon;
        if (episodes >= 0) config.episodes = episodes;
        if (!out_path.empty()) config.output_path = out_path;
        config.validate();

        if (train->parsed()) {
            auto algo = relq::algorithm_from_string(algo_name);
            uint64_t run_seed = seed >= 0 ? static_cast<uint64_t>(seed) : config.seeds.front();
            relq::RunSummary s =
                relq::run_single(config, algo, run_seed, config.output_path);
            std::cout << "algorithm=" << relq::to_string(s.algorithm)
                      << " seed=" << s.seed << " convergence_episode=";
            if (s.convergence_episode)
                std::cout << *s.convergence_episode;
            else
                std::cout << "none";
            std::cout << " supnorm_to_oracle=" << s.supnorm_to_oracle << '\n';
        } else if (oracle->parsed()) {
            relq::QTable q_star = relq::value_iteration(config.grid, config.gamma);
            relq::write_qtable_csv(out_path, q_star);
            std::cout << "wrote " << out_path << '\n';
        } else if (compare->parsed()) {
            auto summaries = relq::run_experiment(config, config.output_path);
            std::cout << "wrote " << summaries.size() << " runs to "
                      << config.output_path << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
