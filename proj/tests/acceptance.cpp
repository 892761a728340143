// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "relq/harness.hpp"
#include "relq/oracle.hpp"

using namespace relq;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name
              << detail << '\n';
    if (!ok) ++failures;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

GridSpec empty5x5() { return GridSpec(5, 5, {0, 0}, {4, 4}); }

// Shared between criteria 1 and 2.
LearningCurve train_reference_5x5() {
    AgentParams params{.alpha = 0.8,
                       .gamma = 0.8,
                       .epsilon = 0.3,
                       .seed = 2,
                       .max_steps_per_episode = 200};
    Rng rng(params.seed);
    return run_training(empty5x5(), params, 5000, rng);
}

}  // namespace

int main() {
    GridSpec ref_spec = empty5x5();
    LearningCurve ref = train_reference_5x5();

    criterion(1, "learned conventional Q within 1e-2 of value-iteration Q*", [&] {
        QTable q_star = value_iteration(ref_spec, 0.8);
        double dist = sup_norm_distance(ref.table, q_star);
        std::cout << "  sup-norm distance to Q*: " << dist << '\n';
        return dist < 1e-2;
    });

    criterion(2, "greedy trajectory reaches the goal in Manhattan-distance steps", [&] {
        auto path = greedy_trajectory(ref_spec, ref.table, 200);
        return path.back() == ref_spec.goal() &&
               path.size() - 1 ==
                   static_cast<size_t>(manhattan(ref_spec.start(), ref_spec.goal()));
    });

    criterion(3, "relative converges no later than conventional on the 20x20 graded grid", [&] {
        ExperimentConfig config{
            .grid = GridSpec(20, 20, {0, 0}, {19, 19}, {},
                             {.step = 0, .wall = -1, .goal = 50,
                              .mode = RewardMode::Graded}),
            .alpha = 0.8,
            .gamma = 0.8,
            .epsilon = 0.2,
            .episodes = 500,
            .seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
            .convergence_tol = 1e-3,
            .convergence_window = 10,
        };
        int wins = 0;
        double conv_sum = 0, rel_sum = 0;
        for (uint64_t seed : config.seeds) {
            auto run = [&](Algorithm algo, double tol) {
                Rng rng(seed);
                LearningCurve curve = run_training(
                    config.grid, config.agent_params(algo, seed), config.episodes, rng);
                auto e = detect_convergence(curve.records, tol,
                                            config.convergence_window);
                // Non-converged runs count as episodes + 1.
                return e ? *e : config.episodes + 1;
            };
            int conv = run(Algorithm::Conventional, config.convergence_tol);
            int rel = run(Algorithm::Relative, config.convergence_tol);
            conv_sum += conv;
            rel_sum += rel;
            if (rel <= conv) ++wins;
            std::cout << "  seed " << seed << ": conventional=" << conv
                      << " relative=" << rel << "  (at tol=2.0: conventional="
                      << run(Algorithm::Conventional, 2.0)
                      << " relative=" << run(Algorithm::Relative, 2.0) << ")\n";
        }
        double n = static_cast<double>(config.seeds.size());
        std::cout << "  wins=" << wins << "/10 mean conventional=" << conv_sum / n
                  << " mean relative=" << rel_sum / n << '\n';
        return wins >= 8 && rel_sum < conv_sum;
    });

    criterion(4, "equal rewards give field-identical tables for both algorithms", [&] {
        GridSpec spec(5, 5, {0, 0}, {4, 4}, {}, {.step = 2.0, .wall = 2.0, .goal = 2.0});
        for (uint64_t seed : {11ULL, 22ULL}) {
            Rng r1(seed), r2(seed);
            LearningCurve a = run_training(
                spec, AgentParams{.seed = seed, .algorithm = Algorithm::Conventional},
                200, r1);
            LearningCurve b = run_training(
                spec, AgentParams{.seed = seed, .algorithm = Algorithm::Relative},
                200, r2);
            if (sup_norm_distance(a.table, b.table) != 0.0) return false;
        }
        return true;
    });

    criterion(5, "update rules reproduce hand-evaluated increments", [&] {
        GridSpec spec = empty5x5();

        QTable t1(spec);
        update_conventional(t1, {{4, 3}, Action::Right, 50, {4, 4}, true}, 0.8, 0.8);
        if (std::abs(t1.value({4, 3}, Action::Right) - 40.0) > 1e-12) return false;

        QTable t2(spec);
        t2.apply_delta({2, 2}, Action::Left, 10.0);
        t2.apply_delta({2, 1}, Action::Up, 10.0);
        update_conventional(t2, {{2, 2}, Action::Left, 0, {2, 1}, false}, 0.5, 0.8);
        if (std::abs(t2.value({2, 2}, Action::Left) - 9.0) > 1e-12) return false;

        QTable t3(spec);
        t3.apply_delta({2, 1}, Action::Up, 5.0);
        RelativeMemory mem{.prev_reward = 10.0};
        update_relative(t3, {{2, 2}, Action::Left, 2, {2, 1}, false}, mem, 0.8, 0.8);
        return std::abs(t3.value({2, 2}, Action::Left) - 11.2) <= 1e-12;
    });

    criterion(6, "discounted return matches the geometric closed form", [&] {
        Rng rng(77);
        for (int i = 0; i < 20; ++i) {
            double r = rng.next_unit() * 20 - 10;
            int n = 1 + rng.next_below(50);
            double gamma = rng.next_unit() * 0.99;
            std::vector<double> rewards(static_cast<size_t>(n), r);
            double closed = gamma == 1.0 ? r * n
                                         : r * (1 - std::pow(gamma, n)) / (1 - gamma);
            if (std::abs(discounted_return(rewards, gamma) - closed) > 1e-9)
                return false;
            if (discounted_return(rewards, 0.0) != r) return false;
        }
        return true;
    });

    criterion(7, "Q entries stay within the discounted reward bounds (fuzz)", [&] {
        Rng rng(2024);
        for (int trial = 0; trial < 100; ++trial) {
            int w = 2 + rng.next_below(7), h = 2 + rng.next_below(7);
            State start{rng.next_below(h), rng.next_below(w)};
            State goal{rng.next_below(h), rng.next_below(w)};
            if (start == goal) goal = goal == State{0, 0} ? State{h - 1, w - 1}
                                                          : State{0, 0};
            RewardField rf{.step = rng.next_unit() * 10 - 5,
                           .wall = rng.next_unit() * 10 - 5,
                           .goal = rng.next_unit() * 100};
            GridSpec spec(w, h, start, goal, {}, rf);
            double gamma = rng.next_unit() * 0.95;
            double r_min = std::min({rf.step, rf.wall, rf.goal});
            double r_max = std::max({rf.step, rf.wall, rf.goal});
            double lo = std::min(0.0, r_min) / (1 - gamma);
            double hi = r_max / (1 - gamma);
            for (Algorithm algo : {Algorithm::Conventional, Algorithm::Relative}) {
                AgentParams params{.alpha = 0.01 + rng.next_unit() * 0.99,
                                   .gamma = gamma,
                                   .epsilon = rng.next_unit(),
                                   .algorithm = algo};
                Rng run_rng(static_cast<uint64_t>(trial) * 2 + (algo == Algorithm::Relative));
                QTable table(spec);
                for (int ep = 0; ep < 200; ++ep) {
                    run_episode(spec, table, params, run_rng);
                    for (State s : enumerate_states(spec))
                        for (int ai = 0; ai < kNumActions; ++ai) {
                            double q = table.value(s, static_cast<Action>(ai));
                            if (q < lo - 1e-9 || q > hi + 1e-9) return false;
                        }
                }
            }
        }
        return true;
    });

    criterion(8, "compare is byte-deterministic across runs", [&] {
        ExperimentConfig config{
            .grid = GridSpec(5, 5, {0, 0}, {4, 4}),
            .episodes = 100,
            .seeds = {1, 2, 3},
        };
        fs::path a = fs::temp_directory_path() / "relq_accept_a";
        fs::path b = fs::temp_directory_path() / "relq_accept_b";
        fs::remove_all(a);
        fs::remove_all(b);
        run_experiment(config, a);
        run_experiment(config, b);
        size_t files = 0;
        for (const auto& entry : fs::directory_iterator(a)) {
            if (slurp(entry.path()) != slurp(b / entry.path().filename())) return false;
            ++files;
        }
        return files == 13;  // 2 algos x 3 seeds x 2 files + summary
    });

    return failures == 0 ? 0 : 1;
}
