#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace relq {

struct State {
    int row = 0;
    int col = 0;

    friend bool operator==(const State&, const State&) = default;
    friend auto operator<=>(const State&, const State&) = default;
};

// Fixed action order; ties in argmax break toward the smaller index.
enum class Action : int { Up = 0, Down = 1, Left = 2, Right = 3 };

inline constexpr int kNumActions = 4;

const char* to_string(Action a);
Action action_from_string(const std::string& name);

enum class RewardMode {
    // step_reward for every ordinary move.
    Fixed,
    // +1 for a move that reduces Manhattan distance to the goal, -1 otherwise.
    Graded,
};

struct RewardField {
    double step = 0.0;
    double wall = -1.0;
    double goal = 50.0;
    RewardMode mode = RewardMode::Fixed;
};

/// Immutable description of a deterministic grid MDP. Moves that would leave
/// the grid or enter an obstacle clamp the agent in place.
class GridSpec {
public:
    GridSpec(int width, int height, State start, State goal,
             std::vector<State> obstacles = {}, RewardField rewards = {});

    int width() const { return width_; }
    int height() const { return height_; }
    State start() const { return start_; }
    State goal() const { return goal_; }
    const RewardField& rewards() const { return rewards_; }
    const std::vector<State>& obstacles() const { return obstacles_; }

    bool in_bounds(State s) const {
        return s.row >= 0 && s.row < height_ && s.col >= 0 && s.col < width_;
    }
    bool is_obstacle(State s) const {
        return obstacle_mask_[static_cast<size_t>(s.row) * width_ + s.col] != 0;
    }
    int num_cells() const { return width_ * height_; }

    /// True when every non-obstacle cell is reachable from start.
    bool solvable() const;

    nlohmann::json to_json() const;
    static GridSpec from_json(const nlohmann::json& j);

    friend bool operator==(const GridSpec& a, const GridSpec& b);

private:
    int width_;
    int height_;
    State start_;
    State goal_;
    std::vector<State> obstacles_;
    RewardField rewards_;
    std::vector<uint8_t> obstacle_mask_;
};

struct Transition {
    State s;
    Action a;
    double r = 0.0;
    State s_next;
    bool terminal = false;
};

/// One deterministic environment step. Requires s to be a valid non-goal,
/// non-obstacle state; throws std::invalid_argument otherwise.
Transition step(const GridSpec& spec, State s, Action a);

/// All non-obstacle states in row-major order.
std::vector<State> enumerate_states(const GridSpec& spec);

int manhattan(State a, State b);

}  // namespace relq
