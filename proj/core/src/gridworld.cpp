#include "relq/gridworld.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace relq {

const char* to_string(Action a) {
    switch (a) {
        case Action::Up: return "up";
        case Action::Down: return "down";
        case Action::Left: return "left";
        case Action::Right: return "right";
    }
    throw std::invalid_argument("unknown action");
}

Action action_from_string(const std::string& name) {
    if (name == "up") return Action::Up;
    if (name == "down") return Action::Down;
    if (name == "left") return Action::Left;
    if (name == "right") return Action::Right;
    throw std::invalid_argument("unknown action name: " + name);
}

int manhattan(State a, State b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

GridSpec::GridSpec(int width, int height, State start, State goal,
                   std::vector<State> obstacles, RewardField rewards)
    : width_(width),
      height_(height),
      start_(start),
      goal_(goal),
      obstacles_(std::move(obstacles)),
      rewards_(rewards) {
    if (width_ <= 0 || height_ <= 0)
        throw std::invalid_argument("grid dimensions must be positive");
    obstacle_mask_.assign(static_cast<size_t>(width_) * height_, 0);
    for (State o : obstacles_) {
        if (!in_bounds(o))
            throw std::invalid_argument("obstacle out of bounds");
        obstacle_mask_[static_cast<size_t>(o.row) * width_ + o.col] = 1;
    }
    if (!in_bounds(start_) || is_obstacle(start_))
        throw std::invalid_argument("start must be a non-obstacle cell within bounds");
    if (!in_bounds(goal_) || is_obstacle(goal_))
        throw std::invalid_argument("goal must be a non-obstacle cell within bounds");
    if (start_ == goal_)
        throw std::invalid_argument("start and goal must differ");
}

bool GridSpec::solvable() const {
    std::vector<uint8_t> seen(static_cast<size_t>(width_) * height_, 0);
    std::deque<State> queue{start_};
    seen[static_cast<size_t>(start_.row) * width_ + start_.col] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        const State neighbors[] = {{s.row - 1, s.col}, {s.row + 1, s.col},
                                   {s.row, s.col - 1}, {s.row, s.col + 1}};
        for (State n : neighbors) {
            if (!in_bounds(n) || is_obstacle(n)) continue;
            auto idx = static_cast<size_t>(n.row) * width_ + n.col;
            if (seen[idx]) continue;
            seen[idx] = 1;
            ++reached;
            queue.push_back(n);
        }
    }
    return reached == static_cast<size_t>(num_cells()) - obstacles_.size();
}

bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ &&
           a.start_ == b.start_ && a.goal_ == b.goal_ &&
           a.obstacles_ == b.obstacles_ &&
           a.rewards_.step == b.rewards_.step &&
           a.rewards_.wall == b.rewards_.wall &&
           a.rewards_.goal == b.rewards_.goal &&
           a.rewards_.mode == b.rewards_.mode;
}

nlohmann::json GridSpec::to_json() const {
    nlohmann::json obstacles = nlohmann::json::array();
    for (State o : obstacles_) obstacles.push_back({o.row, o.col});
    nlohmann::json rewards = {
        {"step", rewards_.step}, {"wall", rewards_.wall}, {"goal", rewards_.goal}};
    if (rewards_.mode == RewardMode::Graded) rewards["mode"] = "graded";
    return {{"width", width_},
            {"height", height_},
            {"start", {start_.row, start_.col}},
            {"goal", {goal_.row, goal_.col}},
            {"obstacles", obstacles},
            {"rewards", rewards}};
}

namespace {

State state_from_json(const nlohmann::json& j, const char* field) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string(field) + " must be a [row, col] pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

GridSpec GridSpec::from_json(const nlohmann::json& j) {
    if (!j.contains("width") || !j.contains("height"))
        throw std::invalid_argument("grid requires width and height");
    if (!j.contains("start") || !j.contains("goal"))
        throw std::invalid_argument("grid requires start and goal");

    std::vector<State> obstacles;
    if (j.contains("obstacles"))
        for (const auto& o : j["obstacles"])
            obstacles.push_back(state_from_json(o, "obstacle"));

    RewardField rewards;
    if (j.contains("rewards")) {
        const auto& r = j["rewards"];
        rewards.step = r.value("step", rewards.step);
        rewards.wall = r.value("wall", rewards.wall);
        rewards.goal = r.value("goal", rewards.goal);
        std::string mode = r.value("mode", "fixed");
        if (mode == "graded") {
            rewards.mode = RewardMode::Graded;
        } else if (mode != "fixed") {
            throw std::invalid_argument("rewards.mode must be \"fixed\" or \"graded\"");
        }
    }

    GridSpec spec(j["width"].get<int>(), j["height"].get<int>(),
                  state_from_json(j["start"], "start"),
                  state_from_json(j["goal"], "goal"), std::move(obstacles), rewards);
    if (!spec.solvable())
        throw std::invalid_argument("grid is not solvable: unreachable cells from start");
    return spec;
}

Transition step(const GridSpec& spec, State s, Action a) {
    if (!spec.in_bounds(s))
        throw std::invalid_argument("step: state out of bounds");
    if (spec.is_obstacle(s))
        throw std::invalid_argument("step: state is an obstacle");
    if (s == spec.goal())
        throw std::invalid_argument("step: goal state has no outgoing transitions");

    State next = s;
    switch (a) {
        case Action::Up: next.row -= 1; break;
        case Action::Down: next.row += 1; break;
        case Action::Left: next.col -= 1; break;
        case Action::Right: next.col += 1; break;
    }
    const bool clamped = !spec.in_bounds(next) || spec.is_obstacle(next);
    if (clamped) next = s;

    const RewardField& rf = spec.rewards();
    double r;
    bool terminal = next == spec.goal();
    if (terminal) {
        r = rf.goal;
    } else if (clamped) {
        r = rf.wall;
    } else if (rf.mode == RewardMode::Graded) {
        r = manhattan(next, spec.goal()) < manhattan(s, spec.goal()) ? 1.0 : -1.0;
    } else {
        r = rf.step;
    }
    return {s, a, r, next, terminal};
}

std::vector<State> enumerate_states(const GridSpec& spec) {
    std::vector<State> states;
    states.reserve(static_cast<size_t>(spec.num_cells()) - spec.obstacles().size());
    for (int row = 0; row < spec.height(); ++row)
        for (int col = 0; col < spec.width(); ++col)
            if (!spec.is_obstacle({row, col})) states.push_back({row, col});
    return states;
}

}  // namespace relq
