#pragma once

#include <ostream>
#include <vector>

#include "relq/gridworld.hpp"
#include "relq/rng.hpp"

namespace relq {

/// Dense Q(s,a) table bound to one GridSpec. All entries start at zero; the
/// goal state's row stays zero for the lifetime of the table.
class QTable {
public:
    explicit QTable(const GridSpec& spec);

    const GridSpec& spec() const { return spec_; }

    double value(State s, Action a) const;

    /// max over the four actions of Q(s, a). Zero at the goal.
    double max_q(State s) const;

    /// Greedy action; ties break by action order Up < Down < Left < Right.
    Action argmax_action(State s) const;

    /// Adds delta to Q(s, a). The goal row is frozen at zero.
    void apply_delta(State s, Action a, double delta);

    /// Sum of all entries over indexed states.
    double sum() const;

    /// CSV: header row,col,up,down,left,right; one line per non-obstacle
    /// state in row-major order, 6 decimal places.
    void write_csv(std::ostream& out) const;

private:
    size_t index(State s, Action a) const;

    GridSpec spec_;
    std::vector<double> values_;
};

/// epsilon-greedy selection: consumes one uniform draw for the epsilon test
/// and, when exploring, one more for the action.
Action select_action(const QTable& table, State s, double epsilon, Rng& rng);

}  // namespace relq
