#include "relq/qtable.hpp"

#include <cstdio>
#include <stdexcept>

namespace relq {

QTable::QTable(const GridSpec& spec)
    : spec_(spec),
      values_(static_cast<size_t>(spec.num_cells()) * kNumActions, 0.0) {}

size_t QTable::index(State s, Action a) const {
    if (!spec_.in_bounds(s) || spec_.is_obstacle(s))
        throw std::invalid_argument("qtable: state not indexed");
    return (static_cast<size_t>(s.row) * spec_.width() + s.col) * kNumActions +
           static_cast<size_t>(a);
}

double QTable::value(State s, Action a) const { return values_[index(s, a)]; }

double QTable::max_q(State s) const {
    size_t base = index(s, Action::Up);
    double best = values_[base];
    for (int a = 1; a < kNumActions; ++a)
        if (values_[base + a] > best) best = values_[base + a];
    return best;
}

Action QTable::argmax_action(State s) const {
    size_t base = index(s, Action::Up);
    int best = 0;
    for (int a = 1; a < kNumActions; ++a)
        if (values_[base + a] > values_[base + best]) best = a;
    return static_cast<Action>(best);
}

void QTable::apply_delta(State s, Action a, double delta) {
    if (s == spec_.goal())
        throw std::logic_error("qtable: goal row is frozen at zero");
    values_[index(s, a)] += delta;
}

double QTable::sum() const {
    double total = 0.0;
    for (State s : enumerate_states(spec_))
        for (int a = 0; a < kNumActions; ++a)
            total += value(s, static_cast<Action>(a));
    return total;
}

void QTable::write_csv(std::ostream& out) const {
    out << "row,col,up,down,left,right\n";
    char buf[32];
    for (State s : enumerate_states(spec_)) {
        out << s.row << ',' << s.col;
        for (int a = 0; a < kNumActions; ++a) {
            std::snprintf(buf, sizeof buf, "%.6f", value(s, static_cast<Action>(a)));
            out << ',' << buf;
        }
        out << '\n';
    }
}

Action select_action(const QTable& table, State s, double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    if (rng.next_unit() < epsilon)
        return static_cast<Action>(rng.next_below(kNumActions));
    return table.argmax_action(s);
}

}  // namespace relq
