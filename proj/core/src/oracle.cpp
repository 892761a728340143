#include "relq/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace relq {

QTable value_iteration(const GridSpec& spec, double gamma, double tol) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must lie in [0, 1)");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    const std::vector<State> states = enumerate_states(spec);
    QTable current(spec);
    double residual;
    do {
        QTable previous = current;
        residual = 0.0;
        for (State s : states) {
            if (s == spec.goal()) continue;
            for (int ai = 0; ai < kNumActions; ++ai) {
                auto a = static_cast<Action>(ai);
                Transition t = step(spec, s, a);
                double bootstrap = t.terminal ? 0.0 : previous.max_q(t.s_next);
                double target = t.r + gamma * bootstrap;
                double change = target - current.value(s, a);
                current.apply_delta(s, a, change);
                residual = std::max(residual, std::abs(change));
            }
        }
    } while (residual >= tol);
    return current;
}

double sup_norm_distance(const QTable& a, const QTable& b) {
    if (!(a.spec() == b.spec()))
        throw std::invalid_argument("sup_norm_distance: tables bound to different specs");
    double dist = 0.0;
    for (State s : enumerate_states(a.spec()))
        for (int ai = 0; ai < kNumActions; ++ai) {
            auto act = static_cast<Action>(ai);
            dist = std::max(dist, std::abs(a.value(s, act) - b.value(s, act)));
        }
    return dist;
}

}  // namespace relq
