#pragma once

#include "relq/gridworld.hpp"
#include "relq/qtable.hpp"

namespace relq {

/// Exact Q* by synchronous Bellman optimality sweeps:
/// Q(s,a) <- r(s,a) + gamma * max_a' Q(s',a') for every non-goal (s,a),
/// iterated until the sup-norm change drops below tol.
QTable value_iteration(const GridSpec& spec, double gamma, double tol = 1e-9);

/// max over all indexed (s,a) of |a - b|; the tables must share a spec shape.
double sup_norm_distance(const QTable& a, const QTable& b);

}  // namespace relq
