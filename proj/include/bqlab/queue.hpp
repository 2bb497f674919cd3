#pragma once

#include <cstdint>
#include <vector>

#include "bqlab/sampling.hpp"

namespace bqlab {

// q(x) = max over grid z in [window_start, x] of { a(z,x) - s(z,x) }.
//
// Values at grid points left of window_start are NaN (the window there is
// empty). argmax[j] records the rightmost maximizing z-index for each x =
// z_j; an argmax within one grid step of the window start means the true
// supremum over z <= x may have been truncated.
struct QueueLengthResult {
  SampledPath q;
  std::vector<std::uint32_t> argmax;
  std::size_t window_index;

  bool boundary_argmax_at(std::size_t j) const {
    return argmax[j] <= window_index + 1;
  }
  // True if any evaluation point in [from_x, to_x] has a boundary argmax.
  bool truncation_suspect(double from_x, double to_x) const;
};

QueueLengthResult queue_length(const SampledPath& a, const SampledPath& s, double window_start);

// d with d(0) = 0 and d(x,y) = a(x,y) - q(x,y).
SampledPath departure(const SampledPath& a, const SampledPath& q);

struct TandemNode {
  QueueLengthResult queue;
  SampledPath departure;
};

// n queues in tandem: node k serves with s^(k)(x) = mu x - B^(k)(x) and is
// fed by the departures of node k-1 (node 1 by the arrival process).
struct TandemState {
  SampledPath arrival;
  double mu;
  double window_start;
  std::vector<TandemNode> nodes;

  int levels() const { return static_cast<int>(nodes.size()); }
  const SampledPath& queue(int k) const { return nodes[static_cast<std::size_t>(k - 1)].queue.q; }
  const SampledPath& dep(int k) const { return nodes[static_cast<std::size_t>(k - 1)].departure; }
  bool truncation_suspect(double from_x, double to_x) const;
};

TandemState run_tandem(const SampledPath& a, const Environment& env, double mu, int levels,
                       double window_start);

// Iterated last-empty times: I_{n-1}(x,n) is the last grid time <= x with
// q^(n) = 0 (within zero_tol), I_{k-1} the last time <= I_k with q^(k) = 0.
// Returned in the order I_{n-1}, ..., I_0; the final entry is the
// queueing-side exit point. Throws std::runtime_error if a search hits the
// window start (truncation).
std::vector<double> iterated_empty_times(const TandemState& state, double x, int level,
                                         double zero_tol = 1e-9);

}  // namespace bqlab
