#include "bqlab/queue.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bqlab {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

bool QueueLengthResult::truncation_suspect(double from_x, double to_x) const {
  const Grid& grid = q.grid();
  std::size_t lo = grid.index_of(from_x);
  std::size_t hi = grid.index_of(to_x);
  for (std::size_t j = lo; j <= hi; ++j) {
    if (boundary_argmax_at(j)) return true;
  }
  return false;
}

QueueLengthResult queue_length(const SampledPath& a, const SampledPath& s, double window_start) {
  const Grid& grid = a.grid();
  if (grid != s.grid()) {
    throw std::invalid_argument("queue_length: arrival and service grids differ");
  }
  const std::size_t w = grid.index_of(window_start);
  const std::size_t m = grid.size();

  // a(z,x) - s(z,x) = u(x) - u(z) with u = a - s, so q(x) = u(x) - min u on
  // [window_start, x]; the rightmost minimizer is the rightmost argmax.
  std::vector<double> values(m, kNaN);
  std::vector<std::uint32_t> argmax(m, 0);
  double running_min = a.at_index(w) - s.at_index(w);
  std::uint32_t running_arg = static_cast<std::uint32_t>(w);
  for (std::size_t j = w; j < m; ++j) {
    const double u = a.at_index(j) - s.at_index(j);
    if (u <= running_min) {
      running_min = u;
      running_arg = static_cast<std::uint32_t>(j);
    }
    values[j] = u - running_min;
    argmax[j] = running_arg;
  }
  return QueueLengthResult{SampledPath(grid, std::move(values)), std::move(argmax), w};
}

SampledPath departure(const SampledPath& a, const SampledPath& q) {
  const Grid& grid = a.grid();
  if (grid != q.grid()) {
    throw std::invalid_argument("departure: arrival and queue grids differ");
  }
  const std::size_t j0 = grid.zero_index();
  if (std::isnan(q.at_index(j0))) {
    throw std::invalid_argument("departure: queue undefined at the origin (window starts right of 0)");
  }
  const double a0 = a.at_index(j0);
  const double q0 = q.at_index(j0);
  std::vector<double> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    values[j] = (a.at_index(j) - a0) - (q.at_index(j) - q0);
  }
  return SampledPath(grid, std::move(values));
}

bool TandemState::truncation_suspect(double from_x, double to_x) const {
  for (const TandemNode& node : nodes) {
    if (node.queue.truncation_suspect(from_x, to_x)) return true;
  }
  return false;
}

TandemState run_tandem(const SampledPath& a, const Environment& env, double mu, int levels,
                       double window_start) {
  if (a.grid() != env.grid) {
    throw std::invalid_argument("run_tandem: arrival grid differs from environment grid");
  }
  if (levels > env.levels()) {
    throw std::invalid_argument("run_tandem: environment has too few lines");
  }
  const Grid& grid = env.grid;
  TandemState state{a, mu, window_start, {}};
  state.nodes.reserve(static_cast<std::size_t>(levels));
  const SampledPath* feed = &a;
  for (int k = 1; k <= levels; ++k) {
    const SampledPath& line = env.line(k);
    std::vector<double> svals(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
      svals[j] = mu * grid.point(j) - line.at_index(j);
    }
    SampledPath service(grid, std::move(svals));
    QueueLengthResult ql = queue_length(*feed, service, window_start);
    SampledPath d = departure(*feed, ql.q);
    state.nodes.push_back(TandemNode{std::move(ql), std::move(d)});
    feed = &state.nodes.back().departure;
  }
  return state;
}

std::vector<double> iterated_empty_times(const TandemState& state, double x, int level,
                                         double zero_tol) {
  if (level < 1 || level > state.levels()) {
    throw std::invalid_argument("iterated_empty_times: level out of range");
  }
  const Grid& grid = state.arrival.grid();
  const std::size_t w = grid.index_of(state.window_start);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(level));
  std::size_t cursor = grid.index_of(x);
  for (int k = level; k >= 1; --k) {
    const SampledPath& q = state.queue(k);
    std::size_t j = cursor;
    bool found = false;
    for (;; --j) {
      if (std::abs(q.at_index(j)) <= zero_tol) {
        found = true;
        break;
      }
      if (j == w) break;
    }
    if (!found || j == w) {
      throw std::runtime_error("iterated_empty_times: no empty time inside window (truncated)");
    }
    cursor = j;
    times.push_back(grid.point(j));
  }
  return times;
}

}  // namespace bqlab
