#include "bqlab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bqlab {

Grid::Grid(double z_min, double h, std::size_t count) : h_(h), count_(count) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("Grid: step h must be positive");
  }
  if (count < 2) {
    throw std::invalid_argument("Grid: need at least two points");
  }
  const double idx = z_min / h;
  i_min_ = static_cast<long long>(std::llround(idx));
  const double snapped = static_cast<double>(i_min_) * h;
  const double tol = 1e-9 * std::max(1.0, std::abs(z_min));
  if (std::abs(snapped - z_min) > tol) {
    throw std::invalid_argument(
        "Grid: z_min must be an integer multiple of h (origin must be a grid point)");
  }
  const long long i_max = i_min_ + static_cast<long long>(count) - 1;
  if (i_min_ > 0 || i_max < 0) {
    throw std::invalid_argument("Grid: the origin must lie on the grid");
  }
}

Grid Grid::cover(double z_lo, double z_hi, double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("Grid: step h must be positive");
  }
  if (!(z_lo < z_hi)) {
    throw std::invalid_argument("Grid: empty cover range");
  }
  long long i_lo = static_cast<long long>(std::floor(z_lo / h + 1e-9));
  long long i_hi = static_cast<long long>(std::ceil(z_hi / h - 1e-9));
  if (i_lo > 0) i_lo = 0;
  if (i_hi < 0) i_hi = 0;
  if (i_hi == i_lo) i_hi = i_lo + 1;
  const std::size_t count = static_cast<std::size_t>(i_hi - i_lo) + 1;
  return Grid(static_cast<double>(i_lo) * h, h, count);
}

std::size_t Grid::index_of(double x) const {
  const double t = x / h_ - static_cast<double>(i_min_);
  const long long j = static_cast<long long>(std::llround(t));
  if (j < 0 || j >= static_cast<long long>(count_)) {
    throw std::out_of_range("Grid: coordinate " + std::to_string(x) + " outside grid");
  }
  if (std::abs(t - static_cast<double>(j)) > 1e-6) {
    throw std::out_of_range("Grid: coordinate " + std::to_string(x) + " is not a grid point");
  }
  return static_cast<std::size_t>(j);
}

bool Grid::contains(double x) const {
  const double t = x / h_ - static_cast<double>(i_min_);
  const long long j = static_cast<long long>(std::llround(t));
  if (j < 0 || j >= static_cast<long long>(count_)) return false;
  return std::abs(t - static_cast<double>(j)) <= 1e-6;
}

SampledPath::SampledPath(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("SampledPath: value count does not match grid");
  }
}

}  // namespace bqlab
