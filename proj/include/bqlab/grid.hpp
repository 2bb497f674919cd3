#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bqlab {

// Uniform grid z_j = (i_min + j) * h, j = 0..count-1. The origin is required
// to be a grid point: anchored paths (Brownian lines, profiles, departures)
// are pinned to the value 0 there, and suprema over the continuum become
// maxima over grid points.
class Grid {
 public:
  // z_min must be an integer multiple of h (snapped within 1e-9 relative).
  Grid(double z_min, double h, std::size_t count);

  // Smallest grid with step h containing [z_lo, z_hi] and the origin.
  static Grid cover(double z_lo, double z_hi, double h);

  double step() const { return h_; }
  std::size_t size() const { return count_; }
  double point(std::size_t j) const {
    return static_cast<double>(i_min_ + static_cast<long long>(j)) * h_;
  }
  double min() const { return point(0); }
  double max() const { return point(count_ - 1); }
  std::size_t zero_index() const { return static_cast<std::size_t>(-i_min_); }

  // Index of a grid coordinate; throws std::out_of_range if x is not a grid
  // point (within 1e-6 * h) or lies outside the grid.
  std::size_t index_of(double x) const;
  bool contains(double x) const;

  bool operator==(const Grid& other) const {
    return i_min_ == other.i_min_ && count_ == other.count_ && h_ == other.h_;
  }
  bool operator!=(const Grid& other) const { return !(*this == other); }

 private:
  double h_;
  long long i_min_;
  std::size_t count_;
};

// A real path sampled on a grid. Increments f(x,y) := f(y) - f(x) are the
// quantity every operator consumes; anchored paths have value 0 at the
// origin. Values left of a window start may be NaN (see queue_length).
class SampledPath {
 public:
  SampledPath(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

  double at_index(std::size_t j) const { return values_[j]; }
  double at(double x) const { return values_[grid_.index_of(x)]; }

  // f(x,y) = f(y) - f(x); throws on off-grid coordinates.
  double increment(double x, double y) const {
    return values_[grid_.index_of(y)] - values_[grid_.index_of(x)];
  }

 private:
  Grid grid_;
  std::vector<double> values_;
};

inline double increment(const SampledPath& path, double x, double y) {
  return path.increment(x, y);
}

}  // namespace bqlab
