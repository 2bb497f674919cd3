#pragma once

#include <cstdint>
#include <vector>

#include "bqlab/grid.hpp"

namespace bqlab {

// Fills out[j] = B(z_j) - B(z_{j-1}) for j = 1..m-1 (out[0] is set to 0) with
// i.i.d. Normal(0, h) increments of a two-sided Brownian motion anchored at
// the origin. Cells right of 0 come from stream mix_seed(seed, 1), cells left
// of 0 from stream mix_seed(seed, 2), drawn outward from the origin, so the
// two sides are independent.
void fill_bm_increments(const Grid& grid, std::uint64_t seed, std::vector<double>& out);

// Anchored prefix sums: path value 0 at the origin, increments as given.
SampledPath path_from_increments(const Grid& grid, const std::vector<double>& inc);

// Two-sided Brownian motion sampled on the grid, B(0) = 0.
SampledPath sample_bm(const Grid& grid, std::uint64_t seed);

// The space-time randomness: independent two-sided Brownian lines B^(1..n)
// on a common grid. Line k's stream seed is mix_seed(master_seed, k), so a
// line can be regenerated (or streamed as raw increments) without
// materializing the rest.
struct Environment {
  Grid grid;
  std::uint64_t master_seed;
  std::vector<SampledPath> lines;  // lines[k-1] holds B^(k)

  static Environment generate(const Grid& grid, std::uint64_t master_seed, int levels);

  const SampledPath& line(int k) const { return lines[static_cast<std::size_t>(k - 1)]; }
  int levels() const { return static_cast<int>(lines.size()); }
};

// Streams line k of an environment without materializing it.
void fill_line_increments(const Grid& grid, std::uint64_t master_seed, int line_index,
                          std::vector<double>& out);

enum class ProfileKind {
  linear,               // nu(x) = mu x
  flat_arrival,         // nu(x) = mu x  (arrival a == 0)
  brownian_with_drift,  // nu(x) = mu x + B(x)
  sinusoid_arrival,     // nu(x) = mu x - A (sin(w x + phi) - sin(phi)), phi ~ U[0,2pi)
  pinned_origin,        // nu(0) = 0, -inf elsewhere: point-to-point passage times
};

const char* profile_kind_name(ProfileKind kind);
ProfileKind profile_kind_from_name(const std::string& name);

// Initial condition nu with nu(0) = 0 and declared drift mu. The queueing
// dual is the arrival a(x) = mu x - nu(x).
struct Profile {
  SampledPath path;
  double mu;
  ProfileKind kind;

  bool pinned() const { return kind == ProfileKind::pinned_origin; }
};

Profile make_profile(ProfileKind kind, double mu, const Grid& grid, std::uint64_t seed,
                     double amplitude = 0.5, double omega = 1.0);

// Drift-mu Brownian profile mu x + B(x) built on a caller-supplied B, so that
// several drifts can share one Brownian path (the coupled-drift families).
Profile drifted_profile(double mu, const SampledPath& bm);

Profile pinned_origin_profile(const Grid& grid);

// a(x) = mu x - nu(x); anchored at 0.
SampledPath arrival_of(const Profile& profile);

}  // namespace bqlab
