#include "bqlab/sampling.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bqlab/rng.hpp"

namespace bqlab {

void fill_bm_increments(const Grid& grid, std::uint64_t seed, std::vector<double>& out) {
  const std::size_t m = grid.size();
  const std::size_t j0 = grid.zero_index();
  const double sqrt_h = std::sqrt(grid.step());
  out.assign(m, 0.0);
  GaussianSampler right(mix_seed(seed, 1));
  for (std::size_t j = j0 + 1; j < m; ++j) {
    out[j] = sqrt_h * right.next();
  }
  GaussianSampler left(mix_seed(seed, 2));
  for (std::size_t j = j0; j >= 1; --j) {
    out[j] = sqrt_h * left.next();
  }
}

SampledPath path_from_increments(const Grid& grid, const std::vector<double>& inc) {
  const std::size_t m = grid.size();
  const std::size_t j0 = grid.zero_index();
  std::vector<double> values(m);
  values[j0] = 0.0;
  for (std::size_t j = j0 + 1; j < m; ++j) {
    values[j] = values[j - 1] + inc[j];
  }
  for (std::size_t j = j0; j >= 1; --j) {
    values[j - 1] = values[j] - inc[j];
  }
  return SampledPath(grid, std::move(values));
}

SampledPath sample_bm(const Grid& grid, std::uint64_t seed) {
  std::vector<double> inc;
  fill_bm_increments(grid, seed, inc);
  return path_from_increments(grid, inc);
}

Environment Environment::generate(const Grid& grid, std::uint64_t master_seed, int levels) {
  Environment env{grid, master_seed, {}};
  env.lines.reserve(static_cast<std::size_t>(levels));
  std::vector<double> inc;
  for (int k = 1; k <= levels; ++k) {
    fill_bm_increments(grid, mix_seed(master_seed, static_cast<std::uint64_t>(k)), inc);
    env.lines.push_back(path_from_increments(grid, inc));
  }
  return env;
}

void fill_line_increments(const Grid& grid, std::uint64_t master_seed, int line_index,
                          std::vector<double>& out) {
  fill_bm_increments(grid, mix_seed(master_seed, static_cast<std::uint64_t>(line_index)), out);
}

const char* profile_kind_name(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::linear: return "linear";
    case ProfileKind::flat_arrival: return "flat_arrival";
    case ProfileKind::brownian_with_drift: return "brownian_with_drift";
    case ProfileKind::sinusoid_arrival: return "sinusoid_arrival";
    case ProfileKind::pinned_origin: return "pinned_origin";
  }
  return "unknown";
}

ProfileKind profile_kind_from_name(const std::string& name) {
  if (name == "linear") return ProfileKind::linear;
  if (name == "flat_arrival") return ProfileKind::flat_arrival;
  if (name == "brownian_with_drift") return ProfileKind::brownian_with_drift;
  if (name == "sinusoid_arrival") return ProfileKind::sinusoid_arrival;
  if (name == "pinned_origin") return ProfileKind::pinned_origin;
  throw std::invalid_argument("unknown profile kind: " + name);
}

Profile make_profile(ProfileKind kind, double mu, const Grid& grid, std::uint64_t seed,
                     double amplitude, double omega) {
  if (kind == ProfileKind::pinned_origin) {
    return pinned_origin_profile(grid);
  }
  if (!(mu > 0.0)) {
    throw std::invalid_argument("make_profile: mu must be positive");
  }
  const std::size_t m = grid.size();
  std::vector<double> values(m);
  switch (kind) {
    case ProfileKind::linear:
    case ProfileKind::flat_arrival: {
      for (std::size_t j = 0; j < m; ++j) values[j] = mu * grid.point(j);
      break;
    }
    case ProfileKind::brownian_with_drift: {
      SampledPath bm = sample_bm(grid, seed);
      for (std::size_t j = 0; j < m; ++j) values[j] = mu * grid.point(j) + bm.at_index(j);
      break;
    }
    case ProfileKind::sinusoid_arrival: {
      // Random phase keeps the arrival increments stationary and ergodic;
      // subtracting sin(phi) anchors nu(0) = 0, so |nu(x) - mu x| <= 2A.
      SplitMix64 rng(mix_seed(seed, 3));
      const double phi = 2.0 * M_PI * rng.uniform01();
      const double s0 = std::sin(phi);
      for (std::size_t j = 0; j < m; ++j) {
        const double z = grid.point(j);
        values[j] = mu * z - amplitude * (std::sin(omega * z + phi) - s0);
      }
      break;
    }
    case ProfileKind::pinned_origin:
      break;  // handled above
  }
  return Profile{SampledPath(grid, std::move(values)), mu, kind};
}

Profile drifted_profile(double mu, const SampledPath& bm) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("drifted_profile: mu must be positive");
  }
  const Grid& grid = bm.grid();
  std::vector<double> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    values[j] = mu * grid.point(j) + bm.at_index(j);
  }
  return Profile{SampledPath(grid, std::move(values)), mu, ProfileKind::brownian_with_drift};
}

Profile pinned_origin_profile(const Grid& grid) {
  std::vector<double> values(grid.size(), -std::numeric_limits<double>::infinity());
  values[grid.zero_index()] = 0.0;
  return Profile{SampledPath(grid, std::move(values)), 1.0, ProfileKind::pinned_origin};
}

SampledPath arrival_of(const Profile& profile) {
  if (profile.pinned()) {
    throw std::invalid_argument("arrival_of: pinned profile has no queueing dual");
  }
  const Grid& grid = profile.path.grid();
  std::vector<double> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    values[j] = profile.mu * grid.point(j) - profile.path.at_index(j);
  }
  return SampledPath(grid, std::move(values));
}

}  // namespace bqlab
