#include "bqlab/lpp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bqlab {

void lpp_advance_row(LppRow& row, std::span<const double> dB) {
  std::vector<double>& F = row.value;
  std::vector<double>& E = row.exit;
  // j = 0 can only be reached by jumping up immediately: row unchanged there.
  for (std::size_t j = 1; j < F.size(); ++j) {
    const double through = F[j - 1] + dB[j];
    const double up = F[j];
    if (through > up) {
      F[j] = through;
      E[j] = E[j - 1];
    } else if (through == up) {
      E[j] = std::max(E[j - 1], E[j]);
    }
    // through < up: stay on the value (and exit) coming from the level below.
  }
  row.level += 1;
}

namespace {

LppRow profile_row(const Profile& profile) {
  const Grid& grid = profile.path.grid();
  LppRow row;
  row.level = 0;
  row.value.assign(profile.path.values().begin(), profile.path.values().end());
  row.exit.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    row.exit[j] = grid.point(j);
  }
  return row;
}

void line_increments(const SampledPath& line, std::vector<double>& dB) {
  const std::size_t m = line.grid().size();
  dB.resize(m);
  dB[0] = 0.0;
  for (std::size_t j = 1; j < m; ++j) {
    dB[j] = line.at_index(j) - line.at_index(j - 1);
  }
}

}  // namespace

LppEvolver::LppEvolver(const Profile& profile)
    : grid_(profile.path.grid()), pinned_(profile.pinned()), row_(profile_row(profile)) {}

void LppEvolver::advance(std::span<const double> dB) {
  lpp_advance_row(row_, dB);
}

bool LppEvolver::boundary_flag_in(double x_lo, double x_hi) const {
  if (pinned_) return false;
  const double z_min = grid_.min();
  const std::size_t lo = grid_.index_of(x_lo);
  const std::size_t hi = grid_.index_of(x_hi);
  for (std::size_t j = lo; j <= hi; ++j) {
    if (row_.exit[j] == z_min) return true;
  }
  return false;
}

LppField::LppField(const Profile& profile, const Environment& env, int levels)
    : grid_(profile.path.grid()), profile_(profile), levels_(levels) {
  if (grid_ != env.grid) {
    throw std::invalid_argument("LppField: profile and environment grids differ");
  }
  if (levels < 1 || levels > env.levels()) {
    throw std::invalid_argument("LppField: level count out of range");
  }
  rows_.reserve(static_cast<std::size_t>(levels) + 1);
  rows_.push_back(profile_row(profile));
  std::vector<double> dB;
  LppRow current = rows_.front();
  for (int k = 1; k <= levels; ++k) {
    line_increments(env.line(k), dB);
    lpp_advance_row(current, dB);
    rows_.push_back(current);
  }
}

double LppField::value(double x, int k) const {
  return rows_[static_cast<std::size_t>(k)].value[grid_.index_of(x)];
}

double LppField::value_at_index(std::size_t j, int k) const {
  return rows_[static_cast<std::size_t>(k)].value[j];
}

double LppField::exit_point(double x, int k) const {
  return rows_[static_cast<std::size_t>(k)].exit[grid_.index_of(x)];
}

double LppField::exit_at_index(std::size_t j, int k) const {
  return rows_[static_cast<std::size_t>(k)].exit[j];
}

double LppField::m_value(double x, int k) const {
  return value(x, k) - rows_[static_cast<std::size_t>(k)].value[grid_.zero_index()];
}

double LppField::m_increment(double x, double y, int k) const {
  return value(y, k) - value(x, k);
}

bool LppField::boundary_flag(double x, int k) const {
  if (profile_.pinned()) return false;
  return exit_point(x, k) == grid_.min();
}

bool LppField::any_boundary_flag(int k, double x_lo, double x_hi) const {
  if (profile_.pinned()) return false;
  const std::size_t lo = grid_.index_of(x_lo);
  const std::size_t hi = grid_.index_of(x_hi);
  const double z_min = grid_.min();
  const LppRow& row = rows_[static_cast<std::size_t>(k)];
  for (std::size_t j = lo; j <= hi; ++j) {
    if (row.exit[j] == z_min) return true;
  }
  return false;
}

double lpp_point(const Environment& env, double z, int k, double x, int l) {
  const Grid& grid = env.grid;
  const std::size_t iz = grid.index_of(z);
  const std::size_t ix = grid.index_of(x);
  if (iz > ix || k > l) {
    throw std::domain_error("lpp_point: endpoints must be coordinatewise ordered");
  }
  if (l > env.levels() || k < 1) {
    throw std::domain_error("lpp_point: level out of range");
  }
  const std::size_t width = ix - iz + 1;
  // G[t] = best passage from (z, k) to (z_{iz+t}, current line).
  std::vector<double> G(width);
  G[0] = 0.0;
  const SampledPath& first = env.line(k);
  for (std::size_t t = 1; t < width; ++t) {
    G[t] = G[t - 1] + (first.at_index(iz + t) - first.at_index(iz + t - 1));
  }
  for (int i = k + 1; i <= l; ++i) {
    const SampledPath& line = env.line(i);
    // Jump up at z itself: G[0] carries over.
    for (std::size_t t = 1; t < width; ++t) {
      const double dB = line.at_index(iz + t) - line.at_index(iz + t - 1);
      G[t] = std::max(G[t - 1] + dB, G[t]);
    }
  }
  return G[width - 1];
}

namespace {

std::size_t count_nondecreasing_sequences(std::size_t points, int breaks,
                                          std::size_t cap) {
  // C(points + breaks - 1, breaks), saturating at cap.
  if (breaks == 0) return 1;
  std::size_t result = 1;
  for (int i = 0; i < breaks; ++i) {
    const std::size_t num = points + static_cast<std::size_t>(breaks) - 1 - static_cast<std::size_t>(i);
    if (result > cap * (static_cast<std::size_t>(i) + 1) / num + 1) {
      return cap + 1;  // overflow-safe saturation
    }
    result = result * num / (static_cast<std::size_t>(i) + 1);
    if (result > cap) return cap + 1;
  }
  return result;
}

void brute_rec(const Environment& env, int line, int last_line, std::size_t from,
               std::size_t ix, double acc, double& best) {
  if (line == last_line) {
    const SampledPath& p = env.line(line);
    const double total = acc + (p.at_index(ix) - p.at_index(from));
    best = std::max(best, total);
    return;
  }
  const SampledPath& p = env.line(line);
  for (std::size_t b = from; b <= ix; ++b) {
    brute_rec(env, line + 1, last_line, b, ix,
              acc + (p.at_index(b) - p.at_index(from)), best);
  }
}

}  // namespace

double brute_lpp(const Environment& env, double z, int k, double x, int l,
                 std::size_t max_sequences) {
  const Grid& grid = env.grid;
  const std::size_t iz = grid.index_of(z);
  const std::size_t ix = grid.index_of(x);
  if (iz > ix || k > l) {
    throw std::domain_error("brute_lpp: endpoints must be coordinatewise ordered");
  }
  const std::size_t points = ix - iz + 1;
  const int breaks = l - k;
  if (count_nondecreasing_sequences(points, breaks, max_sequences) > max_sequences) {
    throw std::length_error("brute_lpp: instance too large to enumerate");
  }
  double best = -std::numeric_limits<double>::infinity();
  brute_rec(env, k, l, iz, ix, 0.0, best);
  return best;
}

CoupledFields couple(const Profile& p1, const Profile& p2, const Environment& env, int levels) {
  if (p1.path.grid() != env.grid || p2.path.grid() != env.grid) {
    throw std::invalid_argument("couple: profiles must live on the environment grid");
  }
  return CoupledFields{LppField(p1, env, levels), LppField(p2, env, levels)};
}

double markov_consistency(const LppField& field, const Environment& env, int k,
                          std::span<const double> probes) {
  const int n = field.levels();
  if (k < 1 || k >= n) {
    throw std::invalid_argument("markov_consistency: need 1 <= k < levels");
  }
  const Grid& grid = field.grid();
  const std::size_t j0 = grid.zero_index();
  const double base = field.value_at_index(j0, k);

  double worst = 0.0;
  std::vector<std::vector<double>> H;  // H[i-k-1][j] = L((z_j, i), (x, n))
  for (double x : probes) {
    const std::size_t ix = grid.index_of(x);
    const std::size_t width = ix + 1;
    H.assign(static_cast<std::size_t>(n - k), std::vector<double>(width));
    // Top line n: suffix increments to x.
    {
      std::vector<double>& row = H.back();
      const SampledPath& line = env.line(n);
      row[ix] = 0.0;
      for (std::size_t j = ix; j >= 1; --j) {
        row[j - 1] = row[j] + (line.at_index(j) - line.at_index(j - 1));
      }
    }
    for (int i = n - 1; i >= k + 1; --i) {
      std::vector<double>& row = H[static_cast<std::size_t>(i - k - 1)];
      const std::vector<double>& above = H[static_cast<std::size_t>(i - k)];
      const SampledPath& line = env.line(i);
      row[ix] = above[ix];
      for (std::size_t j = ix; j >= 1; --j) {
        const double dB = line.at_index(j) - line.at_index(j - 1);
        row[j - 1] = std::max(row[j] + dB, above[j - 1]);
        // row[j] + dB is the value of continuing along line i from z_{j-1}.
      }
    }
    const std::vector<double>& bridge = H.front();
    double recomputed = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < width; ++j) {
      const double mk = field.value_at_index(j, k) - base;
      recomputed = std::max(recomputed, mk + bridge[j]);
    }
    const double direct = field.value_at_index(ix, n) - base;
    worst = std::max(worst, std::abs(recomputed - direct));
  }
  return worst;
}

void dump_field_csv(const LppField& field, std::ostream& os) {
  os << "level,index,z,value,exit,boundary\n";
  const Grid& grid = field.grid();
  for (int k = 0; k <= field.levels(); ++k) {
    const LppRow& row = field.row(k);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const bool flagged = !field.profile().pinned() && row.exit[j] == grid.min();
      os << k << ',' << j << ',' << grid.point(j) << ',' << row.value[j] << ','
         << row.exit[j] << ',' << (flagged ? 1 : 0) << '\n';
    }
  }
}

}  // namespace bqlab
