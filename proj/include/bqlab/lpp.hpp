#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bqlab/sampling.hpp"

namespace bqlab {

// One level of the variational field: value[j] = L_nu(z_j, level) and
// exit[j] = rightmost grid z attaining L_nu(z_j, level) = nu(z) + L((z,1),
// (z_j, level)). Level 0 is the profile itself with exit[j] = z_j.
struct LppRow {
  int level = 0;
  std::vector<double> value;
  std::vector<double> exit;
};

// In-place transition level k-1 -> k against one line of the environment:
//   value[j] <- max(value[j-1] + dB[j], value_prev[j])
// Exits follow the optimal predecessor; on an exact tie both predecessors
// are optimal and the larger exit wins (the exit point is the supremum of
// the argmax set). dB[j] = B(z_j) - B(z_{j-1}), dB[0] unused.
void lpp_advance_row(LppRow& row, std::span<const double> dB);

// Streaming evolver: keeps only the current row. This is what the large
// replication experiments drive, one environment line at a time.
class LppEvolver {
 public:
  explicit LppEvolver(const Profile& profile);

  void advance(std::span<const double> dB);

  int level() const { return row_.level; }
  const Grid& grid() const { return grid_; }
  double value(double x) const { return row_.value[grid_.index_of(x)]; }
  double exit_point(double x) const { return row_.exit[grid_.index_of(x)]; }
  double m_increment(double x, double y) const {
    return value(y) - value(x);
  }
  // True if some cell in [x_lo, x_hi] at the current level has its rightmost
  // optimal entry on the left grid edge (the supremum may be truncated).
  bool boundary_flag_in(double x_lo, double x_hi) const;

 private:
  Grid grid_;
  bool pinned_;
  LppRow row_;
};

// Full table of the variational field L_nu(x,k), k = 0..levels (desk scale;
// the evolver above is the O(grid)-memory variant).
class LppField {
 public:
  LppField(const Profile& profile, const Environment& env, int levels);

  const Grid& grid() const { return grid_; }
  int levels() const { return levels_; }
  const Profile& profile() const { return profile_; }

  double value(double x, int k) const;
  double value_at_index(std::size_t j, int k) const;
  // Z_nu(x,k): the rightmost maximizer in the variational formula.
  double exit_point(double x, int k) const;
  double exit_at_index(std::size_t j, int k) const;
  // M^(k)(x) = L_nu(x,k) - L_nu(0,k).
  double m_value(double x, int k) const;
  // M^(k)(x,y) = M^(k)(y) - M^(k)(x).
  double m_increment(double x, double y, int k) const;
  // Exit pinned to the left grid edge: the supremum may be window-truncated.
  bool boundary_flag(double x, int k) const;
  bool any_boundary_flag(int k, double x_lo, double x_hi) const;

  const LppRow& row(int k) const { return rows_[static_cast<std::size_t>(k)]; }

 private:
  Grid grid_;
  Profile profile_;
  int levels_;
  std::vector<LppRow> rows_;
};

// Point-to-point last-passage time L((z,k),(x,l)): the best total increment
// over nondecreasing breakpoint sequences through lines k..l.
double lpp_point(const Environment& env, double z, int k, double x, int l);

// Exhaustive enumeration of all nondecreasing grid breakpoint sequences;
// refuses instances with more than max_sequences of them. Independent oracle
// for lpp_point.
double brute_lpp(const Environment& env, double z, int k, double x, int l,
                 std::size_t max_sequences = 1000000);

// Two fields evolved against the same realized environment.
struct CoupledFields {
  LppField first;
  LppField second;
};

CoupledFields couple(const Profile& p1, const Profile& p2, const Environment& env, int levels);

// Recomputes L_nu(x,n) - L_nu(0,k) as sup_z { M^(k)(z) + L((z,k+1),(x,n)) }
// over grid z <= x and returns the maximum absolute deviation from the
// field's own table at the probe points.
double markov_consistency(const LppField& field, const Environment& env, int k,
                          std::span<const double> probes);

// Debug dump of the field tables: one row per (level, grid index).
void dump_field_csv(const LppField& field, std::ostream& os);

}  // namespace bqlab
