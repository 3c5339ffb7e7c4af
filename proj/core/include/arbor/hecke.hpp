#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arbor/parabolic.hpp"

namespace arbor {

/// The orbitals of `G_n` on pairs of level-`n` vertices, indexed so that
/// orbital 0 is the diagonal. Equivalently, the 0/1 basis of the centralizer
/// algebra of the permutation action on `G_n / P_n`.
class OrbitalSet {
 public:
  OrbitalSet(int level, std::size_t points, std::size_t base, std::vector<std::uint32_t> classes,
             std::size_t rank);

  int level() const noexcept { return level_; }
  std::size_t points() const noexcept { return points_; }
  std::size_t base() const noexcept { return base_; }
  std::size_t rank() const noexcept { return rank_; }
  std::uint32_t orbital(std::size_t x, std::size_t y) const { return classes_[x * points_ + y]; }

  /// Row sum of each orbital matrix (the valency).
  const std::vector<std::size_t>& valencies() const noexcept { return valencies_; }
  /// Index of the transposed orbital.
  const std::vector<std::size_t>& transposes() const noexcept { return transposes_; }
  /// Dense 0/1 matrix of one orbital, row major.
  std::vector<int> matrix(std::size_t k) const;

 private:
  int level_;
  std::size_t points_;
  std::size_t base_;
  std::vector<std::uint32_t> classes_;
  std::size_t rank_;
  std::vector<std::size_t> valencies_;
  std::vector<std::size_t> transposes_;
};

/// Orbitals of `G_n` with base point the ray prefix; throws `NotTransitive`.
OrbitalSet orbitals(Quotients& q, const RaySpec& ray, int n);

/// Exact check that all orbital matrices commute pairwise.
bool check_gelfand(const OrbitalSet& o);

struct DecompositionDegrees {
  std::size_t rank = 0;
  bool commutative = false;
  std::vector<std::size_t> degrees;
  std::size_t degree_sum = 0;
  /// `{1} + (d-1) copies of d^i` for `i < n`.
  std::vector<std::size_t> predicted;
  bool matches_prediction = false;
  /// Degrees as literally stated for the ternary groups: three of degree 1
  /// and two of degree `2^i`; equals `predicted` on binary trees.
  std::vector<std::size_t> literal;
  bool matches_literal = false;
  /// `tr H` and `tr H^2` agree with the eigenvalue clusters to 1e-6 relative.
  bool trace_check = false;
  double smallest_gap = 0;
};

/// Degrees of the irreducible constituents of the permutation module,
/// read off as eigenvalue multiplicities of a random Hermitian element of
/// the centralizer algebra. Throws `ClusterAmbiguous` when two eigenvalue
/// clusters are closer than ten times the tolerance.
DecompositionDegrees decomposition_degrees(const OrbitalSet& o, int degree, unsigned seed = 20240611,
                                           double tolerance = 1e-8);

}  // namespace arbor
