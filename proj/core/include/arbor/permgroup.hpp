#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "arbor/bigint.hpp"
#include "arbor/perm.hpp"

namespace arbor {

/// The leaves of the tree truncated at `level`.
struct TreeShape {
  int degree = 2;
  int level = 0;

  std::size_t points() const { return level_size(degree, level); }
  friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

/// A vertex at `level >= 1` given by its big-endian index within the level.
struct TreeVertex {
  int level = 1;
  std::size_t index = 0;

  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

/// Vertices from level 1 to `last_level`, breadth first.
std::vector<TreeVertex> vertices_breadth_first(const TreeShape& shape, int last_level);
/// The ancestors of `v` below the root, then `v` itself.
std::vector<TreeVertex> path_to(const Vertex& v, int degree);

/// A permutation group on the leaves of a truncated tree, with a stabilizer
/// chain whose base points are tree vertices.
///
/// Base points are vertices rather than leaves: every basic orbit then lies
/// among the children of one vertex, so it has at most `degree` points. The
/// chain is built by deterministic Schreier-Sims; new base points are the
/// first vertex, breadth first, moved by the residue that needs them.
class PermGroup {
 public:
  explicit PermGroup(TreeShape shape, const std::vector<Perm>& generators = {},
                     const std::vector<TreeVertex>& base_prefix = {});

  const TreeShape& shape() const noexcept { return shape_; }
  /// The non-identity generators, in insertion order.
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<Perm>& strong_generators() const noexcept { return strong_; }
  std::vector<TreeVertex> base() const;
  std::vector<std::size_t> orbit_lengths() const;

  BigInt order() const;
  bool contains(const Perm& p) const;
  /// Adds `p` as a generator unless it is already a member; returns whether
  /// the group grew.
  bool extend(const Perm& p);

  /// Strong generators fixing the first `depth` base points; they generate
  /// the pointwise stabilizer of those points.
  std::vector<Perm> stabilizer_generators(std::size_t depth) const;

  /// Image of a tree vertex under `p`.
  TreeVertex image(const Perm& p, const TreeVertex& v) const;

 private:
  struct Level {
    TreeVertex point;
    std::vector<std::size_t> strong;
    std::vector<std::size_t> orbit;
    std::vector<int> position;
    std::vector<Perm> transversal;
    std::vector<Perm> transversal_inverse;
    std::vector<std::vector<bool>> checked;
  };

  Level make_level(const TreeVertex& point) const;
  std::size_t stride(int level) const;
  std::size_t first_moved_level(const Perm& p) const;
  TreeVertex first_moved_vertex(const Perm& p) const;
  /// Strips `h` through levels from `start`; returns the residue and the
  /// level where stripping stopped (`levels_.size()` if it went through).
  std::pair<Perm, std::size_t> strip(Perm h, std::size_t start) const;
  void add_strong(Perm s);
  void grow_orbit(Level& level, std::size_t strong_index);
  void complete();

  TreeShape shape_;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

}  // namespace arbor
