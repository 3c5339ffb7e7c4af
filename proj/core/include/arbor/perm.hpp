#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arbor/automaton.hpp"

namespace arbor {

/// A permutation of `{0..degree-1}` stored as an image array.
class Perm {
 public:
  Perm() = default;
  /// The identity of the given degree.
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<std::uint16_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return images_[i]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  /// Order of the permutation as an element of the symmetric group.
  BigInt order() const;

  /// Composition `p * q` maps `x` to `p(q(x))`.
  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::uint16_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// The image of a self-similar element in `G_n`, the action on level `n`.
using LevelPermutation = Perm;

/// Largest number of leaves a level permutation may act on.
inline constexpr std::size_t max_level_points = 65'535;

std::size_t level_size(int degree, int level);

/// Caches per-letter level permutations of one group.
class LevelImages {
 public:
  explicit LevelImages(const SelfSimilarGroup& group) : group_(group) {}

  const SelfSimilarGroup& group() const noexcept { return group_; }
  const Perm& letter(Letter l, int level);
  Perm of(const Word& w, int level);
  Perm of(const LiftedElement& g, int level);

 private:
  const SelfSimilarGroup& group_;
  std::vector<std::vector<Perm>> cache_;
};

LevelPermutation level_permutation(const SelfSimilarGroup& group, const Word& w, int level);

/// Places `p`, a permutation of the level below `prefix`, inside the subtree
/// at `prefix` on a tree of the given level; other leaves are fixed.
Perm lift(const Perm& p, const Vertex& prefix, int degree, int level);

}  // namespace arbor
