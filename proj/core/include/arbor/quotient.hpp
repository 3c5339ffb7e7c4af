#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "arbor/automaton.hpp"
#include "arbor/bigint.hpp"
#include "arbor/permgroup.hpp"
#include "arbor/subgroup_expr.hpp"

namespace arbor {

/// The congruence quotients `G_n` of one group, with a cache of evaluated
/// subgroup expressions.
class Quotients {
 public:
  explicit Quotients(SelfSimilarGroup& group) : group_(group), images_(group) {}

  SelfSimilarGroup& group() noexcept { return group_; }
  LevelImages& images() noexcept { return images_; }
  TreeShape shape(int level) const { return {group_.degree(), level}; }

  Perm image(const Word& w, int level) { return images_.of(w, level); }
  std::vector<Perm> generator_images(int level);
  const PermGroup& ambient(int level);

  const PermGroup& eval(const SubgroupExpr& e, int level);

  /// Set when a `pow` evaluation was too large for the enumeration check.
  bool power_closure_unchecked() const noexcept { return power_unchecked_; }

 private:
  PermGroup compute(const SubgroupExpr& e, int level);

  SelfSimilarGroup& group_;
  LevelImages images_;
  std::map<int, std::unique_ptr<PermGroup>> ambient_;
  std::map<std::pair<int, std::string>, std::unique_ptr<PermGroup>> cache_;
  bool power_unchecked_ = false;
};

/// Normal closure of `seeds` under conjugation by `conjugators`.
PermGroup normal_closure(const TreeShape& shape, const std::vector<Perm>& seeds,
                         const std::vector<Perm>& conjugators);
/// `[A, B]`: the normal closure in `<A, B>` of the generator commutators.
PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b);
/// Pointwise stabilizer of `points` inside `g`.
PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<TreeVertex>& points);
/// The subgroup generated by `k`-th powers of elements of `g`. `exact` tells
/// whether membership of every `k`-th power was confirmed by enumeration.
PermGroup power_subgroup(const PermGroup& g, int k, bool* exact = nullptr);
/// All elements, for groups of order at most `limit`.
std::vector<Perm> enumerate_elements(const PermGroup& g, std::size_t limit);

/// `|sup| / |sub|`; throws `NotASubgroup` unless every generator of `sub`
/// lies in `sup`.
BigInt index(const PermGroup& sub, const PermGroup& sup);
bool is_subgroup(const PermGroup& sub, const PermGroup& sup);

bool verify_containment(Quotients& q, const SubgroupExpr& a, const SubgroupExpr& b, int level);

enum class SeriesKind { lower_central, derived };
std::vector<PermGroup> series(SeriesKind kind, const PermGroup& g, std::size_t length);

struct HausdorffRow {
  int level = 0;
  unsigned log_order = 0;
  Rational ratio;
};

/// `(p - 1) log_p |G_n| / p^n` for `n = 0..n_max`; the degree must be prime.
std::vector<HausdorffRow> hausdorff_profile(Quotients& q, int n_max);

/// Checks `at_vertex(K, i) <= K` at the given level for every letter `i`.
bool verify_regular_branch(Quotients& q, const SubgroupExpr& k, int level);

struct QcpReport {
  std::size_t depth = 0;
  int required_level = 0;
  /// The required stabilizer is trivial at this level, so containment is automatic.
  bool vacuous = false;
  bool holds = false;
};

/// Checks that the normal closure of `g` contains `Stab(depth(g) + m + n_const)`,
/// with the depth taken from the portrait relative to the generators.
QcpReport verify_qcp(Quotients& q, const Word& g, int m, int n_const, int level);

}  // namespace arbor
