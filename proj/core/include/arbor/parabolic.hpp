#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arbor/permgroup.hpp"
#include "arbor/quotient.hpp"

namespace arbor {

/// A periodic ray `period period period ...` in the tree.
struct RaySpec {
  std::vector<int> period;

  /// The first `n` letters of the ray.
  Vertex prefix(int n) const;
};

/// The ray used for the builtin groups: `1^inf` on the binary tree and `2^inf` on the ternary one.
RaySpec default_ray(int degree);

/// `P_n`, the stabilizer in `G_n` of the ray prefix of length `n`.
PermGroup parabolic_subgroup(Quotients& q, const RaySpec& ray, int n);

struct OrbitReport {
  int level = 0;
  std::vector<std::vector<std::size_t>> orbits;
  std::size_t predicted_count = 0;
  /// Orbits equal the predicted shells `e_1..e_i x Sigma^(n-1-i)`, `x != e_{i+1}`, plus `{e_1..e_n}`.
  bool shape_match = false;
};

/// Orbits of `P_n` on level `n`, sorted by smallest point.
OrbitReport orbit_report(Quotients& q, const RaySpec& ray, int n);

/// The number of double cosets `P_n g P_n`; requires `G_n` transitive on level `n`.
std::size_t double_coset_count(Quotients& q, const RaySpec& ray, int n);

bool is_transitive(const PermGroup& g);

struct DecompositionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DecompositionReport {
  int level = 0;
  BigInt parabolic_order;
  BigInt generated_order;
  std::vector<DecompositionCheck> checks;
  bool passed() const;
};

/// Recipe for the structure of `P_n` in terms of subgroups one level down.
struct DecompositionRecipe {
  RaySpec ray;
  /// The subgroup placed at every first-level vertex off the ray.
  SubgroupExpr side;
  /// Extra generators of the top part.
  std::vector<Word> extra;
};

/// Recipes for the builtin branch groups; throws `NameError` otherwise.
DecompositionRecipe builtin_decomposition(const GroupDef& group);

/// `P_n` should be generated by copies of `side_{n-1}` below the off-ray
/// children, by `Q_{n-1}` (the ray stabilizer in `side_{n-1}`) below `e_1`,
/// and by the extra generators.
DecompositionReport verify_parabolic_decomposition(Quotients& q, const DecompositionRecipe& recipe, int n);

}  // namespace arbor
