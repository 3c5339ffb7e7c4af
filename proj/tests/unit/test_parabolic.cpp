#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "arbor/parabolic.hpp"
#include "arbor/quotient.hpp"
#include "support.hpp"

using namespace arbor;

namespace {

/// Orbits of the ray stabilizer found by enumerating the whole quotient.
std::set<std::vector<std::size_t>> brute_orbits(const GroupDef& def, const RaySpec& ray, int n) {
  const std::size_t points = level_size(def.degree, n);
  const auto all = testing::naive_closure(testing::direct_generator_perms(def, n), points, 200'000);
  REQUIRE_FALSE(all.empty());
  const std::size_t base = encode_vertex(ray.prefix(n), def.degree);
  std::vector<std::size_t> parent(points);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : all) {
    if (p[base] != base) continue;
    for (std::size_t x = 0; x < points; ++x) parent[find(x)] = find(p[x]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < points; ++x) groups[find(x)].push_back(x);
  std::set<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.insert(members);
  return out;
}

std::set<std::vector<std::size_t>> as_set(const OrbitReport& r) {
  std::set<std::vector<std::size_t>> out;
  for (auto orbit : r.orbits) {
    std::sort(orbit.begin(), orbit.end());
    out.insert(orbit);
  }
  return out;
}

}  // namespace

TEST_CASE("parabolic orbits of the binary group") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const RaySpec ray = default_ray(2);
  const OrbitReport r = orbit_report(q, ray, 3);
  CHECK(r.orbits.size() == 4);
  CHECK(r.shape_match);
  // {111}, {110}, {10*}, {0**}
  CHECK(as_set(r) == std::set<std::vector<std::size_t>>{{7}, {6}, {4, 5}, {0, 1, 2, 3}});
  CHECK(orbit_report(q, ray, 4).orbits.size() == 5);
  CHECK(orbit_report(q, ray, 0).orbits.size() == 1);
}

TEST_CASE("parabolic orbits of the ternary groups") {
  SelfSimilarGroup gb(builtin("gamma-bar"));
  Quotients qb(gb);
  const RaySpec ray = default_ray(3);
  const OrbitReport r = orbit_report(qb, ray, 2);
  CHECK(r.orbits.size() == 5);
  // {22}, {20}, {21}, {0*}, {1*}
  CHECK(as_set(r) == std::set<std::vector<std::size_t>>{{8}, {6}, {7}, {0, 1, 2}, {3, 4, 5}});

  SelfSimilarGroup gbb(builtin("gamma-bar-bar"));
  Quotients qbb(gbb);
  CHECK(orbit_report(qbb, ray, 3).orbits.size() == 7);
}

TEST_CASE("parabolic orbits agree with enumeration") {
  for (std::string_view name : {"grigorchuk", "grigorchuk-tilde", "gamma", "gamma-bar", "gamma-bar-bar"}) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    Quotients q(g);
    const RaySpec ray = default_ray(g.degree());
    const int top = g.degree() == 2 ? 4 : 3;
    for (int n = 1; n <= top; ++n) {
      const OrbitReport r = orbit_report(q, ray, n);
      CHECK(as_set(r) == brute_orbits(g.def(), ray, n));
      CHECK(r.orbits.size() == r.predicted_count);
    }
  }
}

TEST_CASE("parabolic index and double cosets") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const RaySpec ray = default_ray(2);
  CHECK(index(parabolic_subgroup(q, ray, 3), q.ambient(3)) == 8);
  CHECK(double_coset_count(q, ray, 0) == 1);
  for (int n = 1; n <= 5; ++n) CHECK(double_coset_count(q, ray, n) == orbit_report(q, ray, n).orbits.size());

  SelfSimilarGroup gamma(builtin("gamma"));
  Quotients qc(gamma);
  CHECK(index(parabolic_subgroup(qc, default_ray(3), 2), qc.ambient(2)) == 9);
  CHECK(is_transitive(qc.ambient(3)));
  CHECK_FALSE(is_transitive(PermGroup(TreeShape{3, 2})));
}

TEST_CASE("parabolic decompositions") {
  for (std::string_view name : {"grigorchuk", "grigorchuk-tilde", "gamma", "gamma-bar", "gamma-bar-bar"}) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    Quotients q(g);
    const DecompositionRecipe recipe = builtin_decomposition(g.def());
    const int lo = g.degree() == 2 ? 3 : 2;
    for (int n = lo; n <= lo + 1; ++n) {
      const DecompositionReport r = verify_parabolic_decomposition(q, recipe, n);
      CHECK(r.passed());
      CHECK(r.parabolic_order == r.generated_order);
      CHECK(r.parabolic_order == parabolic_subgroup(q, recipe.ray, n).order());
    }
  }
  CHECK_THROWS(builtin_decomposition(builtin("odometer")));
}
