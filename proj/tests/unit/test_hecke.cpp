#include <doctest.h>

#include <algorithm>
#include <map>

#include "arbor/errors.hpp"
#include "arbor/hecke.hpp"
#include "arbor/parabolic.hpp"
#include "arbor/quotient.hpp"
#include "support.hpp"

using namespace arbor;

namespace {

/// Orbital classes of all ordered pairs, found by applying every element of
/// the enumerated quotient. Classes are numbered by first appearance.
std::vector<std::size_t> brute_orbitals(const std::vector<Perm>& all, std::size_t points) {
  std::vector<std::size_t> cls(points * points, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t y = 0; y < points; ++y) {
      if (cls[x * points + y] != SIZE_MAX) continue;
      for (const auto& p : all) cls[p[x] * points + p[y]] = next;
      ++next;
    }
  }
  return cls;
}

/// True when two labelings induce the same partition.
bool same_partition(const std::vector<std::size_t>& a, const OrbitalSet& o) {
  std::map<std::size_t, std::uint32_t> forward;
  std::map<std::uint32_t, std::size_t> backward;
  const std::size_t n = o.points();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint32_t b = o.orbital(i / n, i % n);
    auto [f, fnew] = forward.emplace(a[i], b);
    auto [g, gnew] = backward.emplace(b, a[i]);
    if (f->second != b || g->second != a[i]) return false;
  }
  return true;
}

struct FixedPointData {
  /// Average of fix(g)^2: the number of orbitals.
  std::size_t rank = 0;
  /// Average of fix(g^2): the number of self-paired orbitals.
  std::size_t symmetric = 0;
};

FixedPointData fixed_point_data(const GroupDef& def, int level) {
  const std::size_t points = level_size(def.degree, level);
  const auto all = testing::naive_closure(testing::direct_generator_perms(def, level), points, 200'000);
  REQUIRE_FALSE(all.empty());
  std::size_t sq = 0, sym = 0;
  for (const auto& p : all) {
    const std::size_t f = testing::fixed_points(p);
    sq += f * f;
    sym += testing::fixed_points(p * p);
  }
  REQUIRE(sq % all.size() == 0);
  REQUIRE(sym % all.size() == 0);
  return {sq / all.size(), sym / all.size()};
}

/// Degrees of the constituents of the level-n permutation module, derived
/// from fixed-point counts alone. Functions pulled back from level k form a
/// submodule; the new part at level k has dimension d^k - d^(k-1) and, for a
/// multiplicity-free module, as many constituents as the rank grows. Two new
/// constituents with no new self-paired orbital are complex conjugates and
/// so have equal degree.
std::vector<std::size_t> fixed_point_degrees(const GroupDef& def, int n) {
  std::vector<std::size_t> degrees{1};
  FixedPointData prev{1, 1};
  for (int k = 1; k <= n; ++k) {
    const FixedPointData cur = fixed_point_data(def, k);
    const std::size_t dim = level_size(def.degree, k) - level_size(def.degree, k - 1);
    const std::size_t grew = cur.rank - prev.rank;
    const std::size_t grew_symmetric = cur.symmetric - prev.symmetric;
    if (grew == 1) {
      degrees.push_back(dim);
    } else {
      REQUIRE(grew == 2);
      REQUIRE(grew_symmetric == 0);
      degrees.push_back(dim / 2);
      degrees.push_back(dim / 2);
    }
    prev = cur;
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<std::size_t> degrees_of(std::string_view name, int n) {
  SelfSimilarGroup g(builtin(name));
  Quotients q(g);
  const OrbitalSet o = orbitals(q, default_ray(g.degree()), n);
  return decomposition_degrees(o, g.degree()).degrees;
}

}  // namespace

TEST_CASE("orbitals of small levels") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const OrbitalSet o0 = orbitals(q, default_ray(2), 0);
  CHECK(o0.points() == 1);
  CHECK(o0.rank() == 1);

  const OrbitalSet o2 = orbitals(q, default_ray(2), 2);
  CHECK(o2.rank() == 3);
  auto sizes = o2.valencies();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2});
  CHECK(o2.orbital(o2.base(), o2.base()) == 0);

  SelfSimilarGroup gamma(builtin("gamma"));
  Quotients qc(gamma);
  const OrbitalSet t = orbitals(qc, default_ray(3), 1);
  CHECK(t.rank() == 3);
  CHECK(t.valencies() == std::vector<std::size_t>{1, 1, 1});
  // The two off-diagonal classes are transposes of each other.
  CHECK(t.transposes()[1] == 2);
  CHECK(t.transposes()[2] == 1);
}

TEST_CASE("orbitals agree with enumeration and partition all pairs") {
  for (auto name : builtin_names()) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    Quotients q(g);
    const int top = g.degree() == 2 ? 4 : 3;
    for (int n = 1; n <= top; ++n) {
      const OrbitalSet o = orbitals(q, default_ray(g.degree()), n);
      const auto all = testing::naive_closure(testing::direct_generator_perms(g.def(), n), o.points(), 200'000);
      REQUIRE_FALSE(all.empty());
      CHECK(same_partition(brute_orbitals(all, o.points()), o));

      std::vector<int> sum(o.points() * o.points(), 0);
      for (std::size_t k = 0; k < o.rank(); ++k) {
        const auto m = o.matrix(k);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
      }
      CHECK(std::all_of(sum.begin(), sum.end(), [](int v) { return v == 1; }));
      std::size_t total = 0;
      for (auto v : o.valencies()) total += v;
      CHECK(total == o.points());
    }
  }
}

TEST_CASE("commutativity of the orbital algebra") {
  for (std::string_view name : {"grigorchuk", "grigorchuk-tilde", "gamma", "gamma-bar", "gamma-bar-bar"}) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    Quotients q(g);
    const int top = g.degree() == 2 ? 6 : 4;
    for (int n = 0; n <= top; ++n) CHECK(check_gelfand(orbitals(q, default_ray(g.degree()), n)));
  }

  // The regular action of the symmetric group on three letters has a
  // noncommutative centralizer algebra.
  const std::vector<Perm> s3 = testing::naive_closure(
      {Perm(std::vector<std::uint16_t>{1, 0, 2}), Perm(std::vector<std::uint16_t>{1, 2, 0})}, 3, 10);
  REQUIRE(s3.size() == 6);
  auto index_of = [&](const Perm& p) {
    return static_cast<std::size_t>(std::find(s3.begin(), s3.end(), p) - s3.begin());
  };
  std::vector<std::uint32_t> classes(36);
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) classes[x * 6 + y] = static_cast<std::uint32_t>(index_of(s3[x].inverse() * s3[y]));
  }
  CHECK_FALSE(check_gelfand(OrbitalSet(1, 6, 0, classes, 6)));
}

TEST_CASE("orbitals need a transitive quotient") {
  SelfSimilarGroup g(parse_groupdef("alphabet: 2\ngen s: e ; [s, s]\n"));
  Quotients q(g);
  CHECK_THROWS_AS(orbitals(q, default_ray(2), 2), NotTransitive);
}

TEST_CASE("decomposition degrees") {
  CHECK(degrees_of("grigorchuk", 0) == std::vector<std::size_t>{1});
  CHECK(degrees_of("grigorchuk", 2) == std::vector<std::size_t>{1, 1, 2});
  CHECK(degrees_of("gamma", 2) == std::vector<std::size_t>{1, 1, 1, 3, 3});

  SelfSimilarGroup gamma(builtin("gamma"));
  Quotients q(gamma);
  const auto d = decomposition_degrees(orbitals(q, default_ray(3), 3), 3);
  CHECK(d.matches_prediction);
  CHECK_FALSE(d.matches_literal);
  CHECK(d.trace_check);
  CHECK(d.degree_sum == 27);
}

TEST_CASE("decomposition degrees agree with fixed-point counts") {
  for (std::string_view name : {"grigorchuk", "grigorchuk-tilde", "gamma", "gamma-bar", "gamma-bar-bar"}) {
    CAPTURE(name);
    const int top = name.substr(0, 5) == "grigo" ? 4 : 3;
    const GroupDef def = builtin(name);
    for (int n = 1; n <= top; ++n) {
      CAPTURE(n);
      CHECK(degrees_of(name, n) == fixed_point_degrees(def, n));
    }
  }
}

TEST_CASE("degrees of consecutive levels are nested") {
  for (std::string_view name : {"grigorchuk", "gamma-bar"}) {
    CAPTURE(name);
    std::vector<std::size_t> prev{1};
    const int top = name == "grigorchuk" ? 5 : 4;
    for (int n = 1; n <= top; ++n) {
      const auto cur = degrees_of(name, n);
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
  }
}
