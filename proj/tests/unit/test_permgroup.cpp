#include <doctest.h>

#include <unordered_set>

#include "arbor/perm.hpp"
#include "arbor/permgroup.hpp"
#include "support.hpp"

using namespace arbor;

TEST_CASE("level permutations") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  const Perm a = level_permutation(g, g.word("a"), 1);
  CHECK(a[0] == 1);
  CHECK(a[1] == 0);
  CHECK(level_permutation(g, {}, 5).is_identity());

  SelfSimilarGroup gamma(builtin("gamma"));
  const Perm t = level_permutation(gamma, gamma.word("t"), 2);
  CHECK(t[0] == 1);
  CHECK(t[1] == 2);
  CHECK(t[2] == 0);
  for (std::size_t x = 3; x < 9; ++x) CHECK(t[x] == x);

  std::mt19937 rng(5);
  for (auto name : builtin_names()) {
    SelfSimilarGroup h(builtin(name));
    LevelImages images(h);
    for (int i = 0; i < 30; ++i) {
      const Word w = testing::random_word(rng, h.rank(), 14);
      const int level = h.degree() == 2 ? 6 : 4;
      CHECK(images.of(w, level) == testing::direct_level_perm(h.def(), w, level));
    }
  }
}

TEST_CASE("permutation arithmetic") {
  const Perm p(std::vector<std::uint16_t>{1, 2, 0, 3});
  const Perm q(std::vector<std::uint16_t>{0, 1, 3, 2});
  const Perm pq = p * q;
  for (std::size_t x = 0; x < 4; ++x) CHECK(pq[x] == p[q[x]]);
  CHECK((p * p.inverse()).is_identity());
  CHECK(pq.order() == 4);
  CHECK(Perm(4).order() == 1);
}

TEST_CASE("lifting a permutation below a vertex") {
  const Perm swap(std::vector<std::uint16_t>{1, 0});
  const Perm lifted = lift(swap, {1, 0}, 2, 3);
  // Only the leaves 100 and 101 move.
  for (std::size_t x = 0; x < 8; ++x) {
    if (x == 4) {
      CHECK(lifted[x] == 5);
    } else if (x == 5) {
      CHECK(lifted[x] == 4);
    } else {
      CHECK(lifted[x] == x);
    }
  }
}

TEST_CASE("stabilizer chain orders match enumeration") {
  CHECK(PermGroup(TreeShape{2, 3}).order() == 1);

  std::mt19937 rng(77);
  for (auto name : builtin_names()) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    const int level = g.degree() == 2 ? 4 : 3;
    const TreeShape shape{g.degree(), level};
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Perm> gens;
      const int count = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int i = 0; i < count; ++i) {
        gens.push_back(testing::direct_level_perm(g.def(), testing::random_word(rng, g.rank(), 8), level));
      }
      const auto all = testing::naive_closure(gens, shape.points(), 100'000);
      REQUIRE_FALSE(all.empty());
      const PermGroup pg(shape, gens);
      CHECK(pg.order() == all.size());

      // Membership agrees with the enumerated element set.
      std::unordered_set<Perm, PermHash> members(all.begin(), all.end());
      const auto ambient = testing::direct_generator_perms(g.def(), level);
      for (int i = 0; i < 20; ++i) {
        Perm p(shape.points());
        for (int k = 0; k < 6; ++k) p = ambient[rng() % ambient.size()] * p;
        CHECK(pg.contains(p) == (members.count(p) > 0));
      }
    }
  }
}

TEST_CASE("known quotient sizes") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  CHECK(PermGroup(TreeShape{2, 3}, testing::direct_generator_perms(g.def(), 3)).order() == 128);
  SelfSimilarGroup gamma(builtin("gamma"));
  CHECK(PermGroup(TreeShape{3, 2}, testing::direct_generator_perms(gamma.def(), 2)).order() == 81);
}

TEST_CASE("extending a group") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  const auto gens = testing::direct_generator_perms(g.def(), 3);
  PermGroup pg(TreeShape{2, 3});
  for (const auto& p : gens) pg.extend(p);
  CHECK(pg.order() == 128);
  CHECK_FALSE(pg.extend(gens[0] * gens[1]));
  const auto stab = pg.stabilizer_generators(1);
  for (const auto& s : stab) CHECK(pg.image(s, pg.base()[0]) == pg.base()[0]);
}
