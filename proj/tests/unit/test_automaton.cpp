#include <doctest.h>

#include "arbor/automaton.hpp"
#include "arbor/perm.hpp"
#include "support.hpp"

using namespace arbor;

TEST_CASE("action on vertices") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  CHECK(g.act(g.word("a"), {0, 1}) == Vertex{1, 1});
  CHECK(g.act({}, {1, 0, 1}) == Vertex{1, 0, 1});

  SelfSimilarGroup gamma(builtin("gamma"));
  CHECK(gamma.act(gamma.word("t"), {0, 0}) == Vertex{0, 1});
  CHECK(gamma.act(gamma.word("t"), {2, 0}) == Vertex{2, 0});
}

TEST_CASE("action agrees with the definition and with the wreath decomposition") {
  std::mt19937 rng(101);
  for (auto name : builtin_names()) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    for (int i = 0; i < 80; ++i) {
      const Word w = testing::random_word(rng, g.rank(), 12);
      const Vertex v = testing::random_vertex(rng, g.degree(), 6);
      const Vertex image = g.act(w, v);
      CHECK(image == testing::direct_act(g.def(), w, v));
      const auto dec = g.decompose(w);
      const int first = v[0];
      CHECK(image[0] == dec.root[static_cast<std::size_t>(first)]);
      const Vertex tail(v.begin() + 1, v.end());
      const Vertex rest = g.act(dec.sections[static_cast<std::size_t>(first)], tail);
      CHECK(Vertex(image.begin() + 1, image.end()) == rest);
    }
  }
}

TEST_CASE("wreath decomposition") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  const auto b = g.decompose(g.word("b"));
  CHECK(b.root == std::vector<int>{0, 1});
  CHECK(g.render(b.sections[0]) == "a");
  CHECK(g.render(b.sections[1]) == "c");
  const auto e = g.decompose({});
  CHECK(e.sections == std::vector<Word>{Word{}, Word{}});

  SelfSimilarGroup gt(builtin("grigorchuk-tilde"));
  const Word x = gt.word("a b c d");
  const auto sq = gt.decompose(power(x, 2));
  CHECK(sq.root == std::vector<int>{0, 1});
  // With words acting right to left the sections are x^a and x.
  CHECK(gt.equal(sq.sections[0], conjugate(x, gt.word("a"))) == Decision::yes);
  CHECK(gt.equal(sq.sections[1], x) == Decision::yes);
}

TEST_CASE("word problem") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  CHECK(g.is_trivial(g.word("(a d)^4")) == Decision::yes);
  CHECK(g.is_trivial(g.word("b c d")) == Decision::yes);
  CHECK(g.is_trivial(g.word("a b")) == Decision::no);
  CHECK(g.is_trivial(g.word("(a d a c a c)^4")) == Decision::yes);
  CHECK(g.is_trivial(g.word("(a d)^2")) == Decision::no);
}

TEST_CASE("word problem agrees with level permutations") {
  std::mt19937 rng(2024);
  for (auto name : builtin_names()) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    for (int i = 0; i < 60; ++i) {
      const Word w = testing::random_word(rng, g.rank(), 10);
      // Conjugates of a^d are trivial; plain random words usually are not.
      const long exponent = g.def().name == "odometer" ? 0 : g.degree();
      const Word rel = power(Word{Letter::of(0)}, exponent);
      for (const Word& u : {w, conjugate(rel, w), concat(w, inverse(w))}) {
        const Decision d = g.is_trivial(u);
        REQUIRE(d != Decision::exhausted);
        const int level = g.degree() == 2 ? 8 : 5;
        const bool moves = !testing::direct_level_perm(g.def(), u, level).is_identity();
        if (d == Decision::yes) CHECK_FALSE(moves);
        if (moves) CHECK(d == Decision::no);
      }
    }
  }
}

TEST_CASE("orders of sample elements") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  auto finite = [&](std::string_view text) {
    const OrderResult r = g.order(g.word(text));
    REQUIRE(r.kind == OrderResult::Kind::finite);
    return r.value;
  };
  CHECK(finite("a") == 2);
  CHECK(finite("a d") == 4);
  CHECK(finite("a c") == 8);
  CHECK(finite("a b") == 16);
  CHECK(finite("e") == 1);
  // The level action sees the full order of a b from level 7 on.
  CHECK(testing::direct_level_perm(g.def(), g.word("a b"), 7).order() == 16);

  SelfSimilarGroup gt(builtin("grigorchuk-tilde"));
  const OrderResult x = gt.order(gt.word("a b c d"));
  CHECK(x.kind == OrderResult::Kind::infinite);
  CHECK_FALSE(x.witness.empty());

  SelfSimilarGroup gamma(builtin("gamma"));
  CHECK(gamma.order(gamma.word("a t")).kind == OrderResult::Kind::infinite);
  SelfSimilarGroup odo(builtin("odometer"));
  CHECK(odo.order(odo.word("t")).kind == OrderResult::Kind::infinite);
}

TEST_CASE("finite orders are multiples of every level order") {
  std::mt19937 rng(55);
  for (std::string_view name : {"grigorchuk", "gamma-bar-bar"}) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    const int top = g.degree() == 2 ? 7 : 5;
    for (int i = 0; i < 40; ++i) {
      const Word w = testing::random_word(rng, g.rank(), 10);
      const OrderResult r = g.order(w);
      REQUIRE(r.kind == OrderResult::Kind::finite);
      for (int n = 1; n <= top; ++n) {
        const BigInt k = testing::direct_level_perm(g.def(), w, n).order();
        CHECK(r.value % k == 0);
      }
      // Powers below the order are not trivial; the order itself is.
      CHECK(g.is_trivial(power(w, static_cast<long>(r.value))) == Decision::yes);
      if (r.value > 1) {
        const long p = g.degree();
        CHECK(g.is_trivial(power(w, static_cast<long>(r.value) / p)) == Decision::no);
      }
    }
  }
}

TEST_CASE("portraits") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  const Portrait e = g.portrait({}, 4);
  CHECK(e.height == std::size_t{0});
  CHECK(e.root.leaf == "1");

  const Portrait a = g.portrait(g.word("a"), 4);
  CHECK(a.height == std::size_t{1});
  CHECK(a.root.perm == std::vector<int>{1, 0});
  REQUIRE(a.root.children.size() == 2);
  CHECK(a.root.children[0].leaf == "1");

  const Portrait d = g.portrait(g.word("d"), 3);
  CHECK(d.truncated);
  CHECK_FALSE(d.height.has_value());

  const Portrait dg = g.portrait(g.word("d"), 3, PortraitLeaves::generators);
  CHECK(dg.height == std::size_t{0});
}

TEST_CASE("canonical keys") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  CHECK(g.canonical_key(g.word("b c d")) == g.canonical_key({}));
  CHECK(g.canonical_key(g.word("c")) != g.canonical_key(g.word("d")));
  CHECK(g.canonical_key(g.word("a a^-1")) == g.canonical_key({}));
  CHECK(g.canonical_key(g.word("b c")) == g.canonical_key(g.word("d")));

  std::mt19937 rng(8);
  for (int i = 0; i < 60; ++i) {
    const Word u = testing::random_word(rng, 4, 8);
    const Word v = testing::random_word(rng, 4, 8);
    const bool same_key = g.canonical_key(u) == g.canonical_key(v);
    const bool same_action =
        testing::direct_level_images(g.def(), u, 8) == testing::direct_level_images(g.def(), v, 8);
    if (same_key) CHECK(same_action);
    if (!same_action) CHECK_FALSE(same_key);
  }
}

TEST_CASE("nucleus") {
  SelfSimilarGroup odo(builtin("odometer"));
  const NucleusResult n = odo.nucleus();
  CHECK_FALSE(n.exhausted);
  REQUIRE(n.elements.size() == 3);
  CHECK(n.elements[0].empty());

  SelfSimilarGroup g(builtin("grigorchuk"));
  CHECK(g.nucleus().elements.size() == 5);

  SelfSimilarGroup empty(parse_groupdef("alphabet: 2\n"));
  CHECK(empty.nucleus().elements.size() == 1);
}

TEST_CASE("elements placed below a vertex") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  const LiftedElement at_root = at_vertex(g.word("a"), {});
  CHECK(act(g, at_root, {0, 1}) == Vertex{1, 1});
  const LiftedElement lifted = at_vertex(g.word("a"), {1});
  CHECK(act(g, lifted, {1, 0}) == Vertex{1, 1});
  CHECK(act(g, lifted, {0, 0}) == Vertex{0, 0});
  CHECK(act(g, lifted, {0, 1}) == Vertex{0, 1});
}
