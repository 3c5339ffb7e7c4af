#include <doctest.h>

#include "arbor/errors.hpp"
#include "arbor/lpres.hpp"
#include "support.hpp"

using namespace arbor;

namespace {
const std::vector<std::string> kNames{"a", "b", "c", "d"};
Word w(std::string_view text) { return parse_word(text, kNames); }
}  // namespace

TEST_CASE("presentation text") {
  const LPresentation p = parse_lpresentation(
      "# comment line\n"
      "fixed: a^2, [b, c]\n"
      "iterated: (a d)^4\n"
      "subst: a -> a c a; d -> c\n",
      kNames);
  CHECK(p.fixed.size() == 2);
  CHECK(p.fixed[1] == w("[b, c]"));
  CHECK(p.iterated == std::vector<Word>{w("(a d)^4")});
  CHECK(p.substitution[0] == w("a c a"));
  CHECK(p.substitution[1] == w("b"));
  CHECK(p.substitution[3] == w("c"));

  try {
    parse_lpresentation("fixed: a^2\nsubst: x -> a\n", kNames);
    FAIL("expected an error");
  } catch (const UndeclaredGenerator& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_lpresentation("relators: a\n", kNames), ParseError);
  CHECK_THROWS_AS(parse_lpresentation("fixed: a,, b\n", kNames), ParseError);
  CHECK_THROWS_AS(parse_lpresentation("subst: a b\n", kNames), ParseError);
}

TEST_CASE("render then parse returns the same presentation") {
  for (std::string_view name : {"grigorchuk", "grigorchuk-tilde"}) {
    const LPresentation p = builtin_lpresentation(name);
    const LPresentation again = parse_lpresentation(render_lpresentation(p), p.names);
    CHECK(again.fixed == p.fixed);
    CHECK(again.iterated == p.iterated);
    CHECK(again.substitution == p.substitution);
  }
  std::mt19937 rng(12);
  for (int i = 0; i < 50; ++i) {
    LPresentation p;
    p.names = kNames;
    for (int k = 0; k < 3; ++k) p.fixed.push_back(testing::random_word(rng, 4, 8));
    for (int k = 0; k < 2; ++k) p.iterated.push_back(testing::random_word(rng, 4, 8));
    for (int k = 0; k < 4; ++k) p.substitution.push_back(testing::random_word(rng, 4, 4));
    const LPresentation again = parse_lpresentation(render_lpresentation(p), kNames);
    CHECK(again.fixed == p.fixed);
    CHECK(again.iterated == p.iterated);
    CHECK(again.substitution == p.substitution);
  }
  CHECK_THROWS_AS(builtin_lpresentation("gamma"), NameError);
}

TEST_CASE("substitution") {
  const LPresentation g = builtin_lpresentation("grigorchuk");
  CHECK(substitute(g, w("a d b"), 0) == w("a d b"));
  CHECK(substitute(g, w("a d"), 1) == w("a c a c"));
  CHECK(substitute(g, w("(a d)^4"), 1) == w("(a c a c)^4"));
  CHECK(substitute(g, w("b c d"), 1) == w("d b c"));
  CHECK(substitute(g, w("a^-1"), 1) == w("a^-1 c^-1 a^-1"));
  const LPresentation t = builtin_lpresentation("grigorchuk-tilde");
  CHECK(substitute(t, w("b"), 1) == w("d"));
}

TEST_CASE("relator families are trivial") {
  for (auto [name, iterations] : {std::pair<std::string_view, unsigned>{"grigorchuk", 4}, {"grigorchuk-tilde", 3}}) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    const LPresentation p = builtin_lpresentation(name);
    const auto report = verify_lpresentation(g, p, iterations);
    CHECK(report.passed());
    CHECK(report.relators.size() == p.fixed.size() + p.iterated.size() * (iterations + 1));
    // Trivial relators act trivially on a deep level.
    for (const auto& r : report.relators) {
      CHECK(testing::direct_level_perm(g.def(), r.word, 8).is_identity());
    }
  }
  SelfSimilarGroup g(builtin("grigorchuk"));
  LPresentation empty;
  empty.names = kNames;
  empty.substitution = {w("a"), w("b"), w("c"), w("d")};
  CHECK(verify_lpresentation(g, empty, 3).passed());

  LPresentation wrong = builtin_lpresentation("grigorchuk");
  wrong.fixed.push_back(w("a b"));
  const auto bad = verify_lpresentation(g, wrong, 1);
  CHECK_FALSE(bad.passed());
  CHECK(bad.count(Decision::no) == 1);
}

TEST_CASE("the substitution induces an endomorphism") {
  std::mt19937 rng(31);
  std::vector<Word> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(testing::random_word(rng, 4, 8));
  for (std::string_view name : {"grigorchuk", "grigorchuk-tilde"}) {
    SelfSimilarGroup g(builtin(name));
    const auto report = verify_substitution_endomorphism(g, builtin_lpresentation(name), sample, 2);
    CHECK(report.homomorphism);
    CHECK_FALSE(report.exhausted);
  }
  SelfSimilarGroup g(builtin("grigorchuk"));
  LPresentation identity = builtin_lpresentation("grigorchuk");
  identity.substitution = {w("a"), w("b"), w("c"), w("d")};
  const auto report = verify_substitution_endomorphism(g, identity, sample, 2);
  CHECK(report.homomorphism);
  CHECK(report.expanding);
}

TEST_CASE("relator lengths are even") {
  CHECK(parity_check(std::vector<Word>{w("(a c)^4"), Word{}}).all_even);
  const auto odd = parity_check(std::vector<Word>{w("a b"), w("a b c")});
  CHECK_FALSE(odd.all_even);
  REQUIRE(odd.counterexample.has_value());
  CHECK(*odd.counterexample == w("a b c"));

  SelfSimilarGroup g(builtin("grigorchuk-tilde"));
  const LPresentation p = builtin_lpresentation("grigorchuk-tilde");
  for (const auto& r : relator_family(g, p, 3)) {
    if (r.iterated) CHECK(r.word.size() % 2 == 0);
  }
}
