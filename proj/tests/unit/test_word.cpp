#include <doctest.h>

#include "arbor/errors.hpp"
#include "arbor/word.hpp"
#include "support.hpp"

using namespace arbor;

namespace {
const std::vector<std::string> kNames{"a", "b", "c", "d"};
Word w(std::string_view text) { return parse_word(text, kNames); }
}  // namespace

TEST_CASE("word syntax") {
  CHECK(w("e").empty());
  CHECK(w("").empty());
  CHECK(w("a b") == Word{Letter::of(0), Letter::of(1)});
  CHECK(w("a^-1") == Word{Letter::of(0, true)});
  CHECK(w("a^3") == Word{Letter::of(0), Letter::of(0), Letter::of(0)});
  CHECK(w("(a b)^2") == w("a b a b"));
  CHECK(w("(a b)^-1") == w("b^-1 a^-1"));
  CHECK(w("[a, b]") == w("a^-1 b^-1 a b"));
  CHECK(w("a^0").empty());
}

TEST_CASE("word conventions") {
  CHECK(commutator(w("a"), w("b")) == w("a^-1 b^-1 a b"));
  CHECK(conjugate(w("a"), w("b")) == w("b a b^-1"));
  CHECK(power(w("a b"), -2) == w("b^-1 a^-1 b^-1 a^-1"));
  CHECK(free_reduce(w("a b b^-1 a^-1 c")) == w("c"));
  CHECK(render_word({}, kNames) == "e");
  CHECK(render_word(w("a b^-1"), kNames) == "a b^-1");
}

TEST_CASE("word parse errors carry positions") {
  try {
    w("a x");
    FAIL("expected an error");
  } catch (const UndeclaredGenerator& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(w("(a b"), ParseError);
  CHECK_THROWS_AS(w("[a b]"), ParseError);
  CHECK_THROWS_AS(w("a^"), ParseError);
}

TEST_CASE("render then parse returns the same word") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Word u = testing::random_word(rng, kNames.size(), 20);
    CHECK(parse_word(render_word(u, kNames), kNames) == u);
  }
}

TEST_CASE("inverse and free reduction") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Word u = testing::random_word(rng, kNames.size(), 15);
    CHECK(free_reduce(concat(u, inverse(u))).empty());
    CHECK(inverse(inverse(u)) == u);
    CHECK(free_reduce(u) == u);
  }
}
