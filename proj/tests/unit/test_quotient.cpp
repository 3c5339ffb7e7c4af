#include <doctest.h>

#include "arbor/errors.hpp"
#include "arbor/quotient.hpp"
#include "arbor/subgroup_expr.hpp"
#include "support.hpp"

using namespace arbor;

namespace {

BigInt order_of(Quotients& q, std::string_view expr, int level) {
  return q.eval(parse_subgroup_expr(expr, q.group().def()), level).order();
}

BigInt index_of(Quotients& q, std::string_view sub, std::string_view sup, int level) {
  const auto& def = q.group().def();
  return index(q.eval(parse_subgroup_expr(sub, def), level), q.eval(parse_subgroup_expr(sup, def), level));
}

}  // namespace

TEST_CASE("quotient orders follow the closed formulas") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients qg(g);
  for (int n = 1; n <= 3; ++n) CHECK(qg.ambient(n).order() == big_pow(2, (1U << n) - 1));
  for (int n = 4; n <= 6; ++n) CHECK(qg.ambient(n).order() == big_pow(2, 5 * (1U << (n - 3)) + 2));

  SelfSimilarGroup gt(builtin("grigorchuk-tilde"));
  Quotients qt(gt);
  for (int n = 1; n <= 4; ++n) CHECK(qt.ambient(n).order() == big_pow(2, (1U << n) - 1));
  CHECK(qt.ambient(5).order() == big_pow(2, 13 * 2 + 2));

  SelfSimilarGroup gamma(builtin("gamma"));
  Quotients qc(gamma);
  CHECK(qc.ambient(1).order() == 3);
  unsigned p = 1;
  for (int n = 2; n <= 4; ++n) {
    p *= 3;
    CHECK(qc.ambient(n).order() == big_pow(3, p + 1));
  }

  SelfSimilarGroup gb(builtin("gamma-bar"));
  Quotients qb(gb);
  CHECK(qb.ambient(1).order() == 3);
  for (int n = 2; n <= 4; ++n) {
    unsigned pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    CHECK(qb.ambient(n).order() == big_pow(3, (pow3 + 2 * static_cast<unsigned>(n) + 3) / 4));
  }
}

TEST_CASE("quotient orders agree with naive enumeration") {
  for (auto name : builtin_names()) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    Quotients q(g);
    const int top = g.degree() == 2 ? 4 : 2;
    for (int n = 0; n <= top; ++n) {
      const auto all = testing::naive_closure(testing::direct_generator_perms(g.def(), n),
                                              level_size(g.degree(), n), 200'000);
      REQUIRE_FALSE(all.empty());
      CHECK(q.ambient(n).order() == all.size());
    }
  }
}

TEST_CASE("consecutive quotients divide and project onto each other") {
  for (auto name : builtin_names()) {
    CAPTURE(name);
    SelfSimilarGroup g(builtin(name));
    Quotients q(g);
    const int top = g.degree() == 2 ? 6 : 4;
    for (int n = 0; n < top; ++n) {
      CHECK(q.ambient(n + 1).order() % q.ambient(n).order() == 0);
      // Projecting the generator images of level n+1 gives those of level n.
      const auto upper = q.generator_images(n + 1);
      const auto lower = q.generator_images(n);
      const std::size_t block = level_size(g.degree(), 1);
      for (std::size_t i = 0; i < upper.size(); ++i) {
        for (std::size_t x = 0; x < lower[i].degree(); ++x) CHECK(upper[i][x * block] / block == lower[i][x]);
      }
    }
  }
}

TEST_CASE("subgroup expressions") {
  const GroupDef def = builtin("grigorchuk");
  for (std::string_view text : {"whole", "gen{a, b c}", "ncl{(a b)^2}", "comm(whole, whole)", "stab(3)",
                                "vstab(0 1)", "rist(1 1)", "pow(whole, 2)", "prod(stab(2), gen{a})",
                                "at(ncl{(a b)^2}, 0)"}) {
    CAPTURE(text);
    const SubgroupExpr e = parse_subgroup_expr(text, def);
    const std::string rendered = render_subgroup_expr(e, def);
    CHECK(render_subgroup_expr(parse_subgroup_expr(rendered, def), def) == rendered);
  }
  CHECK_THROWS_AS(parse_subgroup_expr("ncl{x}", def), ParseError);
  CHECK_THROWS_AS(parse_subgroup_expr("stab(", def), ParseError);
}

TEST_CASE("indices of named subgroups") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  CHECK(index_of(q, "stab(1)", "whole", 4) == 2);
  CHECK(index_of(q, "ncl{(a b)^2}", "whole", 4) == 16);
  CHECK(index_of(q, "ncl{b}", "whole", 5) == 8);
  CHECK(index_of(q, "comm(ncl{(a b)^2}, ncl{(a b)^2})", "ncl{(a b)^2}", 6) == 64);
  CHECK(index_of(q, "stab(2)", "stab(2)", 5) == 1);
  CHECK_THROWS_AS(index_of(q, "whole", "stab(1)", 3), NotASubgroup);

  // The commutator subgroup and the second derived term coincide.
  const auto& whole = q.ambient(5);
  CHECK(order_of(q, "comm(whole, whole)", 5) == series(SeriesKind::derived, whole, 2)[1].order());
  CHECK(q.ambient(6).order() / series(SeriesKind::lower_central, q.ambient(6), 3)[2].order() == 32);
}

TEST_CASE("lower central series of the ternary group") {
  SelfSimilarGroup g(builtin("gamma"));
  Quotients q(g);
  const auto lcs = series(SeriesKind::lower_central, q.ambient(4), 3);
  // The third term is generated by commutators and cubes of K = <a t, t a>.
  CHECK(lcs[2].order() == order_of(q, "prod(comm(gen{a t, t a}, gen{a t, t a}), pow(gen{a t, t a}, 3))", 4));
}

TEST_CASE("containments") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const GroupDef& def = g.def();
  const auto k = parse_subgroup_expr("ncl{(a b)^2}", def);
  for (int n = 4; n <= 6; ++n) CHECK(verify_containment(q, SubgroupExpr::level_stab(3), k, n));
  CHECK_FALSE(verify_containment(q, SubgroupExpr::level_stab(2), k, 5));
  CHECK(verify_containment(q, k, SubgroupExpr::whole(), 5));

  SelfSimilarGroup gamma(builtin("gamma"));
  Quotients qc(gamma);
  const auto derived = parse_subgroup_expr("comm(whole, whole)", gamma.def());
  for (int n = 3; n <= 5; ++n) CHECK(verify_containment(qc, SubgroupExpr::level_stab(2), derived, n));
}

TEST_CASE("Hausdorff profile") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const auto rows = hausdorff_profile(q, 6);
  CHECK(rows[0].ratio == 0);
  CHECK(rows[6].log_order == 42);
  CHECK(rows[6].ratio == Rational(42, 64));

  SelfSimilarGroup gb(builtin("gamma-bar"));
  Quotients qb(gb);
  const auto bar = hausdorff_profile(qb, 4);
  CHECK(bar[4].log_order == 23);
  CHECK(bar[4].ratio == Rational(46, 81));
}

TEST_CASE("regular branch checks") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const auto k = parse_subgroup_expr("ncl{(a b)^2}", g.def());
  for (int n = 4; n <= 6; ++n) CHECK(verify_regular_branch(q, k, n));
  CHECK_FALSE(verify_regular_branch(q, SubgroupExpr::whole(), 5));

  SelfSimilarGroup gamma(builtin("gamma"));
  Quotients qc(gamma);
  const auto derived = parse_subgroup_expr("comm(whole, whole)", gamma.def());
  for (int n = 3; n <= 5; ++n) CHECK(verify_regular_branch(qc, derived, n));

  // Odometer quotients are cyclic.
  SelfSimilarGroup odo(builtin("odometer"));
  Quotients qo(odo);
  CHECK(qo.ambient(4).order() == 16);
}

TEST_CASE("congruence depth check") {
  SelfSimilarGroup g(builtin("grigorchuk"));
  Quotients q(g);
  const QcpReport d = verify_qcp(q, g.word("d"), 4, 3, 8);
  CHECK(d.depth == 0);
  CHECK(d.required_level == 7);
  CHECK_FALSE(d.vacuous);
  CHECK_THROWS_AS(verify_qcp(q, g.word("b c d"), 4, 3, 8), DomainError);
  const QcpReport k = verify_qcp(q, g.word("(a b)^2"), 0, 0, 8);
  CHECK(k.required_level == static_cast<int>(k.depth));
}
