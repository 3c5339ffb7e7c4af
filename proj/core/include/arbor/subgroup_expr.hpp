#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arbor/automaton.hpp"
#include "arbor/catalog.hpp"

namespace arbor {

/// A subgroup of a congruence quotient, described independently of the level.
///
/// Text syntax: `whole`, `gen{w, ...}`, `ncl{w, ...}`, `comm(E, E)`,
/// `stab(m)`, `vstab(0 1)`, `rist(0 1)`, `pow(E, k)`, `prod(E, ...)`,
/// `at(E, 0 1)`.
struct SubgroupExpr {
  enum class Kind {
    whole,
    gen,
    normal_closure,
    commutator,
    level_stab,
    vertex_stab,
    rigid_stab,
    power,
    product,
    at_vertex
  };

  Kind kind = Kind::whole;
  std::vector<Word> words;
  std::vector<SubgroupExpr> args;
  int number = 0;
  Vertex vertex;

  static SubgroupExpr whole();
  static SubgroupExpr gen(std::vector<Word> words);
  static SubgroupExpr normal_closure(std::vector<Word> words);
  static SubgroupExpr commutator(SubgroupExpr a, SubgroupExpr b);
  static SubgroupExpr level_stab(int m);
  static SubgroupExpr vertex_stab(Vertex v);
  static SubgroupExpr rigid_stab(Vertex v);
  static SubgroupExpr power(SubgroupExpr e, int k);
  static SubgroupExpr product(std::vector<SubgroupExpr> parts);
  static SubgroupExpr at_vertex(SubgroupExpr e, Vertex v);
};

SubgroupExpr parse_subgroup_expr(std::string_view text, const GroupDef& group);
std::string render_subgroup_expr(const SubgroupExpr& e, const GroupDef& group);

}  // namespace arbor
