#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/decision.hpp"
#include "arbor/word.hpp"

namespace arbor {

/// A generator given by its root permutation and its sections below each
/// first-level vertex: `g(i v) = root[i] restrictions[i](v)`.
struct GeneratorDef {
  std::string name;
  std::vector<int> root;
  std::vector<Word> restrictions;

  friend bool operator==(const GeneratorDef&, const GeneratorDef&) = default;
};

/// A self-similar group presented by a finite automaton over `{0..degree-1}`.
struct GroupDef {
  std::string name;
  int degree = 2;
  std::vector<GeneratorDef> generators;

  std::vector<std::string> names() const;
  std::optional<std::size_t> find(std::string_view generator) const;
  /// Parses a word over this group's generator names.
  Word word(std::string_view text) const;

  /// Structural equality: the display name is not compared.
  friend bool operator==(const GroupDef& a, const GroupDef& b) {
    return a.degree == b.degree && a.generators == b.generators;
  }
};

/// Throws unless the invariants of a group definition hold.
void validate(const GroupDef& g);

GroupDef builtin(std::string_view name);
std::span<const std::string_view> builtin_names();

/// Reads the line-oriented group definition format (see README).
GroupDef parse_groupdef(std::string_view text);
std::string render_groupdef(const GroupDef& g);

std::vector<int> parse_permutation(std::string_view text, int degree, std::size_t line = 1,
                                   std::size_t column_offset = 0);
std::string render_permutation(std::span<const int> perm);

struct NamedMorphism {
  GroupDef source;
  GroupDef target;
  /// Image of each source generator, indexed like `source.generators`.
  std::vector<Word> images;

  Word apply(const Word& w) const;
};

/// The embedding of the Grigorchuk group into its tilde variant.
NamedMorphism grigorchuk_embedding();

struct RelatorCheck {
  Word relator;
  Word image;
  Decision trivial = Decision::exhausted;
};

/// Checks that each relator's image is trivial in the target group.
std::vector<RelatorCheck> verify_morphism(const NamedMorphism& m, std::span<const Word> relators,
                                          std::size_t budget = default_budget);

}  // namespace arbor
