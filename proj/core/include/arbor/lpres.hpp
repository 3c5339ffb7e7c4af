#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/automaton.hpp"
#include "arbor/decision.hpp"
#include "arbor/word.hpp"

namespace arbor {

/// Finitely many fixed relators plus every image of the iterated relators
/// under powers of a substitution.
struct LPresentation {
  std::vector<std::string> names;
  std::vector<Word> fixed;
  std::vector<Word> iterated;
  /// Image of each generator; inverses map to inverse images.
  std::vector<Word> substitution;
};

/// Reads the block format
///
///     fixed: a^2, b^2, b c d
///     iterated: (a d)^4, (a d a c a c)^4
///     subst: a -> a c a; b -> d; c -> b; d -> c
///
/// over the given generator names. Generators without a `subst` entry are
/// fixed by the substitution.
LPresentation parse_lpresentation(std::string_view text, std::span<const std::string> names);
std::string render_lpresentation(const LPresentation& p);

/// The presentations of the Grigorchuk group and its tilde variant.
LPresentation builtin_lpresentation(std::string_view group_name);

/// `sigma^k(w)`, freely reduced after every step.
Word substitute(const LPresentation& p, const Word& w, unsigned k);

struct RelatorResult {
  /// Index into `fixed` or `iterated`.
  std::size_t source = 0;
  bool iterated = false;
  unsigned iteration = 0;
  Word word;
  Decision trivial = Decision::exhausted;
};

struct LPresentationReport {
  std::vector<RelatorResult> relators;

  std::size_t count(Decision d) const;
  /// No relator was refuted and none exhausted its budget.
  bool passed() const { return count(Decision::no) == 0 && count(Decision::exhausted) == 0; }
};

/// All fixed relators and `sigma^i` of the iterated ones for `i <= max_iter`,
/// translated to the group's generator indices.
std::vector<RelatorResult> relator_family(const SelfSimilarGroup& group, const LPresentation& p,
                                          unsigned max_iter);

/// Decides every relator of the family with the word problem of `group`.
LPresentationReport verify_lpresentation(SelfSimilarGroup& group, const LPresentation& p,
                                         unsigned max_iter, std::size_t budget = default_budget);

struct EndomorphismReport {
  /// `sigma(r)` is trivial for every relator `r` of the family.
  bool homomorphism = false;
  /// `|sigma(w)| >= |w|` after reduction for every sample word.
  bool expanding = false;
  bool exhausted = false;
  std::optional<Word> counterexample;
  std::size_t relators_checked = 0;
};

EndomorphismReport verify_substitution_endomorphism(SelfSimilarGroup& group, const LPresentation& p,
                                                    std::span<const Word> sample, unsigned max_iter,
                                                    std::size_t budget = default_budget);

struct ParityReport {
  bool all_even = true;
  std::size_t checked = 0;
  std::optional<Word> counterexample;
};

/// Checks that every word of the sample has even length.
ParityReport parity_check(std::span<const Word> sample);

}  // namespace arbor
