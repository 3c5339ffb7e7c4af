#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "arbor/bigint.hpp"
#include "arbor/catalog.hpp"
#include "arbor/decision.hpp"
#include "arbor/word.hpp"

namespace arbor {

/// A vertex of the tree as its sequence of letters, root first.
using Vertex = std::vector<int>;

/// Big-endian encoding `sum v_i d^(n-i)` of a vertex of level `n`.
std::size_t encode_vertex(const Vertex& v, int degree);
Vertex decode_vertex(std::size_t point, int degree, int level);

struct WreathDecomposition {
  /// `root[i]` is the image of the first-level vertex `i`.
  std::vector<int> root;
  /// `sections[i]` acts below `i`: `g(i v) = root[i] sections[i](v)`.
  std::vector<Word> sections;
};

struct PortraitNode {
  /// Root permutation of an inner node; empty for leaves.
  std::vector<int> perm;
  /// Leaf label: `"1"` for the identity or a generator name; empty otherwise.
  std::string leaf;
  bool truncated = false;
  std::vector<PortraitNode> children;
};

struct Portrait {
  PortraitNode root;
  /// Height when the portrait closes within the requested depth.
  std::optional<std::size_t> height;
  bool truncated = false;
  bool exhausted = false;
};

/// Which elements terminate a portrait.
enum class PortraitLeaves { identity, generators };

struct RecurrenceStep {
  Word element;
  /// The step passes to the section of `element^exponent` at `vertex`.
  long exponent = 1;
  int vertex = 0;
};

struct OrderResult {
  enum class Kind { finite, infinite, exhausted };
  Kind kind = Kind::exhausted;
  BigInt value = 0;
  /// For `infinite`: a chain whose last section equals `witness[cycle_start]`.
  std::vector<RecurrenceStep> witness;
  std::size_t cycle_start = 0;
  /// Set when `g^k = 1` and `g^(k/p) != 1` were confirmed by the word problem.
  bool certified = false;
};

struct NucleusResult {
  bool exhausted = false;
  /// One representative word per element of the nucleus, identity first.
  std::vector<Word> elements;
  std::vector<std::string> keys;
};

/// A self-similar group with its word problem, orders, portraits and nucleus.
///
/// Memo tables live in the instance, so one instance must not be shared
/// between threads without external locking.
class SelfSimilarGroup {
 public:
  explicit SelfSimilarGroup(GroupDef def);

  const GroupDef& def() const noexcept { return def_; }
  int degree() const noexcept { return def_.degree; }
  std::size_t rank() const noexcept { return def_.generators.size(); }
  std::size_t letter_count() const noexcept { return 2 * rank(); }

  Word word(std::string_view text) const { return def_.word(text); }
  std::string render(const Word& w) const;

  /// Normal form used throughout: free reduction, collapsing of letters equal
  /// to other letters or to the identity, merging of letter products that
  /// are letters, and sorting of commuting runs.
  Word reduce(const Word& w) const;

  std::vector<int> root_permutation(const Word& w) const;
  WreathDecomposition decompose(const Word& w) const;
  /// Reduced section at the first-level vertex `letter`.
  Word section(const Word& w, int letter) const;
  Word section(const Word& w, const Vertex& v) const;
  Vertex act(const Word& w, const Vertex& v) const;

  /// Per-letter data, indexed by `Letter::code`.
  const std::vector<int>& letter_root(Letter l) const { return perm_[l.code]; }
  const Word& letter_section(Letter l, int i) const {
    return sect_[l.code][static_cast<std::size_t>(i)];
  }

  Decision is_trivial(const Word& w, std::size_t budget = default_budget);
  Decision equal(const Word& u, const Word& v, std::size_t budget = default_budget);

  /// Minimized-automaton key; equal keys mean equal elements.
  std::optional<std::string> canonical_key(const Word& w, std::size_t budget = default_budget);

  OrderResult order(const Word& w, std::size_t budget = default_budget);

  Portrait portrait(const Word& w, std::size_t max_depth,
                    PortraitLeaves leaves = PortraitLeaves::identity,
                    std::size_t budget = default_budget);

  NucleusResult nucleus(std::size_t budget = default_budget);

  void clear_memo();

 private:
  static constexpr int kNoMerge = -2;
  static constexpr int kEmpty = -1;

  void build_letter_tables();
  void push_letter(Word& stack, Letter x) const;
  Word section_of_reduced(const Word& w, int letter, int* image) const;
  Decision explore_trivial(const Word& start, std::size_t budget, bool raw);

  GroupDef def_;
  std::vector<std::vector<int>> perm_;
  std::vector<std::vector<Word>> sect_;
  std::vector<Letter> alias_;
  std::vector<bool> trivial_letter_;
  std::vector<std::vector<int>> merge_;
  std::vector<std::vector<bool>> commute_;
  bool tables_ready_ = false;

  std::unordered_map<Word, bool, WordHash> trivial_memo_;
  std::unordered_map<Word, std::string, WordHash> key_memo_;
};

/// An automorphism acting as `inner` below `prefix` and trivially elsewhere.
struct LiftedElement {
  Word inner;
  Vertex prefix;
};

LiftedElement at_vertex(const Word& g, const Vertex& prefix);
Vertex act(SelfSimilarGroup& group, const LiftedElement& g, const Vertex& v);

}  // namespace arbor
