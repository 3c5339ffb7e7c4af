#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/automaton.hpp"
#include "arbor/bigint.hpp"
#include "arbor/decision.hpp"
#include "arbor/parabolic.hpp"

namespace arbor {

struct BallSizes {
  /// `sizes[r]` counts distinct elements of length at most `r`.
  std::vector<std::size_t> sizes;
  /// Set when a budget ran out; `sizes` then holds the completed radii only.
  bool exhausted = false;
};

/// Exact growth function of `group` for the generating set `generators`
/// (inverses are added), distinguishing elements by canonical key.
/// `max_elements` caps the number of keys stored.
BallSizes ball_sizes(SelfSimilarGroup& group, const std::vector<Word>& generators, std::size_t radius,
                     std::size_t budget = default_budget, std::size_t max_elements = 1'000'000);

/// The eight letters of the weighted generating set of the tilde group: `a`
/// and the seven non-trivial products of `b, c, d`, written as bit masks
/// (`b = 1`, `c = 2`, `d = 4`).
inline constexpr std::array<std::string_view, 8> weight_letter_names = {
    "a", "b", "c", "b c", "d", "b d", "c d", "b c d"};

/// Weights `nu(s) = numerator_s(theta) / (1 - theta^3)` with `nu(a) = 1`.
struct WeightTable {
  Rational theta;
  /// Indexed by mask, with index 0 standing for `a`.
  std::array<Rational, 8> weight;
  /// The same weights scaled by `q^3` and `1 - theta^3`, where `theta = p/q`;
  /// all integers, proportional to `weight`.
  std::array<std::int64_t, 8> scaled;

  double value(std::size_t letter) const { return static_cast<double>(weight[letter]); }
};

/// Real root of `X^3 + X^2 + X - 2`, the lower end of the admissible range.
double weight_lower_bound();

/// Throws `DomainError` unless `weight_lower_bound() < theta < 1`.
WeightTable weight_table(const Rational& theta);

/// Parses a decimal such as `0.811` exactly.
Rational parse_decimal(std::string_view text);

struct ContractionReport {
  Rational theta;
  Rational eta;
  std::size_t sample_size = 0;
  /// Largest `(|g_0| + |g_1|) / |g|` over the sample, and a word attaining it.
  Rational max_ratio;
  std::vector<int> argmax;
  /// The same over words where `x = b c d` fills at most a fraction `eta` of
  /// the non-`a` letters.
  std::size_t restricted_size = 0;
  Rational max_ratio_restricted;
  /// `(eta nu(x) + (1-eta) m) / (eta nu(x) + (1-eta) theta m)`, `m = min nu`, as printed.
  double zeta_literal = 0;
  /// The same with `theta` moved to the section side; below one.
  double zeta_corrected = 0;
  /// The bound obtained by charging each letter together with its `a`.
  double zeta_block = 0;

  bool passed() const { return max_ratio < 1; }
  bool restricted_passed() const {
    return max_ratio_restricted < 1 && static_cast<double>(max_ratio_restricted) <= zeta_block + 1e-12;
  }
};

/// Sections of a word over the weighted letters (0 = `a`, masks 1..7) under
/// the wreath recursion of the tilde group, each reduced by cancelling `a a`
/// and merging adjacent masks.
std::array<std::vector<int>, 2> weighted_sections(const std::vector<int>& word);
std::int64_t scaled_weight(const WeightTable& t, const std::vector<int>& word);

/// Enumerates the words `a x_1 a x_2 ... a x_k` and `x_1 a ... x_k a` with
/// `k` even and `2k <= max_length` and compares their weight with the weight
/// of their two sections.
ContractionReport contraction_certificate(const Rational& theta, const Rational& eta,
                                          std::size_t max_length);

struct CosetGrowth {
  int level = 0;
  /// `sizes[r]` counts level vertices reachable from the ray prefix in at most `r` steps.
  std::vector<std::size_t> sizes;
  /// Least-squares slope of `log size` against `log r` before saturation.
  double slope = 0;
};

CosetGrowth coset_growth(SelfSimilarGroup& group, const RaySpec& ray, std::size_t radius, int level_cap);

}  // namespace arbor
