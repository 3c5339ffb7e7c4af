#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

/// A generator or its inverse, packed as `2 * generator + inverse_flag`.
struct Letter {
  std::uint32_t code = 0;

  static constexpr Letter of(std::size_t generator, bool inverse = false) noexcept {
    return Letter{static_cast<std::uint32_t>(2 * generator + (inverse ? 1 : 0))};
  }
  constexpr std::size_t generator() const noexcept { return code >> 1; }
  constexpr bool is_inverse() const noexcept { return (code & 1U) != 0; }
  constexpr Letter inverse() const noexcept { return Letter{code ^ 1U}; }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Words are read left to right and act on the tree right to left: `s1 s2`
/// applies `s2` first.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
/// `w^k` for any integer `k`; negative powers invert.
Word power(const Word& w, long k);
/// `u^-1 v^-1 u v`.
Word commutator(const Word& u, const Word& v);
/// `h g h^-1`, the conjugation convention used throughout.
Word conjugate(const Word& g, const Word& h);
/// Cancels adjacent `s s^-1` pairs.
Word free_reduce(const Word& w);

/// Parses the word syntax shared by files and the command line.
///
/// Tokens are generator names, `name^k`, `(word)^k`, `[u, v]` and `e` for the
/// empty word; juxtaposition is multiplication. Errors report 1-based columns
/// relative to `text` (plus `column_offset`) on line `line`.
Word parse_word(std::string_view text, std::span<const std::string> names, std::size_t line = 1,
                std::size_t column_offset = 0);

/// Space-separated rendering with `^-1` suffixes; the empty word is `e`.
std::string render_word(const Word& w, std::span<const std::string> names);

}  // namespace arbor
