#pragma once

// Independent reference implementations used as oracles by the unit tests.
// None of them goes through the recursion, memo tables or Schreier-Sims code
// of the library.

#include <random>
#include <unordered_set>
#include <vector>

#include "arbor/automaton.hpp"
#include "arbor/catalog.hpp"
#include "arbor/perm.hpp"

namespace arbor::testing {

/// Random freely reduced word with length drawn uniformly from [0, max_len].
inline Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  Word w;
  while (w.size() < len) {
    const Letter l{static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, 2 * rank - 1)(rng))};
    if (!w.empty() && w.back() == l.inverse()) continue;
    w.push_back(l);
  }
  return w;
}

inline Vertex random_vertex(std::mt19937& rng, int degree, int level) {
  Vertex v(static_cast<std::size_t>(level));
  for (auto& x : v) x = std::uniform_int_distribution<int>(0, degree - 1)(rng);
  return v;
}

inline Vertex direct_act(const GroupDef& def, const Word& w, const Vertex& v);

/// Applies one letter straight from the generator definition.
inline Vertex direct_letter(const GroupDef& def, Letter l, const Vertex& v) {
  if (v.empty()) return v;
  const auto& gen = def.generators[l.generator()];
  Vertex tail(v.begin() + 1, v.end());
  Vertex out;
  if (!l.is_inverse()) {
    const int i = v[0];
    out.push_back(gen.root[static_cast<std::size_t>(i)]);
    tail = direct_act(def, gen.restrictions[static_cast<std::size_t>(i)], tail);
  } else {
    int i = 0;
    while (gen.root[static_cast<std::size_t>(i)] != v[0]) ++i;
    out.push_back(i);
    tail = direct_act(def, inverse(gen.restrictions[static_cast<std::size_t>(i)]), tail);
  }
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

/// Words act right to left.
inline Vertex direct_act(const GroupDef& def, const Word& w, const Vertex& v) {
  Vertex cur = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = direct_letter(def, *it, cur);
  return cur;
}

inline std::vector<int> direct_level_images(const GroupDef& def, const Word& w, int level) {
  const std::size_t n = level_size(def.degree, level);
  std::vector<int> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    out[x] = static_cast<int>(encode_vertex(direct_act(def, w, decode_vertex(x, def.degree, level)), def.degree));
  }
  return out;
}

inline Perm direct_level_perm(const GroupDef& def, const Word& w, int level) {
  const auto images = direct_level_images(def, w, level);
  return Perm(std::vector<std::uint16_t>(images.begin(), images.end()));
}

/// All elements of the group generated by `gens`, by breadth-first closure.
/// Returns an empty vector when more than `limit` elements turn up.
inline std::vector<Perm> naive_closure(const std::vector<Perm>& gens, std::size_t degree, std::size_t limit) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> all{Perm(degree)};
  seen.insert(all[0]);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& g : gens) {
      Perm p = g * all[i];
      if (seen.insert(p).second) {
        all.push_back(std::move(p));
        if (all.size() > limit) return {};
      }
    }
  }
  return all;
}

inline std::vector<Perm> direct_generator_perms(const GroupDef& def, int level) {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < def.generators.size(); ++i) {
    gens.push_back(direct_level_perm(def, {Letter::of(i)}, level));
  }
  return gens;
}

inline std::size_t fixed_points(const Perm& p) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < p.degree(); ++x) n += p[x] == x ? 1 : 0;
  return n;
}

}  // namespace arbor::testing
