#include "arbor/automaton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "arbor/errors.hpp"

namespace arbor {

std::size_t encode_vertex(const Vertex& v, int degree) {
  std::size_t point = 0;
  for (int x : v) point = point * static_cast<std::size_t>(degree) + static_cast<std::size_t>(x);
  return point;
}

Vertex decode_vertex(std::size_t point, int degree, int level) {
  Vertex v(static_cast<std::size_t>(level));
  for (int i = level - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(point % static_cast<std::size_t>(degree));
    point /= static_cast<std::size_t>(degree);
  }
  return v;
}

SelfSimilarGroup::SelfSimilarGroup(GroupDef def) : def_(std::move(def)) {
  validate(def_);
  const std::size_t d = static_cast<std::size_t>(def_.degree);
  perm_.resize(letter_count());
  sect_.resize(letter_count());
  for (std::size_t g = 0; g < rank(); ++g) {
    const auto& gen = def_.generators[g];
    const Letter fwd = Letter::of(g);
    const Letter inv = fwd.inverse();
    perm_[fwd.code] = gen.root;
    sect_[fwd.code] = gen.restrictions;
    perm_[inv.code].assign(d, 0);
    sect_[inv.code].assign(d, Word{});
    for (std::size_t i = 0; i < d; ++i) {
      const auto j = static_cast<std::size_t>(gen.root[i]);
      perm_[inv.code][j] = static_cast<int>(i);
      sect_[inv.code][j] = inverse(gen.restrictions[i]);
    }
  }
  build_letter_tables();
}

std::string SelfSimilarGroup::render(const Word& w) const {
  const auto names = def_.names();
  return render_word(w, names);
}

void SelfSimilarGroup::build_letter_tables() {
  const std::size_t n = letter_count();
  alias_.resize(n);
  trivial_letter_.assign(n, false);
  merge_.assign(n, std::vector<int>(n, kNoMerge));
  commute_.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) alias_[x] = Letter{static_cast<std::uint32_t>(x)};
  tables_ready_ = false;

  constexpr std::size_t kBootstrapBudget = 20'000;
  auto proven_trivial = [&](const Word& w) {
    return explore_trivial(w, kBootstrapBudget, false) == Decision::yes;
  };
  for (std::size_t x = 0; x < n; ++x) {
    const Letter lx{static_cast<std::uint32_t>(x)};
    if (proven_trivial({lx})) {
      trivial_letter_[x] = true;
      continue;
    }
    for (std::size_t y = 0; y < x; ++y) {
      const Letter ly{static_cast<std::uint32_t>(y)};
      if (!trivial_letter_[y] && alias_[y].code == y && proven_trivial({lx, ly.inverse()})) {
        alias_[x] = ly;
        break;
      }
    }
  }
  std::vector<std::uint32_t> canonical;
  for (std::size_t x = 0; x < n; ++x) {
    if (!trivial_letter_[x] && alias_[x].code == x) canonical.push_back(static_cast<std::uint32_t>(x));
  }
  for (auto x : canonical) {
    for (auto y : canonical) {
      const Letter lx{x};
      const Letter ly{y};
      commute_[x][y] = x == y || proven_trivial(commutator({lx}, {ly}));
      if (proven_trivial({lx, ly})) {
        merge_[x][y] = kEmpty;
        continue;
      }
      for (auto z : canonical) {
        if (proven_trivial({lx, ly, Letter{z}.inverse()})) {
          merge_[x][y] = static_cast<int>(z);
          break;
        }
      }
    }
  }
  tables_ready_ = true;
  trivial_memo_.clear();
}

void SelfSimilarGroup::push_letter(Word& stack, Letter x) const {
  if (!tables_ready_) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
    return;
  }
  x = alias_[x.code];
  if (trivial_letter_[x.code]) return;
  std::size_t j = stack.size();
  while (j > 0) {
    const Letter y = stack[j - 1];
    const int m = merge_[y.code][x.code];
    if (m != kNoMerge) {
      // x commutes with stack[j..), so it meets y directly.
      const Word tail(stack.begin() + static_cast<std::ptrdiff_t>(j), stack.end());
      stack.resize(j - 1);
      if (m != kEmpty) push_letter(stack, Letter{static_cast<std::uint32_t>(m)});
      for (Letter t : tail) push_letter(stack, t);
      return;
    }
    if (!commute_[y.code][x.code]) break;
    --j;
  }
  std::size_t p = stack.size();
  while (p > 0 && commute_[stack[p - 1].code][x.code] && stack[p - 1].code > x.code) --p;
  stack.insert(stack.begin() + static_cast<std::ptrdiff_t>(p), x);
}

Word SelfSimilarGroup::reduce(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l.generator() >= rank()) throw DomainError("letter outside the generating set");
    push_letter(out, l);
  }
  return out;
}

Word SelfSimilarGroup::section_of_reduced(const Word& w, int letter, int* image) const {
  std::vector<const Word*> parts(w.size());
  int x = letter;
  for (std::size_t k = w.size(); k-- > 0;) {
    parts[k] = &sect_[w[k].code][static_cast<std::size_t>(x)];
    x = perm_[w[k].code][static_cast<std::size_t>(x)];
  }
  if (image != nullptr) *image = x;
  Word out;
  for (const Word* part : parts) {
    for (Letter l : *part) push_letter(out, l);
  }
  return out;
}

std::vector<int> SelfSimilarGroup::root_permutation(const Word& w) const {
  std::vector<int> root(static_cast<std::size_t>(degree()));
  for (int i = 0; i < degree(); ++i) {
    int x = i;
    for (std::size_t k = w.size(); k-- > 0;) x = perm_[w[k].code][static_cast<std::size_t>(x)];
    root[static_cast<std::size_t>(i)] = x;
  }
  return root;
}

WreathDecomposition SelfSimilarGroup::decompose(const Word& w) const {
  const Word r = reduce(w);
  WreathDecomposition out;
  out.root.resize(static_cast<std::size_t>(degree()));
  out.sections.resize(static_cast<std::size_t>(degree()));
  for (int i = 0; i < degree(); ++i) {
    out.sections[static_cast<std::size_t>(i)] =
        section_of_reduced(r, i, &out.root[static_cast<std::size_t>(i)]);
  }
  return out;
}

Word SelfSimilarGroup::section(const Word& w, int letter) const {
  if (letter < 0 || letter >= degree()) throw DomainError("vertex letter out of range");
  return section_of_reduced(reduce(w), letter, nullptr);
}

Word SelfSimilarGroup::section(const Word& w, const Vertex& v) const {
  Word cur = reduce(w);
  for (int x : v) {
    if (x < 0 || x >= degree()) throw DomainError("vertex letter out of range");
    cur = section_of_reduced(cur, x, nullptr);
  }
  return cur;
}

Vertex SelfSimilarGroup::act(const Word& w, const Vertex& v) const {
  Vertex out(v.size());
  Word cur = reduce(w);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0 || v[k] >= degree()) throw DomainError("vertex letter out of range");
    int image = 0;
    cur = section_of_reduced(cur, v[k], &image);
    out[k] = image;
  }
  return out;
}

Decision SelfSimilarGroup::explore_trivial(const Word& start, std::size_t budget, bool use_memo) {
  const Word w = reduce(start);
  if (w.empty()) return Decision::yes;
  if (use_memo) {
    if (auto it = trivial_memo_.find(w); it != trivial_memo_.end()) {
      return it->second ? Decision::yes : Decision::no;
    }
  }
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> queue{w};
  std::vector<Word> children(static_cast<std::size_t>(degree()));
  for (std::size_t idx = 0; idx < queue.size(); ++idx) {
    const Word s = queue[idx];
    if (use_memo) {
      if (auto it = trivial_memo_.find(s); it != trivial_memo_.end()) {
        if (it->second) continue;
        trivial_memo_[w] = false;
        return Decision::no;
      }
    }
    for (int i = 0; i < degree(); ++i) {
      int image = 0;
      children[static_cast<std::size_t>(i)] = section_of_reduced(s, i, &image);
      if (image != i) {
        if (use_memo) {
          trivial_memo_[w] = false;
          trivial_memo_[s] = false;
        }
        return Decision::no;
      }
    }
    for (auto& c : children) {
      if (c.empty() || seen.count(c)) continue;
      if (seen.size() >= budget) return Decision::exhausted;
      seen.insert(c);
      queue.push_back(std::move(c));
    }
  }
  if (use_memo) {
    for (auto& s : queue) trivial_memo_[std::move(s)] = true;
  }
  return Decision::yes;
}

Decision SelfSimilarGroup::is_trivial(const Word& w, std::size_t budget) {
  return explore_trivial(w, budget, true);
}

Decision SelfSimilarGroup::equal(const Word& u, const Word& v, std::size_t budget) {
  return is_trivial(concat(u, inverse(v)), budget);
}

std::optional<std::string> SelfSimilarGroup::canonical_key(const Word& w0, std::size_t budget) {
  const Word w = reduce(w0);
  if (auto it = key_memo_.find(w); it != key_memo_.end()) return it->second;
  const std::size_t d = static_cast<std::size_t>(degree());
  std::unordered_map<Word, std::size_t, WordHash> index{{w, 0}};
  std::vector<Word> states{w};
  std::vector<std::vector<int>> roots;
  std::vector<std::vector<std::size_t>> next;
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<int> root(d);
    std::vector<std::size_t> kids(d);
    for (std::size_t i = 0; i < d; ++i) {
      Word c = section_of_reduced(states[s], static_cast<int>(i), &root[i]);
      auto [it, inserted] = index.try_emplace(c, states.size());
      if (inserted) {
        if (states.size() >= budget) return std::nullopt;
        states.push_back(std::move(c));
      }
      kids[i] = it->second;
    }
    roots.push_back(std::move(root));
    next.push_back(std::move(kids));
  }

  // Moore refinement: start from root permutations, split by child classes.
  const std::size_t n = states.size();
  std::vector<std::size_t> cls(n);
  std::size_t class_count = 0;
  {
    std::map<std::vector<int>, std::size_t> ids;
    for (std::size_t s = 0; s < n; ++s) {
      cls[s] = ids.try_emplace(roots[s], ids.size()).first->second;
    }
    class_count = ids.size();
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (std::size_t k : next[s]) sig.push_back(cls[k]);
      refined[s] = ids.try_emplace(std::move(sig), ids.size()).first->second;
    }
    cls = std::move(refined);
    if (ids.size() == class_count) break;
    class_count = ids.size();
  }

  // Relabel classes in breadth-first order from the start state.
  std::vector<std::size_t> representative(class_count, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (representative[cls[s]] == n) representative[cls[s]] = s;
  }
  std::vector<std::size_t> label(class_count, class_count);
  std::vector<std::size_t> order{cls[0]};
  label[cls[0]] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t child : next[representative[order[k]]]) {
      if (label[cls[child]] == class_count) {
        label[cls[child]] = order.size();
        order.push_back(cls[child]);
      }
    }
  }
  std::string key;
  for (std::size_t c : order) {
    const std::size_t s = representative[c];
    for (std::size_t i = 0; i < d; ++i) {
      key += std::to_string(roots[s][i]);
      key += i + 1 < d ? '.' : '|';
    }
    for (std::size_t i = 0; i < d; ++i) {
      key += std::to_string(label[cls[next[s][i]]]);
      key += i + 1 < d ? ',' : ';';
    }
  }
  key_memo_.emplace(w, key);
  return key;
}

namespace {

struct OrderFrame {
  std::string key;
  Word element;
  long in_multiplier = 1;
  long out_exponent = 1;
  int out_vertex = 0;
};

struct OrderSearch {
  SelfSimilarGroup& group;
  std::size_t budget;
  std::size_t nodes = 0;
  std::string identity_key;
  std::unordered_map<std::string, BigInt> finished;
  std::unordered_map<std::string, std::size_t> on_path;
  std::vector<OrderFrame> path;
  OrderResult failure;

  struct Visit {
    bool ok = false;
    BigInt value = 1;
    std::size_t low = 0;
  };

  Visit visit(const Word& w, long multiplier) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    if (++nodes > budget) {
      failure.kind = OrderResult::Kind::exhausted;
      return {};
    }
    const auto key = group.canonical_key(w, budget);
    if (!key) {
      failure.kind = OrderResult::Kind::exhausted;
      return {};
    }
    if (*key == identity_key) return {true, 1, kNone};
    if (auto it = finished.find(*key); it != finished.end()) return {true, it->second, kNone};
    if (auto it = on_path.find(*key); it != on_path.end()) {
      const std::size_t p = it->second;
      bool grows = multiplier > 1;
      for (std::size_t k = p + 1; k < path.size(); ++k) grows = grows || path[k].in_multiplier > 1;
      if (grows) {
        failure.kind = OrderResult::Kind::infinite;
        for (const auto& f : path) failure.witness.push_back({f.element, f.out_exponent, f.out_vertex});
        failure.cycle_start = p;
        return {};
      }
      return {true, 1, p};
    }
    const std::size_t me = path.size();
    on_path.emplace(*key, me);
    path.push_back({*key, w, multiplier, 1, 0});
    const std::vector<int> root = group.root_permutation(w);
    std::vector<bool> seen(root.size(), false);
    BigInt result = 1;
    std::size_t low = kNone;
    for (std::size_t i = 0; i < root.size(); ++i) {
      if (seen[i]) continue;
      long length = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(root[j])) {
        seen[j] = true;
        ++length;
      }
      path[me].out_exponent = length;
      path[me].out_vertex = static_cast<int>(i);
      const Word s = group.section(power(w, length), static_cast<int>(i));
      Visit sub = visit(s, length);
      if (!sub.ok) return {};
      result = big_lcm(result, sub.value * length);
      low = std::min(low, sub.low);
    }
    path.pop_back();
    on_path.erase(*key);
    if (low >= me) {
      finished.emplace(*key, result);
      low = kNone;
    }
    return {true, result, low};
  }
};

std::vector<unsigned> prime_factors(BigInt k) {
  std::vector<unsigned> out;
  for (unsigned p = 2; k > 1 && p < 1'000'000; ++p) {
    if (k % p == 0) {
      out.push_back(p);
      while (k % p == 0) k /= p;
    }
  }
  return out;
}

}  // namespace

OrderResult SelfSimilarGroup::order(const Word& w0, std::size_t budget) {
  const Word w = reduce(w0);
  OrderSearch search{*this, budget, 0, {}, {}, {}, {}, {}};
  const auto id = canonical_key({}, budget);
  search.identity_key = *id;
  const auto visit = search.visit(w, 1);
  if (!visit.ok) return search.failure;
  OrderResult out;
  out.kind = OrderResult::Kind::finite;
  out.value = visit.value;
  constexpr std::size_t kMaxCertifiedLength = 200'000;
  if (out.value * w.size() <= kMaxCertifiedLength) {
    const long k = out.value.convert_to<long>();
    bool ok = is_trivial(power(w, k), budget) == Decision::yes;
    for (unsigned p : prime_factors(out.value)) {
      ok = ok && is_trivial(power(w, k / p), budget) == Decision::no;
    }
    out.certified = ok;
  }
  return out;
}

Portrait SelfSimilarGroup::portrait(const Word& w, std::size_t max_depth, PortraitLeaves leaves,
                                    std::size_t budget) {
  Portrait out;
  std::function<std::optional<std::size_t>(const Word&, std::size_t, PortraitNode&)> build =
      [&](const Word& g, std::size_t depth, PortraitNode& node) -> std::optional<std::size_t> {
    const Decision trivial = is_trivial(g, budget);
    if (trivial == Decision::exhausted) {
      out.exhausted = true;
      node.truncated = true;
      return std::nullopt;
    }
    if (trivial == Decision::yes) {
      node.leaf = "1";
      return 0;
    }
    if (leaves == PortraitLeaves::generators) {
      for (std::size_t k = 0; k < rank(); ++k) {
        if (is_trivial(concat(g, {Letter::of(k, true)}), budget) == Decision::yes) {
          node.leaf = def_.generators[k].name;
          return 0;
        }
      }
    }
    if (depth == max_depth) {
      node.truncated = true;
      return std::nullopt;
    }
    const WreathDecomposition dec = decompose(g);
    node.perm = dec.root;
    node.children.resize(dec.root.size());
    std::vector<std::size_t> preimage(dec.root.size());
    for (std::size_t i = 0; i < dec.root.size(); ++i) {
      preimage[static_cast<std::size_t>(dec.root[i])] = i;
    }
    std::optional<std::size_t> height = 0;
    for (std::size_t i = 0; i < dec.root.size(); ++i) {
      const auto h = build(dec.sections[preimage[i]], depth + 1, node.children[i]);
      if (!h) {
        height.reset();
      } else if (height) {
        height = std::max(*height, *h + 1);
      }
    }
    return height;
  };
  out.height = build(w, 0, out.root);
  out.truncated = !out.height.has_value();
  return out;
}

NucleusResult SelfSimilarGroup::nucleus(std::size_t budget) {
  NucleusResult out;
  std::map<std::string, Word> members;
  std::size_t explored = 0;

  // Section closure of `seeds` and the states lying on cycles of its graph.
  auto recurrent_states = [&](const std::vector<Word>& seeds, std::vector<Word>& result) -> bool {
    std::unordered_map<Word, std::size_t, WordHash> index;
    std::vector<Word> states;
    std::vector<std::vector<std::size_t>> next;
    for (const Word& s : seeds) {
      const Word r = reduce(s);
      if (index.try_emplace(r, states.size()).second) states.push_back(r);
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
      std::vector<std::size_t> kids;
      for (int i = 0; i < degree(); ++i) {
        Word c = section_of_reduced(states[s], i, nullptr);
        auto [it, inserted] = index.try_emplace(c, states.size());
        if (inserted) {
          if (++explored > budget) return false;
          states.push_back(std::move(c));
        }
        kids.push_back(it->second);
      }
      next.push_back(std::move(kids));
    }
    // Tarjan's strongly connected components, iteratively.
    const std::size_t n = states.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> num(n, kUnset), low(n, 0), comp(n, kUnset), stack;
    std::vector<bool> on_stack(n, false);
    std::size_t counter = 0, components = 0;
    std::vector<std::size_t> comp_size;
    for (std::size_t root = 0; root < n; ++root) {
      if (num[root] != kUnset) continue;
      std::vector<std::pair<std::size_t, std::size_t>> work{{root, 0}};
      num[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!work.empty()) {
        auto& [v, child] = work.back();
        if (child < next[v].size()) {
          const std::size_t u = next[v][child++];
          if (num[u] == kUnset) {
            num[u] = low[u] = counter++;
            stack.push_back(u);
            on_stack[u] = true;
            work.emplace_back(u, 0);
          } else if (on_stack[u]) {
            low[v] = std::min(low[v], num[u]);
          }
          continue;
        }
        if (low[v] == num[v]) {
          std::size_t size = 0;
          for (;;) {
            const std::size_t u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
            comp[u] = components;
            ++size;
            if (u == v) break;
          }
          comp_size.push_back(size);
          ++components;
        }
        const std::size_t finished = v;
        work.pop_back();
        if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[finished]);
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      const bool self_loop =
          std::find(next[s].begin(), next[s].end(), s) != next[s].end();
      if (comp_size[comp[s]] > 1 || self_loop) result.push_back(states[s]);
    }
    return true;
  };

  auto absorb = [&](const std::vector<Word>& words) -> std::optional<bool> {
    bool grew = false;
    std::vector<Word> pending = words;
    while (!pending.empty()) {
      Word w = std::move(pending.back());
      pending.pop_back();
      const auto key = canonical_key(w, budget);
      if (!key) return std::nullopt;
      if (members.count(*key)) continue;
      members.emplace(*key, w);
      grew = true;
      for (int i = 0; i < degree(); ++i) pending.push_back(section_of_reduced(reduce(w), i, nullptr));
    }
    return grew;
  };

  std::vector<Word> seeds{Word{}};
  for (std::size_t x = 0; x < letter_count(); ++x) seeds.push_back({Letter{static_cast<std::uint32_t>(x)}});
  std::vector<Word> recurrent;
  if (!recurrent_states(seeds, recurrent)) {
    out.exhausted = true;
    return out;
  }
  recurrent.push_back({});
  if (!absorb(recurrent)) {
    out.exhausted = true;
    return out;
  }
  for (;;) {
    std::vector<Word> current;
    for (const auto& [key, w] : members) current.push_back(w);
    std::vector<Word> products;
    for (const Word& x : current) {
      for (const Word& y : current) products.push_back(concat(x, y));
      for (std::size_t l = 0; l < letter_count(); ++l) {
        products.push_back(concat(x, {Letter{static_cast<std::uint32_t>(l)}}));
      }
    }
    std::vector<Word> found;
    if (!recurrent_states(products, found)) {
      out.exhausted = true;
      return out;
    }
    const auto grew = absorb(found);
    if (!grew) {
      out.exhausted = true;
      return out;
    }
    if (!*grew) break;
    if (members.size() > budget) {
      out.exhausted = true;
      return out;
    }
  }
  const auto id = canonical_key({}, budget);
  std::vector<std::pair<std::string, Word>> sorted(members.begin(), members.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    const bool ai = a.first == *id;
    const bool bi = b.first == *id;
    if (ai != bi) return ai;
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  for (auto& [key, w] : sorted) {
    out.keys.push_back(key);
    out.elements.push_back(w);
  }
  return out;
}

void SelfSimilarGroup::clear_memo() {
  trivial_memo_.clear();
  key_memo_.clear();
}

LiftedElement at_vertex(const Word& g, const Vertex& prefix) { return {g, prefix}; }

Vertex act(SelfSimilarGroup& group, const LiftedElement& g, const Vertex& v) {
  if (v.size() < g.prefix.size() || !std::equal(g.prefix.begin(), g.prefix.end(), v.begin())) {
    return v;
  }
  Vertex tail(v.begin() + static_cast<std::ptrdiff_t>(g.prefix.size()), v.end());
  Vertex out = g.prefix;
  const Vertex moved = group.act(g.inner, tail);
  out.insert(out.end(), moved.begin(), moved.end());
  return out;
}

}  // namespace arbor
