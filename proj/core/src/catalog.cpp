#include "arbor/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "arbor/automaton.hpp"
#include "arbor/errors.hpp"

namespace arbor {

std::vector<std::string> GroupDef::names() const {
  std::vector<std::string> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.name);
  return out;
}

std::optional<std::size_t> GroupDef::find(std::string_view generator) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == generator) return i;
  }
  return std::nullopt;
}

Word GroupDef::word(std::string_view text) const {
  const auto n = names();
  return parse_word(text, n);
}

void validate(const GroupDef& g) {
  if (g.degree < 2) throw DomainError("alphabet size must be at least 2");
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    const auto& gen = g.generators[i];
    if (gen.name.empty()) throw DomainError("empty generator name");
    if (gen.name == "e") throw DomainError("'e' is reserved for the empty word");
    for (std::size_t j = 0; j < i; ++j) {
      if (g.generators[j].name == gen.name) {
        throw DomainError("duplicate generator name '" + gen.name + "'");
      }
    }
    if (static_cast<int>(gen.root.size()) != g.degree) {
      throw DomainError("root permutation of '" + gen.name + "' has wrong size");
    }
    std::vector<bool> seen(static_cast<std::size_t>(g.degree), false);
    for (int x : gen.root) {
      if (x < 0 || x >= g.degree || seen[static_cast<std::size_t>(x)]) {
        throw DomainError("root permutation of '" + gen.name + "' is not a bijection");
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
    if (static_cast<int>(gen.restrictions.size()) != g.degree) {
      throw DomainError("generator '" + gen.name + "' needs one restriction per letter");
    }
    for (const auto& w : gen.restrictions) {
      for (Letter l : w) {
        if (l.generator() >= g.generators.size()) {
          throw DomainError("restriction of '" + gen.name + "' uses an undeclared generator");
        }
      }
    }
  }
}

namespace {

constexpr std::array<std::string_view, 6> kBuiltinNames = {
    "grigorchuk", "grigorchuk-tilde", "gamma", "gamma-bar", "gamma-bar-bar", "odometer"};

constexpr std::string_view kGrigorchuk = R"(alphabet: 2
name: grigorchuk
gen a: (0 1) ; [e, e]
gen b: e ; [a, c]
gen c: e ; [a, d]
gen d: e ; [e, b]
)";

constexpr std::string_view kGrigorchukTilde = R"(alphabet: 2
name: grigorchuk-tilde
gen a: (0 1) ; [e, e]
gen b: e ; [a, c]
gen c: e ; [e, d]
gen d: e ; [e, b]
)";

constexpr std::string_view kGamma = R"(alphabet: 3
name: gamma
gen a: (0 1 2) ; [e, e, e]
gen t: e ; [a, e, t]
)";

constexpr std::string_view kGammaBar = R"(alphabet: 3
name: gamma-bar
gen a: (0 1 2) ; [e, e, e]
gen t: e ; [a, a, t]
)";

constexpr std::string_view kGammaBarBar = R"(alphabet: 3
name: gamma-bar-bar
gen a: (0 1 2) ; [e, e, e]
gen t: e ; [a, a a, t]
)";

constexpr std::string_view kOdometer = R"(alphabet: 2
name: odometer
gen t: (0 1) ; [e, t]
)";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t leading_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

struct PendingGenerator {
  std::string name;
  std::vector<int> root;
  std::vector<std::string_view> words;
  std::vector<std::size_t> word_columns;
  std::size_t line;
};

}  // namespace

GroupDef builtin(std::string_view name) {
  if (name == "grigorchuk") return parse_groupdef(kGrigorchuk);
  if (name == "grigorchuk-tilde") return parse_groupdef(kGrigorchukTilde);
  if (name == "gamma") return parse_groupdef(kGamma);
  if (name == "gamma-bar") return parse_groupdef(kGammaBar);
  if (name == "gamma-bar-bar") return parse_groupdef(kGammaBarBar);
  if (name == "odometer") return parse_groupdef(kOdometer);
  throw NameError("unknown builtin group '" + std::string(name) + "'");
}

std::span<const std::string_view> builtin_names() { return kBuiltinNames; }

std::vector<int> parse_permutation(std::string_view text, int degree, std::size_t line,
                                   std::size_t column_offset) {
  std::vector<int> perm(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw InvalidPermutation(what, line, column_offset + pos + 1);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip();
    if (pos != text.size()) fail("unexpected text after 'e'");
    return perm;
  }
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '(' or 'e'");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value >= degree) fail("point out of range");
        ++pos;
      }
      if (used[static_cast<std::size_t>(value)]) fail("point repeated; not a bijection");
      used[static_cast<std::size_t>(value)] = true;
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      perm[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    any = true;
    skip();
  }
  if (!any) fail("empty permutation");
  return perm;
}

std::string render_permutation(std::span<const int> perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

GroupDef parse_groupdef(std::string_view text) {
  GroupDef g;
  g.name = "custom";
  bool have_alphabet = false;
  std::vector<PendingGenerator> pending;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t indent = leading_space(raw);
    const std::string_view body = raw.substr(indent);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected ':'", line_no, indent + 1);
    const std::string_view key = trim(body.substr(0, colon));
    const std::size_t value_col = indent + colon + 1;
    const std::string_view value = body.substr(colon + 1);
    if (!have_alphabet) {
      if (key != "alphabet") {
        throw ParseError("first line must be 'alphabet: <d>'", line_no, indent + 1);
      }
      const std::string_view digits = trim(value);
      int d = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || d > 1000) {
          throw ParseError("alphabet size must be an integer", line_no,
                           value_col + leading_space(value) + 1);
        }
        d = d * 10 + (c - '0');
      }
      if (digits.empty() || d < 2) {
        throw ParseError("alphabet size must be at least 2", line_no,
                         value_col + leading_space(value) + 1);
      }
      g.degree = d;
      have_alphabet = true;
      continue;
    }
    if (key == "name") {
      g.name = std::string(trim(value));
      continue;
    }
    if (key.substr(0, 4) != "gen " && key.substr(0, 4) != "gen\t") {
      throw ParseError("expected 'gen <name>:'", line_no, indent + 1);
    }
    PendingGenerator p;
    p.line = line_no;
    p.name = std::string(trim(key.substr(4)));
    if (p.name.empty() || p.name == "e" ||
        !std::all_of(p.name.begin(), p.name.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        }) ||
        std::isdigit(static_cast<unsigned char>(p.name.front()))) {
      throw ParseError("invalid generator name '" + p.name + "'", line_no, indent + 5);
    }
    for (const auto& q : pending) {
      if (q.name == p.name) {
        throw ParseError("duplicate generator '" + p.name + "'", line_no, indent + 5);
      }
    }
    const auto semi = value.find(';');
    if (semi == std::string_view::npos) throw ParseError("expected ';'", line_no, value_col + 1);
    p.root = parse_permutation(value.substr(0, semi), g.degree, line_no, value_col);
    const std::string_view rest = value.substr(semi + 1);
    const std::size_t rest_col = value_col + semi + 1;
    const auto open = rest.find('[');
    const auto close = rest.rfind(']');
    if (open == std::string_view::npos) throw ParseError("expected '['", line_no, rest_col + 1);
    if (close == std::string_view::npos || close < open) {
      throw ParseError("expected ']'", line_no, rest_col + rest.size() + 1);
    }
    if (!trim(rest.substr(0, open)).empty()) {
      throw ParseError("unexpected text before '['", line_no, rest_col + 1);
    }
    if (!trim(rest.substr(close + 1)).empty()) {
      throw ParseError("unexpected text after ']'", line_no, rest_col + close + 2);
    }
    std::size_t item_start = open + 1;
    int depth = 0;
    for (std::size_t i = open + 1; i <= close; ++i) {
      const char c = rest[i];
      if (c == '(' || (c == '[' && i != open)) ++depth;
      if ((c == ')' || c == ']') && i != close) --depth;
      if ((c == ',' && depth == 0) || i == close) {
        p.words.push_back(rest.substr(item_start, i - item_start));
        p.word_columns.push_back(rest_col + item_start);
        item_start = i + 1;
      }
    }
    if (static_cast<int>(p.words.size()) != g.degree) {
      throw ParseError("expected " + std::to_string(g.degree) + " restriction words", line_no,
                       rest_col + open + 1);
    }
    pending.push_back(std::move(p));
  }
  if (!have_alphabet) throw ParseError("missing 'alphabet: <d>' line", line_no == 0 ? 1 : line_no, 1);

  std::vector<std::string> names;
  for (const auto& p : pending) names.push_back(p.name);
  for (const auto& p : pending) {
    GeneratorDef gen{p.name, p.root, {}};
    for (std::size_t i = 0; i < p.words.size(); ++i) {
      const std::string_view w = trim(p.words[i]);
      if (w.empty()) throw ParseError("empty restriction; use 'e'", p.line, p.word_columns[i] + 1);
      gen.restrictions.push_back(parse_word(p.words[i], names, p.line, p.word_columns[i]));
    }
    g.generators.push_back(std::move(gen));
  }
  validate(g);
  return g;
}

std::string render_groupdef(const GroupDef& g) {
  std::ostringstream out;
  out << "alphabet: " << g.degree << '\n';
  out << "name: " << g.name << '\n';
  const auto names = g.names();
  for (const auto& gen : g.generators) {
    out << "gen " << gen.name << ": " << render_permutation(gen.root) << " ; [";
    for (std::size_t i = 0; i < gen.restrictions.size(); ++i) {
      if (i) out << ", ";
      out << render_word(gen.restrictions[i], names);
    }
    out << "]\n";
  }
  return out.str();
}

Word NamedMorphism::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const Word& img = images.at(l.generator());
    if (l.is_inverse()) {
      const Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return free_reduce(out);
}

NamedMorphism grigorchuk_embedding() {
  NamedMorphism m{builtin("grigorchuk"), builtin("grigorchuk-tilde"), {}};
  for (std::string_view image : {"a", "b d", "c b", "d c"}) m.images.push_back(m.target.word(image));
  return m;
}

std::vector<RelatorCheck> verify_morphism(const NamedMorphism& m, std::span<const Word> relators,
                                          std::size_t budget) {
  if (m.images.size() != m.source.generators.size()) {
    throw DomainError("every source generator needs an image");
  }
  SelfSimilarGroup target(m.target);
  std::vector<RelatorCheck> out;
  for (const Word& r : relators) {
    RelatorCheck c{r, m.apply(r), Decision::exhausted};
    c.trivial = target.is_trivial(c.image, budget);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace arbor
