#include "arbor/lpres.hpp"

#include <algorithm>
#include <sstream>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

/// Splits on `sep` outside brackets and parentheses; yields (piece, column offset).
std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view s, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.emplace_back(s.substr(start, i - start), start);
      start = i + 1;
    } else if (s[i] == '(' || s[i] == '[') {
      ++depth;
    } else if (s[i] == ')' || s[i] == ']') {
      --depth;
    }
  }
  return out;
}

std::vector<Word> parse_list(std::string_view body, std::size_t column, std::size_t line,
                             std::span<const std::string> names) {
  std::vector<Word> out;
  if (trim(body).empty()) return out;
  for (auto [piece, off] : split_top(body, ',')) {
    std::size_t col = column + off;
    const auto text = trim(piece, &col);
    if (text.empty()) throw ParseError("empty relator", line, col + 1);
    out.push_back(parse_word(text, names, line, col));
  }
  return out;
}

std::string join(const std::vector<Word>& words, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += render_word(words[i], names);
  }
  return out;
}

constexpr std::string_view kGrigorchuk = R"(fixed: a^2, b^2, c^2, d^2, b c d
iterated: (a d)^4, (a d a c a c)^4
subst: a -> a c a; b -> d; c -> b; d -> c
)";

constexpr std::string_view kGrigorchukTilde = R"(fixed: a^2, b^2, c^2, d^2, [b, c], [b, d], [c, d]
iterated: (a c)^4, (a d)^4, (a c a d)^2, (a b)^8, (a b a b a c)^4, (a b a b a d)^4, (a b a b a c a b a b a d)^2
subst: a -> a b a; b -> d; c -> b; d -> c
)";

}  // namespace

LPresentation parse_lpresentation(std::string_view text, std::span<const std::string> names) {
  LPresentation p;
  p.names.assign(names.begin(), names.end());
  p.substitution.resize(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) p.substitution[i] = {Letter::of(i)};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t col = 0;
    const auto content = trim(line, &col);
    if (content.empty()) continue;
    const auto colon = content.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'fixed:', 'iterated:' or 'subst:'", line_no, col + 1);
    const auto key = trim(content.substr(0, colon));
    const auto body = content.substr(colon + 1);
    const std::size_t body_col = col + colon + 1;
    if (key == "fixed") {
      auto words = parse_list(body, body_col, line_no, names);
      p.fixed.insert(p.fixed.end(), words.begin(), words.end());
    } else if (key == "iterated") {
      auto words = parse_list(body, body_col, line_no, names);
      p.iterated.insert(p.iterated.end(), words.begin(), words.end());
    } else if (key == "subst") {
      for (auto [piece, off] : split_top(body, ';')) {
        std::size_t pcol = body_col + off;
        const auto rule = trim(piece, &pcol);
        if (rule.empty()) continue;
        const auto arrow = rule.find("->");
        if (arrow == std::string_view::npos) throw ParseError("expected '->'", line_no, pcol + 1);
        const auto lhs = trim(rule.substr(0, arrow));
        const auto it = std::find(names.begin(), names.end(), lhs);
        if (it == names.end()) {
          throw UndeclaredGenerator("undeclared generator '" + std::string(lhs) + "'", line_no, pcol + 1);
        }
        std::size_t rcol = pcol + arrow + 2;
        const auto rhs = trim(rule.substr(arrow + 2), &rcol);
        p.substitution[static_cast<std::size_t>(it - names.begin())] = parse_word(rhs, names, line_no, rcol);
      }
    } else {
      throw ParseError("unknown section '" + std::string(key) + "'", line_no, col + 1);
    }
    if (end == text.size()) break;
  }
  return p;
}

std::string render_lpresentation(const LPresentation& p) {
  std::ostringstream out;
  out << "fixed: " << join(p.fixed, p.names) << '\n';
  out << "iterated: " << join(p.iterated, p.names) << '\n';
  out << "subst: ";
  for (std::size_t i = 0; i < p.names.size(); ++i) {
    if (i) out << "; ";
    out << p.names[i] << " -> " << render_word(p.substitution[i], p.names);
  }
  out << '\n';
  return out.str();
}

LPresentation builtin_lpresentation(std::string_view group_name) {
  const std::vector<std::string> names{"a", "b", "c", "d"};
  if (group_name == "grigorchuk") return parse_lpresentation(kGrigorchuk, names);
  if (group_name == "grigorchuk-tilde") return parse_lpresentation(kGrigorchukTilde, names);
  throw NameError("no L-presentation recorded for '" + std::string(group_name) + "'");
}

Word substitute(const LPresentation& p, const Word& w, unsigned k) {
  Word cur = free_reduce(w);
  for (unsigned step = 0; step < k; ++step) {
    Word next;
    for (Letter l : cur) {
      const Word& image = p.substitution.at(l.generator());
      if (l.is_inverse()) {
        const Word inv = inverse(image);
        next.insert(next.end(), inv.begin(), inv.end());
      } else {
        next.insert(next.end(), image.begin(), image.end());
      }
    }
    cur = free_reduce(next);
  }
  return cur;
}

namespace {

Word translate(const Word& w, const std::vector<std::size_t>& map) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(Letter::of(map[l.generator()], l.is_inverse()));
  return out;
}

std::vector<std::size_t> generator_map(const SelfSimilarGroup& group, const LPresentation& p) {
  std::vector<std::size_t> map;
  for (const auto& name : p.names) {
    const auto idx = group.def().find(name);
    if (!idx) throw NameError("generator '" + name + "' is not in group '" + group.def().name + "'");
    map.push_back(*idx);
  }
  return map;
}

}  // namespace

std::size_t LPresentationReport::count(Decision d) const {
  return static_cast<std::size_t>(
      std::count_if(relators.begin(), relators.end(), [d](const auto& r) { return r.trivial == d; }));
}

std::vector<RelatorResult> relator_family(const SelfSimilarGroup& group, const LPresentation& p,
                                          unsigned max_iter) {
  const auto map = generator_map(group, p);
  std::vector<RelatorResult> out;
  for (std::size_t i = 0; i < p.fixed.size(); ++i) {
    out.push_back({i, false, 0, translate(p.fixed[i], map), Decision::exhausted});
  }
  for (std::size_t i = 0; i < p.iterated.size(); ++i) {
    for (unsigned k = 0; k <= max_iter; ++k) {
      out.push_back({i, true, k, translate(substitute(p, p.iterated[i], k), map), Decision::exhausted});
    }
  }
  return out;
}

LPresentationReport verify_lpresentation(SelfSimilarGroup& group, const LPresentation& p,
                                         unsigned max_iter, std::size_t budget) {
  LPresentationReport report;
  report.relators = relator_family(group, p, max_iter);
  for (auto& r : report.relators) r.trivial = group.is_trivial(r.word, budget);
  return report;
}

EndomorphismReport verify_substitution_endomorphism(SelfSimilarGroup& group, const LPresentation& p,
                                                    std::span<const Word> sample, unsigned max_iter,
                                                    std::size_t budget) {
  EndomorphismReport report;
  const auto map = generator_map(group, p);
  report.homomorphism = true;
  auto check = [&](const Word& relator) {
    const Word image = translate(substitute(p, relator, 1), map);
    ++report.relators_checked;
    const Decision d = group.is_trivial(image, budget);
    if (d == Decision::exhausted) report.exhausted = true;
    if (d == Decision::no && report.homomorphism) {
      report.homomorphism = false;
      report.counterexample = relator;
    }
  };
  for (const auto& r : p.fixed) check(r);
  for (const auto& r : p.iterated) {
    for (unsigned k = 0; k <= max_iter; ++k) check(substitute(p, r, k));
  }
  report.expanding = true;
  for (const auto& w : sample) {
    const Word before = group.reduce(translate(w, map));
    const Word after = group.reduce(translate(substitute(p, w, 1), map));
    if (after.size() < before.size()) {
      report.expanding = false;
      if (!report.counterexample) report.counterexample = w;
      break;
    }
  }
  return report;
}

ParityReport parity_check(std::span<const Word> sample) {
  ParityReport report;
  for (const auto& w : sample) {
    ++report.checked;
    if (w.size() % 2 != 0) {
      report.all_even = false;
      report.counterexample = w;
      break;
    }
  }
  return report;
}

}  // namespace arbor
