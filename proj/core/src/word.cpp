#include "arbor/word.hpp"

#include <algorithm>
#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter l : w) {
    h ^= l.code + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word power(const Word& w, long k) {
  const Word base = k < 0 ? inverse(w) : w;
  const long count = k < 0 ? -k : k;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(inverse(u), inverse(v)), concat(u, v));
}

Word conjugate(const Word& g, const Word& h) { return concat(concat(h, g), inverse(h)); }

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> names, std::size_t line,
             std::size_t column_offset)
      : text_(text), names_(names), line_(line), offset_(column_offset) {}

  Word parse_all() {
    Word w = parse_sequence();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Word parse_sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == ')' || c == ']' || c == ',') break;
      Word f = parse_factor();
      out.insert(out.end(), f.begin(), f.end());
    }
    return out;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      return power(atom, parse_exponent());
    }
    return atom;
  }

  long parse_exponent() {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer exponent");
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word parse_atom() {
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_sequence();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_sequence();
      expect(',');
      Word v = parse_sequence();
      expect(']');
      return commutator(u, v);
    }
    if (!is_name_start(c)) fail("unexpected character '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "e") return {};
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      throw UndeclaredGenerator("undeclared generator '" + std::string(name) + "'", line_,
                                offset_ + start + 1);
    }
    return {Letter::of(static_cast<std::size_t>(it - names_.begin()))};
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> names, std::size_t line,
                std::size_t column_offset) {
  return WordParser(text, names, line, column_offset).parse_all();
}

std::string render_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += names[l.generator()];
    if (l.is_inverse()) out += "^-1";
  }
  return out;
}

}  // namespace arbor
