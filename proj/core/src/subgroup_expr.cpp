#include "arbor/subgroup_expr.hpp"

#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

SubgroupExpr SubgroupExpr::whole() { return {}; }

SubgroupExpr SubgroupExpr::gen(std::vector<Word> words) {
  SubgroupExpr e;
  e.kind = Kind::gen;
  e.words = std::move(words);
  return e;
}

SubgroupExpr SubgroupExpr::normal_closure(std::vector<Word> words) {
  SubgroupExpr e;
  e.kind = Kind::normal_closure;
  e.words = std::move(words);
  return e;
}

SubgroupExpr SubgroupExpr::commutator(SubgroupExpr a, SubgroupExpr b) {
  SubgroupExpr e;
  e.kind = Kind::commutator;
  e.args = {std::move(a), std::move(b)};
  return e;
}

SubgroupExpr SubgroupExpr::level_stab(int m) {
  SubgroupExpr e;
  e.kind = Kind::level_stab;
  e.number = m;
  return e;
}

SubgroupExpr SubgroupExpr::vertex_stab(Vertex v) {
  SubgroupExpr e;
  e.kind = Kind::vertex_stab;
  e.vertex = std::move(v);
  return e;
}

SubgroupExpr SubgroupExpr::rigid_stab(Vertex v) {
  SubgroupExpr e;
  e.kind = Kind::rigid_stab;
  e.vertex = std::move(v);
  return e;
}

SubgroupExpr SubgroupExpr::power(SubgroupExpr inner, int k) {
  SubgroupExpr e;
  e.kind = Kind::power;
  e.args = {std::move(inner)};
  e.number = k;
  return e;
}

SubgroupExpr SubgroupExpr::product(std::vector<SubgroupExpr> parts) {
  SubgroupExpr e;
  e.kind = Kind::product;
  e.args = std::move(parts);
  return e;
}

SubgroupExpr SubgroupExpr::at_vertex(SubgroupExpr inner, Vertex v) {
  SubgroupExpr e;
  e.kind = Kind::at_vertex;
  e.args = {std::move(inner)};
  e.vertex = std::move(v);
  return e;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const GroupDef& group)
      : text_(text), group_(group), names_(group.names()) {}

  SubgroupExpr parse_all() {
    SubgroupExpr e = parse_expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a subgroup constructor");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 100000) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return value;
  }

  Vertex vertex_until(char close) {
    Vertex v;
    for (;;) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == close) return v;
      const std::size_t start = pos_;
      const int x = integer();
      if (x >= group_.degree) {
        pos_ = start;
        fail("vertex letter out of range");
      }
      v.push_back(x);
    }
  }

  std::vector<Word> word_list() {
    expect('{');
    std::vector<Word> out;
    std::size_t start = pos_;
    int depth = 0;
    for (; pos_ < text_.size(); ++pos_) {
      const char c = text_[pos_];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if ((c == ',' && depth == 0) || c == '}') {
        const std::string_view item = text_.substr(start, pos_ - start);
        bool blank = true;
        for (char x : item) blank = blank && std::isspace(static_cast<unsigned char>(x));
        if (!blank) out.push_back(parse_word(item, names_, 1, start));
        start = pos_ + 1;
        if (c == '}') {
          ++pos_;
          return out;
        }
      }
    }
    fail("expected '}'");
  }

  SubgroupExpr parse_expr() {
    const std::size_t at = pos_;
    const std::string name = identifier();
    if (name == "whole") return SubgroupExpr::whole();
    if (name == "gen") return SubgroupExpr::gen(word_list());
    if (name == "ncl") return SubgroupExpr::normal_closure(word_list());
    if (name == "comm") {
      expect('(');
      SubgroupExpr a = parse_expr();
      expect(',');
      SubgroupExpr b = parse_expr();
      expect(')');
      return SubgroupExpr::commutator(std::move(a), std::move(b));
    }
    if (name == "stab") {
      expect('(');
      const int m = integer();
      expect(')');
      return SubgroupExpr::level_stab(m);
    }
    if (name == "vstab" || name == "rist") {
      expect('(');
      Vertex v = vertex_until(')');
      expect(')');
      return name == "vstab" ? SubgroupExpr::vertex_stab(std::move(v))
                             : SubgroupExpr::rigid_stab(std::move(v));
    }
    if (name == "pow") {
      expect('(');
      SubgroupExpr a = parse_expr();
      expect(',');
      const int k = integer();
      expect(')');
      return SubgroupExpr::power(std::move(a), k);
    }
    if (name == "prod") {
      expect('(');
      std::vector<SubgroupExpr> parts{parse_expr()};
      for (;;) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          parts.push_back(parse_expr());
          continue;
        }
        break;
      }
      expect(')');
      return SubgroupExpr::product(std::move(parts));
    }
    if (name == "at") {
      expect('(');
      SubgroupExpr a = parse_expr();
      expect(',');
      Vertex v = vertex_until(')');
      expect(')');
      return SubgroupExpr::at_vertex(std::move(a), std::move(v));
    }
    pos_ = at;
    fail("unknown subgroup constructor '" + name + "'");
  }

  std::string_view text_;
  const GroupDef& group_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

std::string render_vertex(const Vertex& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string render_words(const std::vector<Word>& words, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ", ";
    out += render_word(words[i], names);
  }
  return out + "}";
}

std::string render_impl(const SubgroupExpr& e, const std::vector<std::string>& names) {
  using K = SubgroupExpr::Kind;
  switch (e.kind) {
    case K::whole: return "whole";
    case K::gen: return "gen" + render_words(e.words, names);
    case K::normal_closure: return "ncl" + render_words(e.words, names);
    case K::commutator:
      return "comm(" + render_impl(e.args[0], names) + ", " + render_impl(e.args[1], names) + ")";
    case K::level_stab: return "stab(" + std::to_string(e.number) + ")";
    case K::vertex_stab: return "vstab(" + render_vertex(e.vertex) + ")";
    case K::rigid_stab: return "rist(" + render_vertex(e.vertex) + ")";
    case K::power: return "pow(" + render_impl(e.args[0], names) + ", " + std::to_string(e.number) + ")";
    case K::product: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += render_impl(e.args[i], names);
      }
      return out + ")";
    }
    case K::at_vertex: return "at(" + render_impl(e.args[0], names) + ", " + render_vertex(e.vertex) + ")";
  }
  return "whole";
}

}  // namespace

SubgroupExpr parse_subgroup_expr(std::string_view text, const GroupDef& group) {
  return ExprParser(text, group).parse_all();
}

std::string render_subgroup_expr(const SubgroupExpr& e, const GroupDef& group) {
  return render_impl(e, group.names());
}

}  // namespace arbor
