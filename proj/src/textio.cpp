#include "eps/textio.hpp"

#include <algorithm>
#include <cctype>

namespace eps {

namespace {

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + t.text + "'";
}

bool is_word_letter(const std::string& s) {
  return s.size() >= 2 && s[0] == 'x' &&
         std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i];
  }
  return s;
}

Json trees_to_json(std::span<const Forest::Node> nodes, std::size_t begin, std::size_t end) {
  Json arr = Json::array();
  for (std::size_t i = begin; i < end; i += nodes[i].size) {
    arr.push_back(Json{{"d", nodes[i].dec.name()}, {"c", trees_to_json(nodes, i + 1, i + nodes[i].size)}});
  }
  return arr;
}

void trees_from_json(const Json& arr, const Alphabets& alphabets, const std::string& pointer,
                     std::vector<Forest::Node>& out) {
  if (!arr.is_array()) throw SchemaError(pointer, "expected an array of trees");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = pointer + "/" + std::to_string(i);
    const auto& t = arr[i];
    if (!t.is_object()) throw SchemaError(where, "expected a tree object");
    if (!t.contains("d") || !t["d"].is_string()) throw SchemaError(where + "/d", "expected a label string");
    const auto label = t["d"].get<std::string>();
    auto dec = alphabets.lookup(label);
    if (!dec) throw SchemaError(where + "/d", "unknown label '" + label + "'");
    const Json children = t.contains("c") ? t["c"] : Json::array();
    std::size_t pos = out.size();
    out.push_back({*dec, 1});
    trees_from_json(children, alphabets, where + "/c", out);
    out[pos].size = static_cast<std::uint32_t>(out.size() - pos);
    if (out[pos].size > 1 && dec->kind == DecorationKind::X) {
      throw SchemaError(where + "/c", "X-label '" + label + "' cannot have children");
    }
  }
}

void parse_trees(const ForestSyntax& syn, Lexer& lx, std::vector<Forest::Node>& out) {
  while (lx.at(TokenKind::Ident)) {
    Token label = lx.next();
    auto dec = syn.alphabets->lookup(label.text);
    if (!dec) lx.fail(label, {"declared label"}, "unknown label '" + label.text + "'");
    std::size_t pos = out.size();
    out.push_back({*dec, 1});
    if (lx.at(TokenKind::LParen)) {
      lx.next();
      if (lx.at(TokenKind::Number) && lx.peek().text == "1") {
        lx.next();
      } else {
        if (!lx.at(TokenKind::Ident)) lx.fail(lx.peek(), {"identifier", "'1'"}, "expected a forest");
        parse_trees(syn, lx, out);
      }
      lx.expect(TokenKind::RParen, "')'");
      out[pos].size = static_cast<std::uint32_t>(out.size() - pos);
      if (out[pos].size > 1 && dec->kind == DecorationKind::X) {
        lx.fail(label, {"Omega-label"}, "X-label '" + label.text + "' cannot be an internal vertex");
      }
    }
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message +
                         (expected.empty() ? std::string() : " (expected " + join(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Lexer::Lexer(std::string_view src) {
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](TokenKind k, std::string text, std::size_t l, std::size_t c) {
    tokens_.push_back(Token{k, std::move(text), l, c});
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      push(TokenKind::Ident, std::string(src.substr(i, j - i)), line, start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(TokenKind::Number, std::string(src.substr(i, j - i)), line, start_col);
      col += j - i;
      i = j;
      continue;
    }
    TokenKind k;
    switch (ch) {
      case '(': k = TokenKind::LParen; break;
      case ')': k = TokenKind::RParen; break;
      case '+': k = TokenKind::Plus; break;
      case '-': k = TokenKind::Minus; break;
      case '*': k = TokenKind::Star; break;
      case '/': k = TokenKind::Slash; break;
      case '#': k = TokenKind::Hash; break;
      case '^': k = TokenKind::Caret; break;
      default:
        throw ParseError(line, start_col, {}, std::string("unexpected character '") + ch + "'");
    }
    push(k, std::string(1, ch), line, start_col);
    ++col;
    ++i;
  }
  push(TokenKind::End, "", line, col);
}

const Token& Lexer::peek(std::size_t ahead) const {
  std::size_t idx = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[idx];
}

Token Lexer::next() {
  Token t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

Token Lexer::expect(TokenKind k, const std::string& what) {
  if (!at(k)) fail(peek(), {what}, "unexpected " + describe(peek()));
  return next();
}

void Lexer::fail(const Token& t, std::vector<std::string> expected, const std::string& message) const {
  throw ParseError(t.line, t.column, std::move(expected), message);
}

bool ForestSyntax::starts(const Lexer& lx) const {
  return lx.at(TokenKind::Ident) || (lx.at(TokenKind::Number) && lx.peek().text == "1");
}

Forest ForestSyntax::parse(Lexer& lx) const {
  if (lx.at(TokenKind::Number) && lx.peek().text == "1") {
    lx.next();
    return Forest{};
  }
  if (!lx.at(TokenKind::Ident)) lx.fail(lx.peek(), {"identifier", "'1'"}, "expected a forest");
  std::vector<Forest::Node> nodes;
  parse_trees(*this, lx, nodes);
  return Forest::from_nodes(std::move(nodes));
}

bool MonomialSyntax::starts(const Lexer& lx) const {
  return (lx.at(TokenKind::Ident) && lx.peek().text == "x") || (lx.at(TokenKind::Number) && lx.peek().text == "1");
}

Monomial MonomialSyntax::parse(Lexer& lx) const {
  if (lx.at(TokenKind::Number) && lx.peek().text == "1") {
    lx.next();
    return Monomial{0};
  }
  Token x = lx.next();
  if (x.kind != TokenKind::Ident || x.text != "x") lx.fail(x, {"'x'", "'1'"}, "expected a monomial");
  if (!lx.at(TokenKind::Caret)) return Monomial{1};
  lx.next();
  Token e = lx.expect(TokenKind::Number, "exponent");
  unsigned long n = 0;
  try {
    n = std::stoul(e.text);
  } catch (const std::exception&) {
    lx.fail(e, {"exponent"}, "exponent out of range");
  }
  if (n > 100000) lx.fail(e, {"exponent"}, "exponent out of range");
  return Monomial{static_cast<std::uint32_t>(n)};
}

bool WordSyntax::starts(const Lexer& lx) const {
  return (lx.at(TokenKind::Ident) && is_word_letter(lx.peek().text)) ||
         (lx.at(TokenKind::Number) && lx.peek().text == "1");
}

Word WordSyntax::parse(Lexer& lx) const {
  if (lx.at(TokenKind::Number) && lx.peek().text == "1") {
    lx.next();
    return Word{};
  }
  Word w;
  if (!lx.at(TokenKind::Ident)) lx.fail(lx.peek(), {"letter x<n>", "'1'"}, "expected a word");
  while (lx.at(TokenKind::Ident)) {
    Token t = lx.next();
    if (!is_word_letter(t.text)) lx.fail(t, {"letter x<n>"}, "'" + t.text + "' is not a letter x<n>");
    unsigned long n = 0;
    try {
      n = std::stoul(t.text.substr(1));
    } catch (const std::exception&) {
      lx.fail(t, {"letter x<n>"}, "letter index out of range");
    }
    if (n > 1000000) lx.fail(t, {"letter x<n>"}, "letter index out of range");
    if (n > 0) w.letters.push_back(static_cast<std::uint32_t>(n));  // x0 = 1
  }
  return w;
}

bool PathSyntax::starts(const Lexer& lx) const { return lx.at(TokenKind::Ident); }

Path PathSyntax::parse(Lexer& lx) const {
  std::vector<Token> names;
  while (lx.at(TokenKind::Ident)) names.push_back(lx.next());
  if (names.empty()) lx.fail(lx.peek(), {"vertex or arrow name"}, "expected a path");
  if (names.size() == 1 && quiver->vertex_index(names[0].text)) return trivial_path(*quiver, names[0].text);
  std::vector<std::string> arrows;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!quiver->arrow_index(names[i].text)) {
      lx.fail(names[i], {"arrow name"}, "'" + names[i].text + "' is not an arrow of the quiver");
    }
    if (i > 0) {
      const auto& prev = quiver->arrows[*quiver->arrow_index(names[i - 1].text)];
      const auto& cur = quiver->arrows[*quiver->arrow_index(names[i].text)];
      if (prev.target != cur.source) {
        lx.fail(names[i], {"composable arrow"},
                "arrows '" + names[i - 1].text + "' and '" + names[i].text + "' are not composable");
      }
    }
    arrows.push_back(names[i].text);
  }
  return make_path(*quiver, arrows);
}

namespace detail {

bool coefficient_ahead(const Lexer& lx) {
  if (!lx.at(TokenKind::Number)) return false;
  if (lx.at(TokenKind::Star, 1)) return true;
  return lx.at(TokenKind::Slash, 1) && lx.at(TokenKind::Number, 2) && lx.at(TokenKind::Star, 3);
}

Rat parse_coefficient(Lexer& lx) {
  Token num = lx.expect(TokenKind::Number, "coefficient");
  std::string text = num.text;
  if (lx.at(TokenKind::Slash)) {
    lx.next();
    Token den = lx.expect(TokenKind::Number, "denominator");
    text += "/" + den.text;
    if (std::all_of(den.text.begin(), den.text.end(), [](char c) { return c == '0'; })) {
      lx.fail(den, {"nonzero denominator"}, "zero denominator");
    }
  }
  lx.expect(TokenKind::Star, "'*'");
  return Rat::parse(text);
}

}  // namespace detail

Forest parse_forest(std::string_view text, const Alphabets& alphabets) {
  ForestSyntax syn{&alphabets};
  Lexer lx(text);
  if (!syn.starts(lx)) lx.fail(lx.peek(), {"identifier", "'1'"}, "expected a forest");
  Forest f = syn.parse(lx);
  lx.expect(TokenKind::End, "end of input");
  return f;
}

LinComb<Forest> parse_lincomb(std::string_view text, const Alphabets& alphabets) {
  return parse_lincomb_with(ForestSyntax{&alphabets}, text);
}

LinComb<Tensor2<Forest>> parse_tensor(std::string_view text, const Alphabets& alphabets) {
  return parse_tensor_with(ForestSyntax{&alphabets}, text);
}

std::string basis_text(const Forest& f) { return f.to_string(); }

std::string basis_text(const Monomial& m) {
  if (m.exponent == 0) return "1";
  if (m.exponent == 1) return "x";
  return "x^" + std::to_string(m.exponent);
}

std::string basis_text(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s.push_back(' ');
    s += "x" + std::to_string(w.letters[i]);
  }
  return s;
}

std::string basis_text(const Path& p) {
  if (p.trivial()) return p.vertex;
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s.push_back(' ');
    s += p.arrows[i];
  }
  return s;
}

bool basis_less(const Forest& a, const Forest& b) { return canonical_less(a, b); }
bool basis_less(const Monomial& a, const Monomial& b) { return a.exponent < b.exponent; }
bool basis_less(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}
bool basis_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.trivial()) return a.vertex < b.vertex;
  return a.arrows < b.arrows;
}

Json basis_to_json(const Forest& f) { return Json{{"forest", trees_to_json(f.nodes(), 0, f.vertex_count())}}; }
Json basis_to_json(const Monomial& m) { return Json{{"monomial", m.exponent}}; }
Json basis_to_json(const Word& w) { return Json{{"word", w.letters}}; }
Json basis_to_json(const Path& p) {
  if (p.trivial()) return Json{{"path", Json{{"vertex", p.vertex}}}};
  return Json{{"path", Json{{"arrows", p.arrows}}}};
}

void basis_from_json(const Json& j, const JsonContext& ctx, const std::string& pointer, Forest& out) {
  if (!ctx.alphabets) throw SchemaError(pointer, "no alphabets to decode forests");
  if (!j.is_object() || !j.contains("forest")) throw SchemaError(pointer, "expected {\"forest\": [...]}");
  std::vector<Forest::Node> nodes;
  trees_from_json(j["forest"], *ctx.alphabets, pointer + "/forest", nodes);
  out = Forest::from_nodes(std::move(nodes));
}

void basis_from_json(const Json& j, const JsonContext&, const std::string& pointer, Monomial& out) {
  if (!j.is_object() || !j.contains("monomial") || !j["monomial"].is_number_unsigned()) {
    throw SchemaError(pointer + "/monomial", "expected a nonnegative integer");
  }
  out = Monomial{j["monomial"].get<std::uint32_t>()};
}

void basis_from_json(const Json& j, const JsonContext&, const std::string& pointer, Word& out) {
  if (!j.is_object() || !j.contains("word") || !j["word"].is_array()) {
    throw SchemaError(pointer + "/word", "expected an array of positive integers");
  }
  Word w;
  for (std::size_t i = 0; i < j["word"].size(); ++i) {
    const auto& l = j["word"][i];
    if (!l.is_number_unsigned() || l.get<std::uint64_t>() == 0) {
      throw SchemaError(pointer + "/word/" + std::to_string(i), "expected a positive integer");
    }
    w.letters.push_back(l.get<std::uint32_t>());
  }
  out = std::move(w);
}

void basis_from_json(const Json& j, const JsonContext& ctx, const std::string& pointer, Path& out) {
  if (!ctx.quiver) throw SchemaError(pointer, "no quiver to decode paths");
  if (!j.is_object() || !j.contains("path") || !j["path"].is_object()) {
    throw SchemaError(pointer + "/path", "expected an object");
  }
  const auto& p = j["path"];
  try {
    if (p.contains("vertex") && p["vertex"].is_string()) {
      out = trivial_path(*ctx.quiver, p["vertex"].get<std::string>());
    } else if (p.contains("arrows") && p["arrows"].is_array()) {
      out = make_path(*ctx.quiver, p["arrows"].get<std::vector<std::string>>());
    } else {
      throw SchemaError(pointer + "/path", "expected \"vertex\" or \"arrows\"");
    }
  } catch (const std::invalid_argument& e) {
    throw SchemaError(pointer + "/path", e.what());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(pointer + "/path/arrows", e.what());
  }
}

Json forest_to_json(const Forest& f) {
  Json j = basis_to_json(f);
  j["schema"] = kSchemaVersion;
  return j;
}

Forest forest_from_json(const Json& doc, const Alphabets& alphabets) {
  if (doc.is_object() && doc.contains("schema") && doc["schema"] != kSchemaVersion) {
    throw SchemaError("/schema", "unsupported schema version");
  }
  Forest f;
  basis_from_json(doc, JsonContext{&alphabets, nullptr}, "", f);
  return f;
}

}  // namespace eps
