#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "eps/errors.hpp"
#include "eps/forest.hpp"
#include "eps/freemod.hpp"
#include "eps/instances.hpp"

namespace eps {

inline constexpr const char* kSchemaVersion = "eps-forest/1";

// ---------------------------------------------------------------------------
// Basis-level text and ordering.

std::string basis_text(const Forest& f);
std::string basis_text(const Monomial& m);
std::string basis_text(const Word& w);
std::string basis_text(const Path& p);

bool basis_less(const Forest& a, const Forest& b);
bool basis_less(const Monomial& a, const Monomial& b);
bool basis_less(const Word& a, const Word& b);
bool basis_less(const Path& a, const Path& b);

template <class T>
struct is_tensor : std::false_type {};
template <class L, class R>
struct is_tensor<Tensor2<L, R>> : std::true_type {};
template <class A, class B, class C>
struct is_tensor<Tensor3<A, B, C>> : std::true_type {};

template <class T>
std::string tensor_factor_text(const T& x) {
  if constexpr (is_tensor<T>::value) {
    return "(" + basis_text(x) + ")";
  } else {
    return basis_text(x);
  }
}

template <class L, class R>
std::string basis_text(const Tensor2<L, R>& t) {
  return tensor_factor_text(t.left) + " # " + tensor_factor_text(t.right);
}

template <class A, class B, class C>
std::string basis_text(const Tensor3<A, B, C>& t) {
  return tensor_factor_text(t.first) + " # " + tensor_factor_text(t.second) + " # " + tensor_factor_text(t.third);
}

template <class L, class R>
bool basis_less(const Tensor2<L, R>& a, const Tensor2<L, R>& b) {
  if (basis_less(a.left, b.left)) return true;
  if (basis_less(b.left, a.left)) return false;
  return basis_less(a.right, b.right);
}

template <class A, class B, class C>
bool basis_less(const Tensor3<A, B, C>& a, const Tensor3<A, B, C>& b) {
  if (basis_less(a.first, b.first)) return true;
  if (basis_less(b.first, a.first)) return false;
  if (basis_less(a.second, b.second)) return true;
  if (basis_less(b.second, a.second)) return false;
  return basis_less(a.third, b.third);
}

/// Canonical text of a linear combination: terms in canonical basis order,
/// "c * e" for coefficients other than ±1, "0" for the zero combination.
template <class B>
std::string format_lincomb(const LinComb<B>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : a.sorted([](const B& x, const B& y) { return basis_less(x, y); })) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rat mag = negative ? -c : c;
    if (!mag.is_one()) out += mag.to_string() + " * ";
    out += basis_text(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing.

enum class TokenKind { Ident, Number, LParen, RParen, Plus, Minus, Star, Slash, Hash, Caret, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view source);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at(TokenKind k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  Token expect(TokenKind k, const std::string& what);
  [[noreturn]] void fail(const Token& at, std::vector<std::string> expected, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// How a basis element of one algebra is written.
struct ForestSyntax {
  const Alphabets* alphabets;
  using Basis = Forest;
  bool starts(const Lexer& lx) const;
  Forest parse(Lexer& lx) const;
};

struct MonomialSyntax {
  using Basis = Monomial;
  bool starts(const Lexer& lx) const;
  Monomial parse(Lexer& lx) const;
};

struct WordSyntax {
  using Basis = Word;
  bool starts(const Lexer& lx) const;
  Word parse(Lexer& lx) const;
};

struct PathSyntax {
  const QuiverSpec* quiver;
  using Basis = Path;
  bool starts(const Lexer& lx) const;
  Path parse(Lexer& lx) const;
};

namespace detail {

bool coefficient_ahead(const Lexer& lx);
Rat parse_coefficient(Lexer& lx);

template <class Syntax>
void expect_basis(const Syntax& syn, Lexer& lx) {
  if (!syn.starts(lx)) lx.fail(lx.peek(), {"basis element"}, "expected a basis element");
}

template <class Syntax>
LinComb<typename Syntax::Basis> parse_lincomb_body(const Syntax& syn, Lexer& lx);

template <class Syntax>
LinComb<typename Syntax::Basis> parse_side(const Syntax& syn, Lexer& lx) {
  if (lx.at(TokenKind::LParen)) {
    lx.next();
    auto inner = parse_lincomb_body(syn, lx);
    lx.expect(TokenKind::RParen, "')'");
    return inner;
  }
  if (lx.at(TokenKind::Number) && lx.peek().text == "0") {
    lx.next();
    return {};
  }
  expect_basis(syn, lx);
  return LinComb<typename Syntax::Basis>(syn.parse(lx));
}

template <class Syntax>
LinComb<typename Syntax::Basis> parse_lincomb_body(const Syntax& syn, Lexer& lx) {
  using B = typename Syntax::Basis;
  LinComb<B> out;
  Rat sign(1);
  if (lx.at(TokenKind::Minus) || lx.at(TokenKind::Plus)) sign = lx.next().kind == TokenKind::Minus ? Rat(-1) : Rat(1);
  if (lx.at(TokenKind::Number) && lx.peek().text == "0" && !coefficient_ahead(lx)) {
    lx.next();
  } else {
    while (true) {
      Rat c = coefficient_ahead(lx) ? parse_coefficient(lx) : Rat(1);
      expect_basis(syn, lx);
      out.add(syn.parse(lx), sign * c);
      if (!(lx.at(TokenKind::Plus) || lx.at(TokenKind::Minus))) break;
      sign = lx.next().kind == TokenKind::Minus ? Rat(-1) : Rat(1);
    }
  }
  return out;
}

template <class Syntax>
LinComb<Tensor2<typename Syntax::Basis>> parse_tensor_body(const Syntax& syn, Lexer& lx) {
  using B = typename Syntax::Basis;
  LinComb<Tensor2<B>> out;
  Rat sign(1);
  if (lx.at(TokenKind::Minus) || lx.at(TokenKind::Plus)) sign = lx.next().kind == TokenKind::Minus ? Rat(-1) : Rat(1);
  if (lx.at(TokenKind::Number) && lx.peek().text == "0" && !lx.at(TokenKind::Hash, 1) && !coefficient_ahead(lx)) {
    lx.next();
    return out;
  }
  while (true) {
    Rat c = coefficient_ahead(lx) ? parse_coefficient(lx) : Rat(1);
    auto left = parse_side(syn, lx);
    lx.expect(TokenKind::Hash, "'#'");
    auto right = parse_side(syn, lx);
    out.add(lc_tensor(left, right), sign * c);
    if (!(lx.at(TokenKind::Plus) || lx.at(TokenKind::Minus))) break;
    sign = lx.next().kind == TokenKind::Minus ? Rat(-1) : Rat(1);
  }
  return out;
}

}  // namespace detail

/// lincomb := term {("+"|"-") term}; term := [rational "*"] element; "0" is zero.
template <class Syntax>
LinComb<typename Syntax::Basis> parse_lincomb_with(const Syntax& syn, std::string_view text) {
  Lexer lx(text);
  auto out = detail::parse_lincomb_body(syn, lx);
  lx.expect(TokenKind::End, "end of input");
  return out;
}

/// tensor term := [rational "*"] side "#" side; side := "(" lincomb ")" | element.
template <class Syntax>
LinComb<Tensor2<typename Syntax::Basis>> parse_tensor_with(const Syntax& syn, std::string_view text) {
  Lexer lx(text);
  auto out = detail::parse_tensor_body(syn, lx);
  lx.expect(TokenKind::End, "end of input");
  return out;
}

/// forest := "1" | tree {tree}; tree := label | label "(" forest ")".
Forest parse_forest(std::string_view text, const Alphabets& alphabets);
LinComb<Forest> parse_lincomb(std::string_view text, const Alphabets& alphabets);
LinComb<Tensor2<Forest>> parse_tensor(std::string_view text, const Alphabets& alphabets);

// ---------------------------------------------------------------------------
// JSON.

using Json = nlohmann::json;

/// Decoding context: alphabets for forests, quiver for paths.
struct JsonContext {
  const Alphabets* alphabets = nullptr;
  const QuiverSpec* quiver = nullptr;
};

Json basis_to_json(const Forest& f);
Json basis_to_json(const Monomial& m);
Json basis_to_json(const Word& w);
Json basis_to_json(const Path& p);

void basis_from_json(const Json& j, const JsonContext& ctx, const std::string& pointer, Forest& out);
void basis_from_json(const Json& j, const JsonContext& ctx, const std::string& pointer, Monomial& out);
void basis_from_json(const Json& j, const JsonContext& ctx, const std::string& pointer, Word& out);
void basis_from_json(const Json& j, const JsonContext& ctx, const std::string& pointer, Path& out);

template <class L, class R>
Json basis_to_json(const Tensor2<L, R>& t) {
  return Json{{"left", basis_to_json(t.left)}, {"right", basis_to_json(t.right)}};
}

template <class L, class R>
void basis_from_json(const Json& j, const JsonContext& ctx, const std::string& pointer, Tensor2<L, R>& out) {
  if (!j.is_object() || !j.contains("left") || !j.contains("right")) {
    throw SchemaError(pointer, "expected an object with \"left\" and \"right\"");
  }
  basis_from_json(j.at("left"), ctx, pointer + "/left", out.left);
  basis_from_json(j.at("right"), ctx, pointer + "/right", out.right);
}

template <class B>
Json to_json(const LinComb<B>& a) {
  Json terms = Json::array();
  for (const auto& [b, c] : a.sorted([](const B& x, const B& y) { return basis_less(x, y); })) {
    terms.push_back(Json{{"coeff", c.to_string()}, {"elem", basis_to_json(b)}});
  }
  return Json{{"schema", kSchemaVersion}, {"terms", std::move(terms)}};
}

template <class B>
LinComb<B> lincomb_from_json(const Json& doc, const JsonContext& ctx) {
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  if (doc.contains("schema") && doc["schema"] != kSchemaVersion) {
    throw SchemaError("/schema", "unsupported schema version");
  }
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw SchemaError("/terms", "expected an array");
  LinComb<B> out;
  const auto& terms = doc["terms"];
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "/terms/" + std::to_string(i);
    const auto& t = terms[i];
    if (!t.is_object()) throw SchemaError(where, "expected an object");
    if (!t.contains("coeff") || !t["coeff"].is_string()) throw SchemaError(where + "/coeff", "expected a string");
    if (!t.contains("elem")) throw SchemaError(where + "/elem", "missing");
    Rat c;
    try {
      c = Rat::parse(t["coeff"].get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(where + "/coeff", e.what());
    }
    B b;
    basis_from_json(t["elem"], ctx, where + "/elem", b);
    out.add(b, c);
  }
  return out;
}

/// {"schema": ..., "forest": [{"d": label, "c": [...]}, ...]}
Json forest_to_json(const Forest& f);
Forest forest_from_json(const Json& doc, const Alphabets& alphabets);

}  // namespace eps
