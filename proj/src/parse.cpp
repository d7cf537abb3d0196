#include "nga/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace nga {

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t p = 0;
  while (p < s.size()) {
    const char ch = s[p];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++p;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t q = p;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      out.push_back({Token::Number, std::string(s.substr(p, q - p)), p});
      p = q;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      // Identifiers may contain ':' so that generator names like G:1:0 stay whole.
      std::size_t q = p;
      while (q < s.size() && (std::isalnum(static_cast<unsigned char>(s[q])) || s[q] == '_' ||
                              s[q] == ':'))
        ++q;
      out.push_back({Token::Ident, std::string(s.substr(p, q - p)), p});
      p = q;
    } else if (std::string_view("+-*/^()").find(ch) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, ch), p});
      ++p;
    } else {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' at position " +
                       std::to_string(p));
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

std::optional<ScalarSum> single_term_inverse(const ScalarSum& s) {
  if (s.size() != 1) return std::nullopt;
  const auto& [m, c] = *s.terms().begin();
  ParamMonomial inv;
  for (const auto& [name, e] : m.factors()) inv = inv * ParamMonomial::power(name, -e);
  ScalarSum out;
  out.add_term(inv, c.inverse());
  return out;
}

// Value-generic recursive descent. Ops supplies atoms and the ring operations.
template <class V, class Ops>
class Parser {
 public:
  Parser(std::string_view text, const Ops& ops) : tokens_(tokenize(text)), ops_(ops) {}

  V parse() {
    V v = sum();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(const char* op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(peek().pos));
  }

  V sum() {
    V acc = ops_.zero();
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept("-"))
        negate = true;
      else if (!accept("+") && !first)
        break;
      V t = product();
      acc = negate ? ops_.sub(acc, t) : ops_.add(acc, t);
      first = false;
    }
    return acc;
  }

  V product() {
    V acc = power();
    while (true) {
      if (accept("*")) {
        acc = ops_.mul(acc, power());
      } else if (accept("/")) {
        const std::size_t at = pos_;
        std::optional<ScalarSum> s = ops_.as_scalar(power());
        std::optional<ScalarSum> inv = s ? single_term_inverse(*s) : std::nullopt;
        if (!inv) {
          pos_ = at;
          fail("division is only defined by a single-term scalar");
        }
        acc = ops_.scale(acc, *inv);
      } else {
        return acc;
      }
    }
  }

  V power() {
    V base = atom();
    if (!accept("^")) return base;
    bool negative = accept("-");
    if (peek().kind != Token::Number) fail("expected an integer exponent");
    const int e = std::stoi(tokens_[pos_++].text);
    if (!negative) {
      V out = ops_.one();
      for (int k = 0; k < e; ++k) out = ops_.mul(out, base);
      return out;
    }
    std::optional<ScalarSum> s = ops_.as_scalar(base);
    std::optional<ScalarSum> inv = s ? single_term_inverse(*s) : std::nullopt;
    if (!inv) fail("negative powers are only defined for single-term scalars");
    ScalarSum out(1);
    for (int k = 0; k < e; ++k) out = out * *inv;
    return ops_.scalar(out);
  }

  V atom() {
    const Token& tok = peek();
    if (tok.kind == Token::Number) {
      ++pos_;
      return ops_.scalar(ScalarSum(Rational(tok.text)));
    }
    if (tok.kind == Token::Ident) {
      ++pos_;
      try {
        return ops_.ident(tok.text);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(std::string(e.what()) + " at position " + std::to_string(tok.pos));
      }
    }
    if (accept("(")) {
      V v = sum();
      if (!accept(")")) fail("expected ')'");
      return v;
    }
    if (tok.kind == Token::End) fail("unexpected end of input");
    fail("unexpected '" + tok.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Ops& ops_;
};

bool is_coordinate(const std::string& id) {
  if (id.size() < 2 || id[0] != 'x') return false;
  for (std::size_t k = 1; k < id.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(id[k]))) return false;
  return true;
}

ScalarSum scalar_ident(const std::string& id) {
  if (id == "i") return ScalarSum::i();
  if (id.find(':') != std::string::npos) throw ParseError("unexpected generator '" + id + "'");
  if (id == "t" || id == "S" || id == "C" || is_coordinate(id))
    throw ParseError("'" + id + "' is a coordinate, not a parameter");
  return ScalarSum::param(id);
}

struct FunctionOps {
  TimeMode mode;
  int dim;

  FunctionElement zero() const { return FunctionElement(mode); }
  FunctionElement one() const { return FunctionElement::constant(mode, ScalarSum(1)); }
  FunctionElement scalar(const ScalarSum& s) const { return FunctionElement::constant(mode, s); }
  FunctionElement add(const FunctionElement& a, const FunctionElement& b) const { return a + b; }
  FunctionElement sub(const FunctionElement& a, const FunctionElement& b) const { return a - b; }
  FunctionElement mul(const FunctionElement& a, const FunctionElement& b) const { return a * b; }
  FunctionElement scale(const FunctionElement& a, const ScalarSum& s) const { return a * s; }
  std::optional<ScalarSum> as_scalar(const FunctionElement& f) const {
    if (f.is_zero()) return ScalarSum();
    if (f.size() == 1 && f.terms().begin()->first.is_one()) return f.terms().begin()->second;
    return std::nullopt;
  }
  FunctionElement ident(const std::string& id) const {
    if (id == "t") return FunctionElement::time(mode);
    if (id == "S") return FunctionElement::sine(mode);
    if (id == "C") return FunctionElement::cosine(mode);
    if (is_coordinate(id)) {
      const int k = std::stoi(id.substr(1));
      if (k < 1 || k > dim)
        throw ParseError("coordinate " + id + " outside dimension " + std::to_string(dim));
      return FunctionElement::coordinate(mode, k);
    }
    return scalar(scalar_ident(id));
  }
};

struct ScalarOps {
  ScalarSum zero() const { return {}; }
  ScalarSum one() const { return ScalarSum(1); }
  ScalarSum scalar(const ScalarSum& s) const { return s; }
  ScalarSum add(const ScalarSum& a, const ScalarSum& b) const { return a + b; }
  ScalarSum sub(const ScalarSum& a, const ScalarSum& b) const { return a - b; }
  ScalarSum mul(const ScalarSum& a, const ScalarSum& b) const { return a * b; }
  ScalarSum scale(const ScalarSum& a, const ScalarSum& s) const { return a * s; }
  std::optional<ScalarSum> as_scalar(const ScalarSum& s) const { return s; }
  ScalarSum ident(const std::string& id) const { return scalar_ident(id); }
};

struct EnvOps {
  const Enveloping& env;

  EnvElement zero() const { return {}; }
  EnvElement one() const { return EnvElement::unit(); }
  EnvElement scalar(const ScalarSum& s) const { return EnvElement::scalar(s); }
  EnvElement add(const EnvElement& a, const EnvElement& b) const { return a + b; }
  EnvElement sub(const EnvElement& a, const EnvElement& b) const { return a - b; }
  EnvElement mul(const EnvElement& a, const EnvElement& b) const { return env.multiply(a, b); }
  EnvElement scale(const EnvElement& a, const ScalarSum& s) const { return a * s; }
  std::optional<ScalarSum> as_scalar(const EnvElement& e) const {
    if (e.is_zero()) return ScalarSum();
    if (e.size() == 1 && e.terms().begin()->first.empty()) return e.terms().begin()->second;
    return std::nullopt;
  }
  EnvElement ident(const std::string& id) const {
    if (id == "H" || id.find(':') != std::string::npos)
      return EnvElement::generator(env.algebra().index(id));
    return scalar(scalar_ident(id));
  }
};

}  // namespace

FunctionElement parse_function(std::string_view text, TimeMode mode, int dim) {
  FunctionOps ops{mode, dim};
  return Parser<FunctionElement, FunctionOps>(text, ops).parse();
}

ScalarSum parse_scalar(std::string_view text) {
  ScalarOps ops;
  return Parser<ScalarSum, ScalarOps>(text, ops).parse();
}

EnvElement parse_env(std::string_view text, const Enveloping& env) {
  EnvOps ops{env};
  return Parser<EnvElement, EnvOps>(text, ops).parse();
}

Rational parse_rational(std::string_view text) {
  const ScalarSum s = parse_scalar(text);
  if (!s.is_constant() || !(s.constant_part().im == 0))
    throw ParseError("expected a rational number, got '" + std::string(text) + "'");
  return s.constant_part().re;
}

std::pair<std::string, Rational> parse_assignment(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ParseError("expected name=value, got '" + std::string(text) + "'");
  std::string name(text.substr(0, eq));
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      throw ParseError("invalid parameter name '" + name + "'");
  return {name, parse_rational(text.substr(eq + 1))};
}

}  // namespace nga
