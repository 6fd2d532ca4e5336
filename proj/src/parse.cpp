#include "isopar/parse.hpp"

#include <cctype>

namespace isopar {
namespace {

constexpr int kMaxParseExp = 4096;

struct Parser {
  const std::string& s;
  const RingPtr& ring;
  long d;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg, size_t at) {
    fail(Error::Kind::parse,
         msg + " at position " + std::to_string(at + 1));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) err("expected integer", start);
    return mpz_class(s.substr(start, pos - start));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                           s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_'))
        ++pos;
    }
    return s.substr(start, pos - start);
  }

  int exponent() {
    skip_ws();
    size_t at = pos;
    mpz_class e = integer();
    if (e > kMaxParseExp) err("exponent exceeds supported maximum", at);
    return static_cast<int>(e.get_si());
  }

  // factor := base ['^' nat]
  Poly factor() {
    Poly b = base();
    while (peek() == '^') {
      ++pos;
      b = b.pow(exponent());
    }
    return b;
  }

  Poly base() {
    skip_ws();
    size_t at = pos;
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly e = expr();
      if (!eat(')')) err("expected ')'", pos);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (peek() == '/') {
        ++pos;
        size_t dat = pos;
        mpz_class den = integer();
        if (den == 0) err("zero denominator", dat);
        mpq_class q(num, den);
        q.canonicalize();
        return Poly::constant(ring, Scalar(q));
      }
      return Poly::constant(ring, Scalar(mpq_class(num)));
    }
    std::string name = ident();
    if (name.empty()) err("unexpected character", at);
    if (name == "sqrt") {
      if (!eat('(')) err("expected '(' after sqrt", pos);
      size_t dat = pos;
      mpz_class arg = integer();
      if (!eat(')')) err("expected ')'", pos);
      if (d == 0)
        err("sqrt literal requires quadratic-extension scalar mode", at);
      if (arg != d)
        err("sqrt argument must match the session extension sqrt(" +
                std::to_string(d) + ")",
            dat);
      return Poly::constant(ring, Scalar::sqrt_of(d));
    }
    int idx = ring->index_of(name);
    if (idx < 0) err("unknown variable '" + name + "'", at);
    return Poly::variable(ring, idx);
  }

  // term := factor ('*' factor)*
  Poly term() {
    Poly t = factor();
    while (peek() == '*') {
      ++pos;
      t = t * factor();
    }
    return t;
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Poly expr() {
    bool neg = false;
    if (peek() == '-') {
      ++pos;
      neg = true;
    } else if (peek() == '+') {
      ++pos;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc += term();
      } else if (c == '-') {
        ++pos;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos != s.size()) err("unexpected trailing input", pos);
    return p;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring, long quadext_d) {
  if (quadext_d != 0) {
    if (quadext_d < 2)
      fail(Error::Kind::precondition, "extension d must be >= 2");
    mpz_class s;
    if (Scalar::squarefree_part(mpz_class(quadext_d), s) != quadext_d ||
        s != 1)
      fail(Error::Kind::precondition,
           "extension d must be square-free: " + std::to_string(quadext_d));
  }
  Parser p{text, ring, quadext_d};
  return p.run();
}

}  // namespace isopar
