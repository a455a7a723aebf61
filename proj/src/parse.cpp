#include "monokit/parse.hpp"

#include <array>
#include <cctype>
#include <map>

#include "monokit/errors.hpp"

namespace monokit {

namespace {

constexpr int kMaxExponent = 1024;

/// Sparse polynomial in x, y, z.
using Mono = std::array<int, 3>;
using Multi = std::map<Mono, Rational>;

void add_into(Multi& acc, const Mono& m, const Rational& c) {
  auto& slot = acc[m];
  slot += c;
  if (slot == 0) acc.erase(m);
}

Multi plus(const Multi& a, const Multi& b, int sign) {
  Multi out = a;
  for (const auto& [m, c] : b) add_into(out, m, sign > 0 ? c : Rational(-c));
  return out;
}

Multi times(const Multi& a, const Multi& b) {
  Multi out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_into(out, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return out;
}

Multi constant(const Rational& c) {
  Multi m;
  if (c != 0) m[{0, 0, 0}] = c;
  return m;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Multi parse() {
    Multi e = expr();
    skip();
    if (pos_ != s_.size()) fail("'+', '-', '*', '/', '^' or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
    throw Error(ErrorKind::ParseError,
                "at position " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Multi expr() {
    Multi acc = term();
    for (;;) {
      if (accept('+'))
        acc = plus(acc, term(), +1);
      else if (accept('-'))
        acc = plus(acc, term(), -1);
      else
        return acc;
    }
  }

  Multi term() {
    Multi acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = times(acc, unary());
      } else if (accept('/')) {
        const size_t at = pos_;
        Multi d = unary();
        if (d.size() != 1 || d.begin()->first != Mono{0, 0, 0}) {
          pos_ = at;
          fail("a nonzero constant divisor");
        }
        acc = times(acc, constant(Rational(1) / d.begin()->second));
      } else {
        return acc;
      }
    }
  }

  Multi unary() {
    if (accept('-')) return plus({}, unary(), -1);
    if (accept('+')) return unary();
    return power();
  }

  Multi power() {
    Multi base = primary();
    if (!accept('^')) return base;
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("a nonnegative integer exponent");
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) {
      pos_ = start;
      fail("an exponent at most " + std::to_string(kMaxExponent));
    }
    const int e = std::stoi(digits);
    Multi r = constant(Rational(1));
    for (int i = 0; i < e; ++i) r = times(r, base);
    return r;
  }

  Multi primary() {
    skip();
    if (pos_ >= s_.size()) fail("a number, x, y, z or '('");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Multi e = expr();
      if (!accept(')')) fail("')'");
      return e;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Mono m{0, 0, 0};
      m[c - 'x'] = 1;
      return {{m, Rational(1)}};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return constant(number());
    fail("a number, x, y, z or '('");
  }

  Rational number() {
    const size_t start = pos_;
    auto digits = [&] {
      size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ > b;
    };
    bool any = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      any = digits() || any;
    }
    if (!any) fail("a digit");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      size_t save = pos_++;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (!digits()) pos_ = save;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

ParsedPolynomial parse_polynomial(const std::string& text) {
  const Multi m = Parser(text).parse();
  bool has[3] = {false, false, false};
  for (const auto& [mono, c] : m)
    for (int v = 0; v < 3; ++v) has[v] = has[v] || mono[v] > 0;
  ParsedPolynomial out;
  if (has[1]) {
    if (has[2]) throw Error(ErrorKind::ParseError, "z cannot appear together with y; use x and y");
    std::map<BiPoly::Key, Rational> terms;
    for (const auto& [mono, c] : m) terms[{mono[0], mono[1]}] = c;
    out.bi = BiPoly(std::move(terms));
    out.variable = 'y';
    return out;
  }
  if (has[0] && has[2]) throw Error(ErrorKind::ParseError, "univariate input must use a single variable");
  const int v = has[0] ? 0 : 2;
  int deg = 0;
  for (const auto& [mono, c] : m) deg = std::max(deg, mono[v]);
  std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(0));
  for (const auto& [mono, c] : m) coeffs[mono[v]] = c;
  out.uni = RatPoly(std::move(coeffs));
  out.variable = has[0] ? 'x' : 'z';
  return out;
}

RatPoly parse_univariate(const std::string& text) {
  auto p = parse_polynomial(text);
  if (!p.uni) throw Error(ErrorKind::ParseError, "expected a polynomial in one variable, got one in x and y");
  return *p.uni;
}

BiPoly parse_bivariate(const std::string& text) {
  auto p = parse_polynomial(text);
  if (!p.bi) throw Error(ErrorKind::ParseError, "expected a polynomial in x and y");
  return *p.bi;
}

}  // namespace monokit
