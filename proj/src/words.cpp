#include "cuntzpos/words.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace cuntzpos {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Parser {
 public:
  Parser(const std::string& text, int n) : s_(text), n_(n) {}

  TCElement<cplx> parse() {
    TCElement<cplx> acc(n_, 1);
    skip_ws();
    double sign = 1.0;
    if (peek() == '-') {
      ++pos_;
      sign = -1.0;
    } else if (peek() == '+') {
      ++pos_;
    }
    acc += parse_term(sign);
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      acc += parse_term(op == '-' ? -1.0 : 1.0);
    }
    return acc;
  }

 private:
  TCElement<cplx> parse_term(double sign) {
    skip_ws();
    cplx coef(sign, 0.0);
    if (peek() == '(' || peek() == '.' || std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'i') {
      coef *= parse_coef();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (pos_ >= s_.size() || peek() == '+' || peek() == '-') {
        return TCElement<cplx>::scalar_term(n_, {}, coef);
      }
    }
    return coef * parse_product();
  }

  cplx parse_coef() {
    if (peek() == '(') {
      ++pos_;
      const double re = parse_number();
      skip_ws();
      expect(',');
      const double im = parse_number();
      skip_ws();
      expect(')');
      return {re, im};
    }
    if (peek() == 'i') {
      ++pos_;
      return {0.0, 1.0};
    }
    const double v = parse_number();
    if (peek() == 'i') {
      ++pos_;
      return {0.0, v};
    }
    return {v, 0.0};
  }

  double parse_number() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  TCElement<cplx> parse_product() {
    auto acc = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '.') break;
      ++pos_;
      acc = mul(acc, parse_factor());
    }
    return acc;
  }

  TCElement<cplx> parse_factor() {
    skip_ws();
    if (peek() == 'I') {
      ++pos_;
      return TCElement<cplx>::identity(n_, 1);
    }
    if (peek() != 'S') fail("expected 'I' or 'S<k>'");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected letter index after 'S'");
    const int letter = std::stoi(s_.substr(start, pos_ - start));
    if (letter < 1 || letter > n_) fail("letter S" + std::to_string(letter) + " outside alphabet");
    if (peek() == '*') {
      // A '*' directly after the index is an adjoint; "S1 * S2" is not valid syntax.
      ++pos_;
      return TCElement<cplx>::generator_adjoint(n_, 1, letter);
    }
    return TCElement<cplx>::generator(n_, 1, letter);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ShapeError("parse_element: " + what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_term(const NFTerm& t) {
  if (t.mu.empty() && t.nu.empty()) return "I";
  std::string out;
  for (int l : t.mu) {
    if (!out.empty()) out += '.';
    out += "S" + std::to_string(l);
  }
  for (auto it = t.nu.rbegin(); it != t.nu.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += "S" + std::to_string(*it) + "*";
  }
  return out;
}

std::string render(const TCElement<cplx>& x) {
  if (x.p() != 1) throw ShapeError("render: only scalar (p=1) elements have a text form");
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    const cplx v = c(0, 0);
    out += "(" + fmt17(v.real()) + "," + fmt17(v.imag()) + ")*" + render_term(t);
  }
  return out;
}

TCElement<cplx> parse_element(const std::string& text, int n) { return Parser(text, n).parse(); }

}  // namespace cuntzpos
