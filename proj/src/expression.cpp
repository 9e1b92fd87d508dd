#include "m36/expression.hpp"

#include <cctype>

#include "m36/classes.hpp"

namespace m36 {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Multiply& mul) : s_(text), mul_(mul) {}

  RingElement run() {
    RingElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  RingElement expr() {
    RingElement e = term();
    for (;;) {
      if (eat('+'))
        e += term();
      else if (eat('-'))
        e -= term();
      else
        return e;
    }
  }

  RingElement product(const RingElement& a, const RingElement& b) {
    if (a.max_degree() + b.max_degree() > 4) fail("degree exceeds 4");
    return mul_ ? mul_(a, b) : a * b;
  }

  RingElement term() {
    RingElement e = factor();
    while (eat('*')) e = product(e, factor());
    return e;
  }

  RingElement factor() {
    if (eat('-')) return -factor();
    RingElement a = atom();
    if (!eat('^')) return a;
    skip();
    const std::string digits = number();
    if (digits.size() != 1 || digits[0] > '4') fail("exponent must lie in 0..4");
    RingElement out = RingElement::constant(1);
    for (int i = 0; i < digits[0] - '0'; ++i) out = product(out, a);
    return out;
  }

  std::string number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  // Comma-separated digit runs inside brackets.
  std::vector<std::string> bracket() {
    expect('[');
    std::vector<std::string> parts;
    do {
      skip();
      parts.push_back(number());
    } while (eat(','));
    expect(']');
    return parts;
  }

  int mark(const std::string& d) {
    if (d.size() != 1 || d[0] < '1' || d[0] > '6') fail("bad mark '" + d + "'");
    return d[0] - '0';
  }

  RingElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const std::size_t start = pos_;
    if (eat('(')) {
      RingElement e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string lit = number();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        lit += "/" + number();
      }
      try {
        return RingElement::constant(parse_rational(lit));
      } catch (const std::exception&) {
        pos_ = start;
        fail("bad rational literal");
      }
    }
    const std::string w = word();
    try {
      if (w == "K") return canonical_K();
      if (w == "B") return boundary_B();
      if (w == "E" || w == "F" || w == "G") {
        const auto parts = bracket();
        std::string text = w + "[";
        for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? "," : "") + parts[i];
        return divisor_class(DivisorId::parse(text + "]"));
      }
      if (w == "psi" || w == "phi") {
        const auto parts = bracket();
        if (parts.size() != 2) fail(w + " takes two marks");
        const int i = mark(parts[0]), j = mark(parts[1]);
        return w == "psi" ? psi(i, j) : phi(i, j);
      }
      if (w == "delta") {
        const auto parts = bracket();
        if (parts.size() == 1) return delta_triple(parse_marks(parts[0]));
        if (parts.size() == 2) return delta_pair(parse_marks(parts[0]), mark(parts[1]));
        if (parts.size() == 3) return delta_cyc(parse_marks(parts[0]), parse_marks(parts[1]), parse_marks(parts[2]));
        fail("delta takes one to three index groups");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
    pos_ = start;
    fail(w.empty() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unknown name '" + w + "'");
  }

  const std::string& s_;
  const Multiply& mul_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_expression(const std::string& text, const Multiply& multiply) {
  return Parser(text, multiply).run();
}

}  // namespace m36
