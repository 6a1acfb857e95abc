#include "lucasbinom/errors.hpp"
#include "lucasbinom/ring.hpp"

#include <cctype>
#include <string>

namespace lucasbinom {

namespace {

// Recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/')? unary)*     juxtaposition multiplies: "3x^2"
//   unary  := ('-' | '+') unary | power
//   power  := primary ('^' digits)?
//   primary:= digits | 'x' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Quotient parse() {
    Quotient q = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " +
                     why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '('; }

  Quotient expr() {
    Quotient acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Quotient rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Quotient term() {
    Quotient acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        Quotient rhs = unary();
        if (rhs.is_zero()) fail("division by zero");
        acc = acc / rhs;
      } else if (starts_primary(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Quotient unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Quotient power() {
    Quotient base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected a nonnegative integer exponent");
    if (digits.size() > 6) fail("exponent too large");
    const auto exponent = static_cast<unsigned>(std::stoul(digits));
    Quotient result(RingElement(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * base;
    return result;
  }

  Quotient primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Quotient(RingElement(Integer(read_digits())));
    if (c == 'x') {
      ++pos_;
      return Quotient(RingElement(Polynomial::x()));
    }
    if (c == '(') {
      ++pos_;
      Quotient inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Quotient parse_quotient(std::string_view text) { return Parser(text).parse(); }

RingElement parse_ring(std::string_view text) {
  Quotient q = parse_quotient(text);
  if (!q.in_ring()) throw ParseError("\"" + std::string(text) + "\" is not a polynomial");
  return q.to_ring();
}

}  // namespace lucasbinom
