#include "ybfuse/io/expression.hpp"

#include <cctype>

#include "ybfuse/io/json.hpp"

namespace ybfuse {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ExpressionEnv& env)
      : text_(text), env_(env) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!eat('^')) return base;
    const bool negative = eat('-');
    const long e = integer();
    if (negative && base.is_zero()) fail("zero to a negative power");
    return base.pow(negative ? -e : e);
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("integer expected");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer_argument() {
    expect('(');
    const bool negative = eat('-');
    const long n = integer();
    expect(')');
    return negative ? -n : n;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFunction(Rational(integer()));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
    const std::string id = name();
    const RationalFunction q(env_.q);
    const RationalFunction z = q - q.inverse();
    if (id == "u" || id == "a" || id == "alpha") return RationalFunction::variable();
    if (id == "q") return q;
    if (id == "br") {
      const long n = integer_argument();
      return (q.pow(n) - q.pow(-n)) / z;
    }
    if (id == "al") {
      const long n = integer_argument();
      return (q.pow(n) * RationalFunction::variable() - q.pow(-n)) / z;
    }
    if (id == "P") {
      expect('(');
      const RationalFunction x = expr();
      expect(')');
      const RationalFunction mid =
          q.pow(3) - RationalFunction(2) * q - RationalFunction(2) * q.inverse() +
          q.pow(-3);
      return (q.inverse() * x * x + mid * x + q) / (z * z);
    }
    fail("unknown name '" + id + "'");
  }

  std::string_view text_;
  const ExpressionEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text,
                                  const ExpressionEnv& env) {
  return Parser(text, env).parse();
}

}  // namespace ybfuse
