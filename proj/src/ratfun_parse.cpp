// Recursive-descent parser for the rational-function text grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | 'x' index | 'h' | '(' expr ')'
//
// Division is only defined by values whose numerator splits into degree-1
// forms; the degree-1 sums seen while parsing serve as trial divisors.

#include <cctype>

#include "dynwg/ratfun.hpp"

namespace dynwg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFun run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    RatFun v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void remember(const RatFun& v) {
    if (!v.denominator().empty()) return;
    auto lf = v.numerator().as_linear_form();
    if (!lf) return;
    auto f = DegreeOneForm::canonicalize(*lf).second;
    for (const auto& c : candidates_)
      if (c == f) return;
    candidates_.push_back(std::move(f));
  }

  RatFun expr() {
    RatFun v = term();
    while (true) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        break;
      }
    }
    remember(v);
    return v;
  }

  RatFun term() {
    RatFun v = unary();
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        RatFun d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        try {
          v = v * d.inverse(candidates_);
        } catch (const InvalidArgument&) {
          throw ParseError("divisor does not split into degree-1 forms", at);
        }
      } else {
        break;
      }
    }
    return v;
  }

  RatFun unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      long e = integer();
      if (e > 10000) throw ParseError("exponent too large", at);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 100000000) throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  RatFun atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class z(std::string(text_.substr(start, pos_ - start)), 10);
      return RatFun(Scalar(z));
    }
    if (c == 'h') {
      ++pos_;
      return RatFun::hbar();
    }
    if (c == 'x') {
      std::size_t start = pos_++;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        long i = integer();
        if (i < 1 || i > kMaxXVars) throw ParseError("variable index out of range", start);
        return RatFun::x(static_cast<int>(i));
      }
      return RatFun::x(1);  // bare x is the rank-1 variable
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<DegreeOneForm> candidates_;
};

}  // namespace

RatFun RatFun::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace dynwg
