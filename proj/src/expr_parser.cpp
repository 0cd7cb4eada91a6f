#include "joinpi/expr_parser.hpp"

#include <cctype>
#include <string>

namespace joinpi {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, char var) : text_(text), var_(var) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }
  char var() const { return var_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw JoinpiError(ErrorCode::syntax, msg + " at byte " + std::to_string(pos_), pos_);
  }

  // Unsigned rational literal; whitespace inside the literal is not allowed.
  Rational unsigned_rational() {
    skip_ws();
    std::size_t start = pos_;
    auto digit = [&](std::size_t i) {
      return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
    };
    while (digit(pos_)) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digit(pos_)) fail("expected denominator");
      while (digit(pos_)) ++pos_;
    } else {
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        while (digit(pos_)) ++pos_;
      }
      if (pos_ > start && pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t save = pos_;
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        if (!digit(pos_)) {
          pos_ = save;
        } else {
          while (digit(pos_)) ++pos_;
        }
      }
    }
    if (pos_ == start) fail("expected a rational number");
    auto q = try_parse_rational(text_.substr(start, pos_ - start));
    if (!q) {
      pos_ = start;
      fail("malformed rational number");
    }
    return *q;
  }

  int posint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a positive integer exponent");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("exponent too large");
    }
    int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (v < 1) {
      pos_ = start;
      fail("exponent must be positive");
    }
    return v;
  }

 private:
  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

RootFactor parse_factor(Cursor& cur) {
  RootFactor f;
  if (cur.accept('(')) {
    if (!cur.accept(cur.var())) cur.fail(std::string("expected variable '") + cur.var() + "'");
    char c = cur.peek();
    if (c == '+' || c == '-') {
      cur.accept(c);
      Rational r = cur.unsigned_rational();
      f.root = c == '+' ? Rational(-r) : r;
    } else {
      f.root = 0;
    }
    cur.expect(')');
  } else if (cur.accept(cur.var())) {
    f.root = 0;
  } else {
    cur.fail(std::string("expected factor '(") + cur.var() + "...)' or '" + cur.var() + "'");
  }
  if (cur.accept('^')) f.multiplicity = cur.posint();
  return f;
}

}  // namespace

FactoredPoly parse_factored_poly(std::string_view text, char variable) {
  Cursor cur(text, variable);
  Rational scale(1);
  char c = cur.peek();
  if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
    bool negative = false;
    if (c == '+' || c == '-') {
      cur.accept(c);
      negative = c == '-';
    }
    scale = cur.unsigned_rational();
    if (negative) scale = -scale;
    cur.expect('*');
  }
  std::vector<RootFactor> factors;
  std::vector<std::size_t> offsets;
  offsets.push_back(cur.pos());
  factors.push_back(parse_factor(cur));
  while (!cur.at_end()) {
    cur.accept('*');
    offsets.push_back(cur.pos());
    factors.push_back(parse_factor(cur));
  }
  if (scale == 0) throw JoinpiError(ErrorCode::zero_scale, "scale must be nonzero", 0);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (factors[i].root == factors[j].root)
        throw JoinpiError(ErrorCode::duplicate_root,
                          "factor at byte " + std::to_string(offsets[i]) + " repeats the root " +
                              factors[i].root.get_str(),
                          offsets[i]);
  return FactoredPoly(scale, std::move(factors));
}

}  // namespace joinpi
