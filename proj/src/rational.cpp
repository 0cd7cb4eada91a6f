#include "joinpi/rational.hpp"

#include <cctype>

namespace joinpi {

std::string error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax: return "SyntaxError";
    case ErrorCode::duplicate_root: return "DuplicateRoot";
    case ErrorCode::zero_scale: return "ZeroScale";
    case ErrorCode::sign_constraint: return "SignConstraintViolation";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::ill_conditioned: return "IllConditioned";
    case ErrorCode::tracking_breakdown: return "TrackingBreakdown";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = Rational(Integer(std::string(num), 10), d);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string_view::npos) {
      auto exp_text = text.substr(e + 1);
      mantissa = text.substr(0, e);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) return std::nullopt;
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    auto dot = mantissa.find('.');
    std::string digits;
    if (dot == std::string_view::npos) {
      if (!all_digits(mantissa)) return std::nullopt;
      digits = std::string(mantissa);
    } else {
      auto whole = mantissa.substr(0, dot);
      auto frac = mantissa.substr(dot + 1);
      if (whole.empty() && frac.empty()) return std::nullopt;
      if (!whole.empty() && !all_digits(whole)) return std::nullopt;
      if (!frac.empty() && !all_digits(frac)) return std::nullopt;
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    }
    if (digits.empty()) digits = "0";
    Integer mant(digits, 10);  // base 10: a leading 0 must not mean octal
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? Rational(mant, scale) : Rational(mant * scale);
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

Rational parse_rational(std::string_view text) {
  auto q = try_parse_rational(text);
  if (!q) throw JoinpiError(ErrorCode::syntax, "not a rational number: '" + std::string(text) + "'");
  return *q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace joinpi
