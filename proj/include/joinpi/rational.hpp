#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace joinpi {

using Integer = mpz_class;
using Rational = mpq_class;

// Error categories shared by the input-facing modules.
enum class ErrorCode {
  syntax,
  duplicate_root,
  zero_scale,
  sign_constraint,
  invalid_input,
  ill_conditioned,
  tracking_breakdown,
};

class JoinpiError : public std::runtime_error {
 public:
  JoinpiError(ErrorCode code, const std::string& what,
              std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(what), code_(code), offset_(offset) {}

  ErrorCode code() const { return code_; }
  // Byte offset into the source text for syntax errors.
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

std::string error_code_name(ErrorCode code);

// Accepts "7", "-3/4", "0.125", "-1.5e-3". Decimals are converted exactly.
std::optional<Rational> try_parse_rational(std::string_view text);
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" form.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline Rational abs_value(const Rational& q) { return abs(q); }

// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

Rational pow(const Rational& base, unsigned long exponent);

double to_double(const Rational& q);

}  // namespace joinpi
