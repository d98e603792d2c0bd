// fixdim.hpp - TeX-style fixed-point dimension arithmetic in scaled points.
//
// All arithmetic is exact integer arithmetic; no binary floating point is
// used anywhere in this module.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epsfkit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivideByZeroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A dimension register: a signed count of scaled points, 65536 sp = 1 pt.
// Checked operations keep |sp| <= kMaxDimen; Dim{0} doubles as the "unset"
// value for size requests.
struct Dim {
  std::int64_t sp = 0;
  auto operator<=>(const Dim&) const = default;
};

inline constexpr std::int64_t kUnity = 65536;               // sp per pt
inline constexpr std::int64_t kMaxDimen = (1LL << 30) - 1;  // 16383.99998 pt
inline constexpr Dim kPsPoints{65781};                      // 1 bp

// Conversion ratio of a unit against pt.
struct UnitRatio {
  std::int64_t num;
  std::int64_t den;
};

// pt, bp, in, cm, mm, sp; anything else is unknown.
std::optional<UnitRatio> unit_ratio(std::string_view name);

// A signed decimal constant kept exact: the verbatim spelling, the integer
// magnitude, and the fraction pre-rounded to 1/65536ths (round half up on
// the digit string, at most 17 digits, like round_decimals).
class Decimal {
 public:
  Decimal() = default;

  // Grammar: [+|-] (digits ["." [digits]] | "." digits). Throws ParseError
  // on malformed text, OverflowError when the integer part exceeds 2^31-1.
  static Decimal parse(std::string_view text);
  static std::optional<Decimal> try_parse(std::string_view text);

  const std::string& text() const { return text_; }
  bool negative() const { return negative_; }
  std::int64_t int_part() const { return int_part_; }
  std::int64_t frac16() const { return frac16_; }

  friend bool operator==(const Decimal&, const Decimal&) = default;

 private:
  std::string text_ = "0";
  bool negative_ = false;
  std::int64_t int_part_ = 0;
  std::int64_t frac16_ = 0;  // 0..65536
};

// Checked add / subtract / integer multiple; throw OverflowError past
// kMaxDimen ("Arithmetic overflow", as the engine would report it).
Dim dim_add(Dim a, Dim b);
Dim dim_sub(Dim a, Dim b);
Dim dim_mul(Dim d, std::int64_t n);

// Parses "<sign><decimal constant><unit>", e.g. "0.4pt", "1bp", "-2.5cm".
// For a unit with ratio num/den the exact scan rule is
//   n' = floor(n*num/den), r = n*num mod den,
//   f' = floor((num*f + 65536*r)/den), sp = n'*65536 + f'
// with f the pre-rounded fraction; pt is simply n*65536 + f. Sign last.
Dim dim_from_literal(std::string_view text);

// <decimal factor><dimen>: the integer part multiplies exactly, the
// fraction scales with truncation:
//   sign * (n*|d| + floor(|d|*f16/65536))
Dim dim_scale_decimal(Dim d, const Decimal& factor);

// \divide semantics: truncation toward zero.
Dim dim_div_truncate(Dim d, std::int64_t k);

// Integer quotient of two sp counts, truncated toward zero.
std::int64_t dim_ratio(Dim a, Dim b);

// Renders a dimension the way \the does, minus the "pt" suffix: integer
// part, ".", then the shortest digit run that scans back to the same sp
// count (at least one digit). dim_from_literal(print_scaled(d) + "pt") == d.
std::string print_scaled(Dim d);

}  // namespace epsfkit
