// fixdim.cpp - scaled-point arithmetic, decimal scanning, and the shortest
// round-tripping decimal printer.

#include "epsfkit/fixdim.hpp"

#include <array>

namespace epsfkit {

namespace {

using int128 = __int128;

constexpr std::int64_t kMaxCoefficient = 2147483647;  // scan limit, 2^31-1
constexpr std::size_t kMaxFracDigits = 17;            // extra digits ignored

struct NamedRatio {
  std::string_view name;
  UnitRatio ratio;
};

constexpr std::array<NamedRatio, 6> kUnits{{
    {"pt", {1, 1}},
    {"bp", {7227, 7200}},
    {"in", {7227, 100}},
    {"cm", {7227, 254}},
    {"mm", {7227, 2540}},
    {"sp", {1, 65536}},
}};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// round_decimals: right-to-left digit fold, equals round-half-up(frac*65536).
std::int64_t round_frac16(std::string_view digits) {
  std::size_t k = digits.size() < kMaxFracDigits ? digits.size() : kMaxFracDigits;
  std::int64_t a = 0;
  while (k > 0) {
    --k;
    a = (a + static_cast<std::int64_t>(digits[k] - '0') * 131072) / 10;
  }
  return (a + 1) / 2;
}

struct DecimalParts {
  bool negative = false;
  std::int64_t int_part = 0;
  std::int64_t frac16 = 0;
  std::size_t consumed = 0;
};

// Parses [sign] digits ["." [digits]] | [sign] "." digits starting at the
// front of `text`; does not require the whole string to be consumed.
std::optional<DecimalParts> parse_decimal_prefix(std::string_view text,
                                                 bool* overflow) {
  DecimalParts out;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    out.negative = text[i] == '-';
    ++i;
  }
  std::size_t int_begin = i;
  std::int64_t value = 0;
  while (i < text.size() && is_digit(text[i])) {
    value = value * 10 + (text[i] - '0');
    if (value > kMaxCoefficient) {
      if (overflow) *overflow = true;
      return std::nullopt;
    }
    ++i;
  }
  std::size_t int_digits = i - int_begin;
  std::size_t frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_begin = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    frac_digits = i - frac_begin;
    out.frac16 = round_frac16(text.substr(frac_begin, frac_digits));
  }
  if (int_digits == 0 && frac_digits == 0) return std::nullopt;
  out.int_part = value;
  out.consumed = i;
  return out;
}

Dim checked(int128 sp, const char* what) {
  if (sp > kMaxDimen || sp < -static_cast<int128>(kMaxDimen))
    throw OverflowError(what);
  return Dim{static_cast<std::int64_t>(sp)};
}

}  // namespace

std::optional<UnitRatio> unit_ratio(std::string_view name) {
  for (const auto& u : kUnits)
    if (u.name == name) return u.ratio;
  return std::nullopt;
}

Decimal Decimal::parse(std::string_view text) {
  bool overflow = false;
  auto parts = parse_decimal_prefix(text, &overflow);
  if (overflow)
    throw OverflowError("Number too big: '" + std::string(text) + "'");
  if (!parts || parts->consumed != text.size())
    throw ParseError("Malformed decimal constant: '" + std::string(text) + "'");
  Decimal d;
  d.text_ = std::string(text);
  d.negative_ = parts->negative;
  d.int_part_ = parts->int_part;
  d.frac16_ = parts->frac16;
  return d;
}

std::optional<Decimal> Decimal::try_parse(std::string_view text) {
  bool overflow = false;
  auto parts = parse_decimal_prefix(text, &overflow);
  if (overflow || !parts || parts->consumed != text.size()) return std::nullopt;
  Decimal d;
  d.text_ = std::string(text);
  d.negative_ = parts->negative;
  d.int_part_ = parts->int_part;
  d.frac16_ = parts->frac16;
  return d;
}

Dim dim_add(Dim a, Dim b) {
  return checked(static_cast<int128>(a.sp) + b.sp, "Arithmetic overflow");
}

Dim dim_sub(Dim a, Dim b) {
  return checked(static_cast<int128>(a.sp) - b.sp, "Arithmetic overflow");
}

Dim dim_mul(Dim d, std::int64_t n) {
  return checked(static_cast<int128>(d.sp) * n, "Arithmetic overflow");
}

Dim dim_from_literal(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  bool overflow = false;
  auto parts = parse_decimal_prefix(text.substr(i), &overflow);
  if (overflow)
    throw OverflowError("Number too big in '" + std::string(text) + "'");
  if (!parts)
    throw ParseError("Malformed dimension literal: '" + std::string(text) + "'");
  i += parts->consumed;
  while (i < text.size() && text[i] == ' ') ++i;
  std::size_t unit_end = i;
  while (unit_end < text.size() && text[unit_end] != ' ') ++unit_end;
  std::string_view unit = text.substr(i, unit_end - i);
  for (std::size_t j = unit_end; j < text.size(); ++j)
    if (text[j] != ' ')
      throw ParseError("Trailing text after dimension: '" + std::string(text) + "'");
  auto ratio = unit_ratio(unit);
  if (!ratio)
    throw ParseError("Unknown unit '" + std::string(unit) + "' in '" +
                     std::string(text) + "'");

  int128 sp = 0;
  if (ratio->num == ratio->den) {  // pt
    sp = static_cast<int128>(parts->int_part) * kUnity + parts->frac16;
  } else {
    int128 scaled = static_cast<int128>(parts->int_part) * ratio->num;
    int128 whole = scaled / ratio->den;
    int128 rem = scaled % ratio->den;
    int128 frac =
        (static_cast<int128>(ratio->num) * parts->frac16 + kUnity * rem) /
        ratio->den;
    sp = whole * kUnity + frac;
  }
  if (sp > kMaxDimen) throw OverflowError("Dimension too large");
  auto v = static_cast<std::int64_t>(sp);
  return Dim{parts->negative ? -v : v};
}

Dim dim_scale_decimal(Dim d, const Decimal& factor) {
  std::int64_t mag = d.sp < 0 ? -d.sp : d.sp;
  int128 acc = static_cast<int128>(factor.int_part()) * mag +
               static_cast<int128>(mag) * factor.frac16() / kUnity;
  if (acc > kMaxDimen) throw OverflowError("Arithmetic overflow");
  auto v = static_cast<std::int64_t>(acc);
  bool negative = (d.sp < 0) != factor.negative();
  return Dim{negative ? -v : v};
}

Dim dim_div_truncate(Dim d, std::int64_t k) {
  if (k == 0) throw DivideByZeroError("Division by zero");
  return Dim{d.sp / k};
}

std::int64_t dim_ratio(Dim a, Dim b) {
  if (b.sp == 0) throw DivideByZeroError("Division by zero");
  return a.sp / b.sp;
}

std::string print_scaled(Dim d) {
  std::int64_t s = d.sp;
  std::string out;
  if (s < 0) {
    out.push_back('-');
    s = -s;
  }
  out += std::to_string(s / kUnity);
  out.push_back('.');
  s = 10 * (s % kUnity) + 5;
  std::int64_t delta = 10;
  do {
    if (delta > kUnity) s += 32768 - 50000;  // round the final digit
    out.push_back(static_cast<char>('0' + s / kUnity));
    s = 10 * (s % kUnity);
    delta *= 10;
  } while (s > delta);
  return out;
}

}  // namespace epsfkit
