#include "fowl/rational.hpp"

namespace fowl {

std::optional<Rat> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  BigInt mantissa = 0;
  std::size_t int_digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    mantissa = mantissa * 10 + (text[i] - '0');
    ++int_digits;
    ++i;
  }
  if (int_digits == 0) return std::nullopt;
  BigInt scale = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      mantissa = mantissa * 10 + (text[i] - '0');
      scale *= 10;
      ++frac_digits;
      ++i;
    }
    if (frac_digits == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  Rat value(mantissa, scale);
  return negative ? Rat(-value) : value;
}

std::string to_decimal_string(const Rat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;

  // Count factors of 2 and 5; anything else means no finite decimal.
  BigInt rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    std::string s = num.str() + "/" + den.str();
    return negative ? "-" + s : s;
  }

  unsigned places = twos > fives ? twos : fives;
  for (unsigned k = fives; k < places; ++k) num *= 5;
  for (unsigned k = twos; k < places; ++k) num *= 2;

  std::string digits = num.str();
  std::string out;
  if (places == 0) {
    out = digits;
  } else {
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

}  // namespace fowl
