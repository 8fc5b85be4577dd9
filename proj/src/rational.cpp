#include "elmatch/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "elmatch/diagnostics.hpp"

namespace elmatch {

std::string to_string(const Rational& value) {
  std::string out = std::to_string(value.numerator());
  if (value.denominator() != 1) {
    out += '/';
    out += std::to_string(value.denominator());
  }
  return out;
}

Rational rational_from_decimal(const std::string& text) {
  const auto fail = [&text]() -> Rational {
    throw Error(ErrorCode::InvalidArgument,
                "expected a positive decimal weight, got '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  long long integer_part = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    integer_part = integer_part * 10 + (text[pos] - '0');
    if (integer_part < 0 || integer_part > 1000000000LL) return fail();
    any_digit = true;
    ++pos;
  }
  long long frac_num = 0;
  long long frac_den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    bool frac_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      frac_num = frac_num * 10 + (text[pos] - '0');
      frac_den *= 10;
      if (frac_den > 1000000000LL) return fail();
      frac_digit = true;
      ++pos;
    }
    if (!frac_digit) return fail();
    any_digit = true;
  }
  if (!any_digit || pos != text.size()) return fail();
  Rational value(integer_part);
  value += Rational(frac_num, frac_den);
  if (value <= Rational(0)) return fail();
  return value;
}

}  // namespace elmatch
