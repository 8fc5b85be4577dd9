#pragma once

#include <string>

#include <boost/rational.hpp>

namespace elmatch {

// Exact arithmetic for ranking scores and weights. Scores are sums and
// differences of small weighted integers, so long long is ample.
using Rational = boost::rational<long long>;

// "3" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& value);

// Parses a positive decimal weight such as "1", "2.5" or "0.25" into an
// exact rational. Throws Error{InvalidArgument} on anything else (garbage,
// zero, negatives).
Rational rational_from_decimal(const std::string& text);

}  // namespace elmatch
