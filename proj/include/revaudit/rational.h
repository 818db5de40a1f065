#ifndef REVAUDIT_RATIONAL_H_
#define REVAUDIT_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace revaudit {

// Arbitrary-precision exact rational. Expression templates are disabled so
// that `auto` captures values, not lazy expressions.
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

// Parses "p/q", "-p/q" or an integer. Decimal notation is rejected so that no
// value ever passes through a binary floating point representation.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& value);

}  // namespace revaudit

#endif  // REVAUDIT_RATIONAL_H_
