#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fpt/errors.hpp"

namespace fpt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Probability value with the [0,1] invariant checked at construction.
// Implicitly converts back to Rational so arithmetic stays ergonomic.
class ExactProb {
  public:
    ExactProb() : value_(0) {}
    ExactProb(Rational v) : value_(std::move(v)) {  // NOLINT: implicit by design
        if (value_ < 0 || value_ > 1)
            throw ContractError("probability out of [0,1]: " + to_fraction(value_));
    }
    const Rational& value() const { return value_; }
    operator const Rational&() const { return value_; }

    static std::string to_fraction(const Rational& r);

  private:
    Rational value_;
};

// "p/q" (or plain "p" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

// Decimal rendering with enough digits to round-trip a double.
std::string to_decimal_string(const Rational& r);

// Accepts "p", "-p", "p/q"; gcd-reduced by the backend. `where` feeds ParseError.
Rational parse_rational(const std::string& text, const std::string& where = "");

// r^e for integer e >= 0.
Rational rational_pow(const Rational& r, unsigned long e);

inline std::string ExactProb::to_fraction(const Rational& r) { return to_fraction_string(r); }

}  // namespace fpt
