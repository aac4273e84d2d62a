// Exact rational arithmetic, used where integer arithmetic does not suffice:
// Bernoulli numbers and the threshold comparisons in index bounds.
#ifndef MONOGEN_RATIONAL_HPP
#define MONOGEN_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "monogen/integer.hpp"

namespace monogen {

using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// "a/b" in lowest terms, or plain "a" when the denominator is 1.
inline std::string dec(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace monogen

#endif
