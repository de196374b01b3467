#ifndef MULT_RATIONAL_HPP
#define MULT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace mult {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// The two-int mpq constructor converts plain ints to unsigned, so a negative
// denominator silently wraps.  Route every numerator/denominator pair through
// mpz_int, which canonicalizes signs and gcd correctly.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

inline Int floor_rational(const Rational& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    Int quot = num / den;
    if (num % den != 0 && num < 0) --quot;
    return quot;
}

inline Int ceil_rational(const Rational& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    Int quot = num / den;
    if (num % den != 0 && num > 0) ++quot;
    return quot;
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const Int& n) { return n.str(); }

// Accepts "p" or "p/q" with optional leading minus on p; q must be positive.
Rational parse_rational(const std::string& text);

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

}  // namespace mult

#endif
