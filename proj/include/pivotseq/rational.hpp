#ifndef PIVOTSEQ_RATIONAL_HPP
#define PIVOTSEQ_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace pivotseq {

// All scalar arithmetic in the toolkit is exact. GMP keeps every value in
// canonical form: gcd(|numerator|, denominator) = 1, denominator > 0.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

// "p/q" with the sign on the numerator, or plain "p" when q = 1.
std::string to_string(const Rational& value);

// Accepts "p" or "p/q"; the result is always canonical.
Rational parse_rational(const std::string& text);

} // namespace pivotseq

#endif
