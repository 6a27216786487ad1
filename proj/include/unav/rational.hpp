#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace unav {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All threshold comparisons in the library are exact: rationals in, rationals
// out, no floating point. Quantities involving Euler's number are bracketed
// by a fixed 35-digit enclosure, and every comparison against them is made
// conservatively against the correct end of the bracket.

// Certified enclosure E_LO < e < E_HI (denominator 10^35, numerators one
// unit apart).
const Rat& euler_lo();
const Rat& euler_hi();

// Parses "p/q", a plain integer "p", or a decimal like "0.25" into an exact
// rational. Throws FormatError on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical "p/q" form (q = 1 prints as "p/1" so the format is uniform).
std::string format_rat(const Rat& value);

BigInt floor_rat(const Rat& value);
BigInt ceil_rat(const Rat& value);

// base^exp for integer exp (negative exp inverts; base must be nonzero then).
Rat rat_pow(const Rat& base, long exp);

BigInt ipow(const BigInt& base, unsigned exp);

// C(n, k); zero when n < k.
BigInt binomial(const BigInt& n, unsigned k);

// ceil((alpha/e)^k * b), exact despite the transcendental: evaluates both
// ends of the Euler enclosure and requires their ceilings to agree (they do
// for every desk-scale operand; disagreement throws UnavError).
BigInt ceil_scaled_exp_ratio(const Rat& alpha, unsigned k, const BigInt& b);

// Conservative test of value >= coeff * e^k: true only when it holds against
// the upper end of the enclosure, so a true answer is certified. Ambiguous
// operands (between the two ends) report false.
bool int_at_least_scaled_e_pow(const BigInt& value, const Rat& coeff, unsigned k);

// Certified test of |B|*(delta/e)^r - |B|^s * m^r / |A|^r >= a: e is
// replaced by its upper bound, so true implies the exact inequality.
bool drc_inequality_holds(const Rat& delta, const BigInt& size_b,
                          const BigInt& size_a, unsigned r, unsigned s,
                          const BigInt& m, const BigInt& a);

}  // namespace unav
