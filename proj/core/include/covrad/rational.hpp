#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace covrad {

// All arithmetic in this library is exact. Integers and rationals are backed
// by GMP; mpq_class keeps values canonical (lowest terms, positive
// denominator) under arithmetic, and every construction path below
// canonicalizes explicitly.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

// num/den in lowest terms with positive denominator. den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q"; rejects anything else (including q = 0).
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x); // "p" when q = 1, else "p/q"
std::string to_string(const RatVec& v);   // "(a, b, ...)"
std::string to_string(const IntVec& v);

Integer floor_rat(const Rational& x);
Integer ceil_rat(const Rational& x);
Integer round_nearest(const Rational& x); // floor(x + 1/2)

// Lexicographic comparisons used for deterministic tie-breaking.
int lex_cmp(const RatVec& a, const RatVec& b);
int lex_cmp(const IntVec& a, const IntVec& b);
// Compare by last coordinate first; ranks e1 < e2 < ... < en.
int colex_cmp(const IntVec& a, const IntVec& b);

inline RatVec to_ratvec(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (const Integer& x : v)
        out.emplace_back(x);
    return out;
}

} // namespace covrad
