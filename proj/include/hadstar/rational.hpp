#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "hadstar/errors.hpp"

namespace hadstar {

/// Exact arbitrary-precision integers and rationals.  mpq_class keeps the
/// canonical form we rely on everywhere: gcd(num, den) = 1 and den > 0, so
/// two equal rationals always have identical representations.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" (optional leading '-', base 10).  Throws InputError
/// on anything else, including q = 0.  `where` is prepended to the error
/// message so JSON readers can report the offending location.
Rat rat_parse(std::string_view text, const std::string& where = {});

/// Serializes canonically: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

/// Sign as -1 / 0 / +1.
inline int rat_sign(const Rat& r) { return sgn(r); }

/// Scales a rational vector to its canonical primitive-integer form: entries
/// become integers with overall content 1 and the first nonzero entry
/// positive.  The zero vector is left unchanged.  This is the normalization
/// used for projective point representatives, Pluecker vectors and kernel
/// basis vectors.
void make_primitive(std::vector<Rat>& v);

/// Convenience: primitive-integer copy of `v`.
std::vector<Rat> primitive(std::vector<Rat> v);

}  // namespace hadstar
