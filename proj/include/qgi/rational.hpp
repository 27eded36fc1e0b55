#pragma once

#include <gmpxx.h>
#include <string>

#include "qgi/errors.hpp"

namespace qgi {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator. Every operation is exact; nothing ever rounds.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
// Rejects anything else (whitespace, empty fields, zero denominator).
Rational parse_rational(const std::string& text);

// Canonical form: "p/q" when q != 1, plain integer otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

} // namespace qgi
