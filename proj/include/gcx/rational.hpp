#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gcx {

// Exact rational coefficient in canonical form: gcd(|p|, q) = 1, q >= 1,
// zero is 0/1. Arithmetic preserves canonical form; as usual with GMP, a
// value built directly from a raw fraction needs .canonicalize() first.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Accepts `p`, `-p` or `p/q` with decimal p, q and q > 0.
Rational parse_rational(const std::string& text);

// `p` when the denominator is 1, else `p/q`.
std::string to_string(const Rational& r);

}  // namespace gcx
