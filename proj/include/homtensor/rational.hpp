#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace homtensor {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator.
using Rat = mpq_class;

/// Coordinate vector relative to the standard basis of a carrier space.
using Vec = std::vector<Rat>;

/// Parses "p" or "p/q" with an optional leading '-' on p. Throws ParseError
/// on anything else, including zero denominators and floating-point syntax.
Rat parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rat& value);

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
void add_scaled(Vec& acc, const Rat& c, const Vec& v);
Vec negate(const Vec& v);

std::string to_string(const Vec& v);

} // namespace homtensor
