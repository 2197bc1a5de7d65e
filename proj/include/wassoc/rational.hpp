#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wassoc {

/// Exact scalar of the ground field. Always kept canonical (reduced, positive
/// denominator); every constructor path below calls canonicalize().
using Rational = mpq_class;

/// Dense coordinate vector.
using Vec = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Bit-exact "p/q" form, denominator always written ("3/1", "-1/2", "0/1").
std::string format_rational(const Rational& q);

/// Shortest human form: "3", "-1/2".
std::string pretty_rational(const Rational& q);

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

Vec& axpy(Vec& y, const Rational& a, const Vec& x);  // y += a*x
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);

}  // namespace wassoc
