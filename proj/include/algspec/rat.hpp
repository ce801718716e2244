#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace algspec {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool rat_is_int(const Rat& r) { return rat_den(r) == 1; }

// Floor of a rational, as an Int.
inline Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// Exact integer square root when n is a perfect square.
std::optional<Int> int_sqrt_exact(const Int& n);

// Exact rational square root when r is a square of a rational, r >= 0.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

// n = s^2 * f with f square-free (f may keep a large unfactored cofactor,
// which is then only square-free "as far as trial division saw").
struct SquareSplit {
    Int square_root;  // s
    Int free_part;    // f
};
SquareSplit split_square(const Int& n);

std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q", optional leading sign. Throws on malformed input.
Rat rat_from_string(const std::string& s);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace algspec
