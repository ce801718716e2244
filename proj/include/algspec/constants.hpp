#pragma once

#include <optional>
#include <string>

#include "algspec/rat.hpp"

namespace algspec {

// Element of Q(i, sqrt(d)): re + im*i + rad*sqrt(d) + rad_im*i*sqrt(d).
// d is a square-free integer >= 2, or 0 when no radical has been adjoined.
// Mixing two different nonzero d values in one computation is an error;
// a session works in one quadratic extension at a time.
struct Const {
    Rat re, im, rad, rad_im;
    std::int64_t d = 0;

    Const() = default;
    Const(long long n) : re(n) {}
    explicit Const(const Rat& r) : re(r) {}
    Const(const Rat& re_, const Rat& im_) : re(re_), im(im_) {}

    bool is_zero() const { return re == 0 && im == 0 && rad == 0 && rad_im == 0; }
    bool is_rational() const { return im == 0 && rad == 0 && rad_im == 0; }
    bool is_gaussian() const { return rad == 0 && rad_im == 0; }
    bool is_real() const { return im == 0 && rad_im == 0; }
    bool is_integer() const { return is_rational() && rat_is_int(re); }
};

Const const_i();
Const const_sqrt_d(std::int64_t d);  // the adjoined radical itself

Const operator+(const Const& a, const Const& b);
Const operator-(const Const& a, const Const& b);
Const operator-(const Const& a);
Const operator*(const Const& a, const Const& b);
Const operator/(const Const& a, const Const& b);
bool operator==(const Const& a, const Const& b);
bool operator!=(const Const& a, const Const& b);

Const& operator+=(Const& a, const Const& b);
Const& operator-=(Const& a, const Const& b);
Const& operator*=(Const& a, const Const& b);
Const& operator/=(Const& a, const Const& b);

Const const_inv(const Const& a);
Const const_conj(const Const& a);       // complex conjugate (i -> -i)
Const const_conj_rad(const Const& a);   // radical conjugate (sqrt(d) -> -sqrt(d))

// Field norm down to Q: product of the four conjugates. Zero iff a is zero.
Rat const_norm_q(const Const& a);

// Square root within Q(i, sqrt(d)) when one exists. Handles every shape
// needed in practice: rational, pure-imaginary-free Gaussian values, real
// values with a sqrt(d) part, and i times any of those.
std::optional<Const> const_sqrt(const Const& a);

// Total order used for deterministic output (not a numeric order beyond
// the rational-real case). Sorts by components lexicographically.
bool const_less(const Const& a, const Const& b);

std::string const_to_string(const Const& c);

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace algspec
