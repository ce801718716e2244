#pragma once

#include <optional>

#include "algspec/partialfrac.hpp"

namespace algspec {

// Value R(x) * exp(integral of omega dx). Canonical form keeps omega free
// of integer parts in its simple-pole rational residues (those powers of
// (x - c) live in R instead), so value comparison reduces to comparing
// total logarithmic derivatives.
struct Hyperexp {
    RatC R = RatC(1);
    RatC omega;

    bool exp_free() const { return omega.is_zero(); }
};

Hyperexp hy_make(const RatC& R, const RatC& omega);  // canonicalizes
Hyperexp hy_rational(const RatC& R);

RatC hy_logderiv(const Hyperexp& h);  // omega + R'/R

Hyperexp hy_mul(const Hyperexp& a, const Hyperexp& b);
Hyperexp hy_scale(const Hyperexp& a, const Const& k);
Hyperexp hy_div(const Hyperexp& a, const Hyperexp& b);
Hyperexp hy_derivative(const Hyperexp& a);

// a + b when both carry the same exponential part (equal omega after
// canonicalization); nullopt otherwise.
std::optional<Hyperexp> hy_add_same_exp(const Hyperexp& a, const Hyperexp& b);

// c with a = c * b, when the two values agree up to a constant.
std::optional<Const> hy_ratio_constant(const Hyperexp& a, const Hyperexp& b);

bool hy_equal_up_to_scalar(const Hyperexp& a, const Hyperexp& b);

// Exact antiderivative of a rational function: a rational part plus
// logarithmic terms coeff * log(x - location).
struct RationalIntegral {
    RatC rational_part;
    struct LogTerm {
        Const coeff;
        Const location;
    };
    std::vector<LogTerm> logs;
};
RationalIntegral integrate_rational(const RatC& f);

// Pretty form: splits omega into a polynomial exponent, rational-power
// factors, and an unreduced integral remainder.
std::string hy_to_string(const Hyperexp& h, const std::string& var);

}  // namespace algspec
