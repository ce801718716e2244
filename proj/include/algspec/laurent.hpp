#pragma once

#include <optional>

#include "algspec/field.hpp"

namespace algspec {

// Principal part of sqrt(r) at a finite pole of even order 2v >= 4:
// S = sum of s_k (x-c)^(k-v) for k = 0..v-2, plus the two expansion
// constants a (leading coefficient) and b (coefficient of (x-c)^(-(v+1))
// in r - S^2).
struct SqrtAtPole {
    Const location;
    int v = 0;
    RatC principal;  // S as an exact rational function
    Const a;
    Const b;
};

// Polynomial part of sqrt(r) at infinity when r has order -2v <= 0 there:
// P of degree v, with a its leading coefficient and b the coefficient of
// x^(v-1) in r - P^2. For v = 0, P is the constant a.
struct SqrtAtInfinity {
    int v = 0;
    PolyC p;
    Const a;
    Const b;
};

// nullopt when the leading series coefficient has no square root in the
// constant field (the corresponding case-1 data then does not exist there).
std::optional<SqrtAtPole> sqrt_principal_at_pole(const RatC& r, const Const& c);
std::optional<SqrtAtInfinity> sqrt_principal_at_infinity(const RatC& r);

// Coefficient of (x-c)^(-k) in the Laurent expansion of g at c (k >= 1).
Const coefficient_at_pole(const RatC& g, const Const& c, int k);

// Coefficient of x^e in the expansion of g at infinity (any integer e).
Const coefficient_at_infinity(const RatC& g, int e);

struct InternalSeriesError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace algspec
