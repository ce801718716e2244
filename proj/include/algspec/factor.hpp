#pragma once

#include <vector>

#include "algspec/field.hpp"

namespace algspec {

// Thrown when a factor cannot be split into linear pieces over the current
// constant field; carries the offending irreducible (or unresolved) factor.
struct IrreducibleResidual : std::runtime_error {
    PolyC residual;
    explicit IrreducibleResidual(PolyC r, const std::string& msg)
        : std::runtime_error(msg), residual(std::move(r)) {}
};

struct RootMult {
    Const root;
    int mult;
};

// Complete factorization into linear factors over Q(i, sqrt(d)).
// Roots are sorted (const_less) for deterministic output, and the product
// of the factors is re-multiplied as a self-check.
std::vector<RootMult> factor_over_field(const PolyC& p);

// Like factor_over_field but returns what it found plus the unsplit
// remainder instead of throwing; remainder has degree 0 when complete.
struct PartialFactorization {
    std::vector<RootMult> roots;
    PolyC remainder;  // monic; degree 0 when fully split
};
PartialFactorization factor_partial(const PolyC& p);

}  // namespace algspec
