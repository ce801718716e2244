#pragma once

#include "algspec/kovacic.hpp"

namespace algspec {

struct HyKind {
    SolutionKind kind = SolutionKind::Hyperexponential;
    int algebraic_order = 1;  // minimal n with zeta^n rational (when algebraic)
};

// Membership type of a hyperexponential value over C(x): rational,
// algebraic (product of rational powers), or genuinely exponential.
HyKind classify_hyperexp(const Hyperexp& h);

// Differential Galois group over C(x) from the solved structure.
GroupInfo classify_group(int case_used, const std::vector<Solution>& sols, int case3_m);

// Same decision tree driven directly by a solver result. A truncated search
// (skipped degree bounds, residues outside the constant field) downgrades the
// no-solution verdict to ReducibleUnresolved instead of claiming SL2.
GroupInfo classify_from_kovacic(const KovacicResult& result);

// Group of the unreduced equation Psi = alpha^{-1/4} Phi, where Phi runs over
// the reduced solutions in the z variable and (dz/dx)^2 = alpha(z). The base
// is C(z) itself when sqrt(alpha) is rational, C(z)(sqrt(alpha)) otherwise;
// the quarter-power shift omega -> omega - alpha'/(4 alpha) is applied before
// membership testing.
GroupInfo classify_group_transported(const std::vector<Solution>& sols, const RatC& alpha,
                                     int case_used, int case3_m);

}  // namespace algspec
