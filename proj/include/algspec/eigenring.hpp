#pragma once

#include <array>

#include "algspec/kovacic.hpp"

namespace algspec {

// The operator D^2 + p D + q.
struct Operator2 {
    RatC p, q;
};

// Companion matrix A = (0, -1; q, p) of the first-order system dX = -AX.
struct CompanionSystem {
    std::array<RatC, 4> A;  // row major
};
CompanionSystem op_to_system(const Operator2& L);

// Eigenring element a + b D, with the induced matrix
// P = (a, b; a' - b q, a + b' - b p). Elements commute with the operator
// modulo it, equivalently dP = PA - AP.
struct EigenringElement {
    RatC a, b;
    std::array<RatC, 4> P;
    bool invertible = false;  // det P != 0, i.e. P in GL(2, C(x))
};

struct EigenringBasis {
    std::vector<EigenringElement> elements;  // identity always present
    int dim = 0;                             // certified lower bound
    int degree_bound = 0;
};

// Degree-bounded rational ansatz: numerators up to degree_bound over
// den(A)^(max pole order + 1). The bound is raised internally when the
// identity would not fit. Every returned element is re-verified exactly.
EigenringBasis eigenring_compute(const Operator2& L, int degree_bound = 10);

bool eigenring_check(const Operator2& L, const EigenringElement& e);

// Span membership of a + b D in the computed basis.
bool eigenring_contains(const EigenringBasis& basis, const RatC& a, const RatC& b);

// Operator polynomials sum coeffs[i] D^i over C(x), multiplied with the
// Leibniz twist D f = f D + f'.
using OperatorPoly = std::vector<RatC>;
OperatorPoly op_mul(const OperatorPoly& f, const OperatorPoly& g);
// Remainder of f modulo the left ideal of D^2 + p D + q; degree <= 1.
OperatorPoly op_mod(const OperatorPoly& f, const Operator2& L);

struct GaloisHint {
    std::string note;
    bool consistent = true;
};
// What the eigenring dimension says about the group, checked against a
// solved result where the comparison is decisive.
GaloisHint galois_hint_from_dim(int dim, const KovacicResult& context);

}  // namespace algspec
