#pragma once

#include "algspec/kovacic.hpp"

namespace algspec {

// q = a^2 + b with deg b < deg a for monic q of even degree 2n.
struct SquareCompletion {
    PolyC a;
    PolyC b;
};
SquareCompletion complete_square(const PolyC& q);

// Decision for -y'' + V y = lambda y with polynomial V: either a Borel
// group with explicit eigenfunctions P*exp(±f), or the full group.
struct PolyPotentialResult {
    bool solvable = false;
    GroupInfo group;
    std::vector<Hyperexp> eigenfunctions;
    std::string note;
};
PolyPotentialResult poly_potential_analyze(const PolyC& V, const Const& lambda);

}  // namespace algspec
