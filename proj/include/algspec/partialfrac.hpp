#pragma once

#include <map>
#include <vector>

#include "algspec/factor.hpp"

namespace algspec {

// f = poly_part + sum over poles c of sum_k coeff / (x - c)^k.
struct PartialFractions {
    PolyC poly_part;
    struct Pole {
        Const location;
        std::vector<Const> coeffs;  // coeffs[k-1] is the (x-c)^{-k} coefficient
        int order() const { return static_cast<int>(coeffs.size()); }
        Const residue() const { return coeffs.empty() ? Const() : coeffs[0]; }
    };
    std::vector<Pole> poles;  // sorted by const_less(location)

    const Pole* find(const Const& c) const {
        for (const auto& p : poles) {
            if (p.location == c) return &p;
        }
        return nullptr;
    }
};

// Exact decomposition; throws IrreducibleResidual if the denominator does
// not split over the constant field.
PartialFractions partial_fractions(const RatC& f);

// Re-assemble; inverse of partial_fractions (used as a self-check).
RatC partial_fractions_sum(const PartialFractions& pf);

// Coefficient of (x-c)^{-k}; zero when absent.
Const pf_coeff(const PartialFractions& pf, const Const& c, int k);

}  // namespace algspec
