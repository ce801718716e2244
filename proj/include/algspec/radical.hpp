#pragma once

#include <vector>

#include "algspec/constants.hpp"

namespace algspec {

// base + sum of coeff * sqrt(radicand), with radicands that resisted
// evaluation inside Q(i, sqrt(d)). Kept canonical by radical_reduce:
// resolvable square roots are folded into base, rational radicands are
// square-free integers, negative radicands moved to i * sqrt(|.|), like
// radicands merged, terms sorted.
struct RadicalTerm {
    Const radicand;
    Const coeff;
};

struct RadicalNumber {
    Const base;
    std::vector<RadicalTerm> terms;

    RadicalNumber() = default;
    RadicalNumber(const Const& c) : base(c) {}

    bool is_radical_free() const { return terms.empty(); }
    bool is_nonneg_integer() const {
        return terms.empty() && base.is_rational() && rat_is_int(base.re) && base.re >= 0;
    }
    bool is_integer() const { return terms.empty() && base.is_integer(); }
};

RadicalNumber radical_sqrt(const Const& radicand, const Const& coeff);

RadicalNumber radical_reduce(const RadicalNumber& r);

RadicalNumber operator+(const RadicalNumber& a, const RadicalNumber& b);
RadicalNumber operator-(const RadicalNumber& a, const RadicalNumber& b);
RadicalNumber operator-(const RadicalNumber& a);
RadicalNumber radical_scale(const RadicalNumber& a, const Const& k);
bool operator==(const RadicalNumber& a, const RadicalNumber& b);

std::string radical_to_string(const RadicalNumber& r);

}  // namespace algspec
