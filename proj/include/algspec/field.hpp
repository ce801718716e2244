#pragma once

#include "algspec/constants.hpp"
#include "algspec/poly.hpp"
#include "algspec/ratfunc.hpp"

namespace algspec {

// The two coefficient fields in use: plain constants, and rational
// functions of a parameter (for spectral and inverse problems, where the
// main variable's coefficients carry a symbol lambda or mu).
using PolyC = Poly<Const>;
using RatC = RatFunc<Const>;
using ParamF = RatFunc<Const>;       // functions of the parameter
using PolyP = Poly<ParamF>;          // poly in x, coefficients in Q(..)(param)
using RatP = RatFunc<ParamF>;

inline PolyC poly_from_rats(std::initializer_list<Rat> v) {
    std::vector<Const> c;
    for (const Rat& r : v) c.emplace_back(r);
    return PolyC(std::move(c));
}

inline PolyC poly_from_ints(std::initializer_list<long long> v) {
    std::vector<Const> c;
    for (long long r : v) c.emplace_back(r);
    return PolyC(std::move(c));
}

inline std::string const_fmt(const Const& c) { return const_to_string(c); }

inline std::string polyc_str(const PolyC& p, const std::string& var = "x") {
    return poly_to_string(p, var, const_fmt);
}

inline std::string ratc_str(const RatC& f, const std::string& var = "x") {
    return ratfunc_to_string(f, var, const_fmt);
}

// Promote a constant-coefficient object into the parametric field.
inline ParamF param_const(const Const& k) { return ParamF(Poly<Const>::constant(k)); }

inline RatP promote_to_param(const RatC& f) {
    auto lift = [](const PolyC& p) {
        Poly<ParamF> q;
        q.c.reserve(p.c.size());
        for (const Const& k : p.c) q.c.push_back(param_const(k));
        q.trim();
        return q;
    };
    return RatP(lift(f.num), lift(f.den));
}

// Substitute a concrete value for the parameter. Throws FieldError if a
// coefficient denominator vanishes there.
RatC param_substitute(const RatP& f, const Const& value);

inline Const param_eval(const ParamF& f, const Const& value) {
    Const d = poly_eval(f.den, value);
    if (d.is_zero()) throw FieldError("parameter value hits a coefficient pole");
    return poly_eval(f.num, value) / d;
}

}  // namespace algspec
