#include "algspec/hyperexp.hpp"

namespace algspec {

namespace {

// Split omega into (absorbable log-derivative part, remainder). The
// absorbable part is prod (x-c)^m over simple-pole rational residues with
// integer part m = floor(residue).
struct AbsorbSplit {
    RatC factor_num;   // product of (x-c)^m with m > 0
    RatC factor_den;   // product of (x-c)^(-m) with m < 0
    RatC remainder;    // omega minus the log derivative of the factor
    bool changed = false;
};

AbsorbSplit absorb_split(const RatC& omega) {
    AbsorbSplit out;
    out.factor_num = RatC(1);
    out.factor_den = RatC(1);
    out.remainder = omega;
    if (omega.is_zero()) return out;
    PartialFractions pf = partial_fractions(omega);
    for (const auto& pole : pf.poles) {
        Const c = pole.coeffs.empty() ? Const() : pole.coeffs[0];
        if (c.is_rational() && rat_floor(c.re) != 0) {
            out.changed = true;
            break;
        }
    }
    if (!out.changed) return out;
    RatC rem{pf.poly_part, PolyC::constant(Const(1))};
    for (const auto& pole : pf.poles) {
        PolyC lin;
        lin.c = {-pole.location, Const(1)};
        PolyC den = PolyC::constant(Const(1));
        for (int k = 1; k <= pole.order(); ++k) {
            den = den * lin;
            Const c = pole.coeffs[k - 1];
            if (c.is_zero()) continue;
            if (k == 1 && c.is_rational()) {
                Int m = rat_floor(c.re);
                if (m != 0) {
                    c = c - Const(Rat(m));
                    RatC linf{lin, PolyC::constant(Const(1))};
                    if (m > 0) {
                        for (Int i = 0; i < m; ++i) out.factor_num *= linf;
                    } else {
                        for (Int i = 0; i < -m; ++i) out.factor_den *= linf;
                    }
                }
            }
            if (!c.is_zero()) rem += RatC(PolyC::constant(c), den);
        }
    }
    out.remainder = rem;
    return out;
}

}  // namespace

Hyperexp hy_make(const RatC& R, const RatC& omega) {
    if (R.is_zero()) throw std::domain_error("hyperexponential with zero prefactor");
    AbsorbSplit sp = absorb_split(omega);
    Hyperexp h;
    if (sp.changed) {
        h.R = R * sp.factor_num / sp.factor_den;
        h.omega = sp.remainder;
    } else {
        h.R = R;
        h.omega = omega;
    }
    return h;
}

Hyperexp hy_rational(const RatC& R) { return hy_make(R, RatC(0)); }

RatC hy_logderiv(const Hyperexp& h) { return h.omega + ratfunc_logderiv(h.R); }

Hyperexp hy_mul(const Hyperexp& a, const Hyperexp& b) {
    return hy_make(a.R * b.R, a.omega + b.omega);
}

Hyperexp hy_scale(const Hyperexp& a, const Const& k) {
    if (k.is_zero()) throw std::domain_error("scaling a solution by zero");
    Hyperexp h = a;
    h.R = h.R * RatC(k);
    return h;
}

Hyperexp hy_div(const Hyperexp& a, const Hyperexp& b) {
    return hy_make(a.R / b.R, a.omega - b.omega);
}

Hyperexp hy_derivative(const Hyperexp& a) {
    // (R' + R*omega) exp(int omega); omega untouched, so still canonical.
    Hyperexp h;
    h.R = ratfunc_derivative(a.R) + a.R * a.omega;
    h.omega = a.omega;
    if (h.R.is_zero()) throw std::domain_error("derivative vanished identically");
    return h;
}

std::optional<Hyperexp> hy_add_same_exp(const Hyperexp& a, const Hyperexp& b) {
    if (!(a.omega == b.omega)) return std::nullopt;
    RatC R = a.R + b.R;
    if (R.is_zero()) return std::nullopt;
    Hyperexp h;
    h.R = R;
    h.omega = a.omega;
    return h;
}

std::optional<Const> hy_ratio_constant(const Hyperexp& a, const Hyperexp& b) {
    if (!(a.omega == b.omega)) {
        // Ratio of exponentials may still be rational; compare log derivatives.
        if (!(hy_logderiv(a) == hy_logderiv(b))) return std::nullopt;
        // Same total log derivative but different canonical omega cannot
        // happen: canonical omega is determined by the log derivative.
        return std::nullopt;
    }
    RatC q = a.R / b.R;
    if (!q.is_constant()) return std::nullopt;
    return q.constant_value();
}

bool hy_equal_up_to_scalar(const Hyperexp& a, const Hyperexp& b) {
    return hy_logderiv(a) == hy_logderiv(b);
}

RationalIntegral integrate_rational(const RatC& f) {
    RationalIntegral out;
    if (f.is_zero()) return out;
    PartialFractions pf = partial_fractions(f);
    PolyC anti;
    anti.c.assign(pf.poly_part.c.size() + 1, Const());
    for (int i = 0; i <= pf.poly_part.degree(); ++i) {
        anti.c[i + 1] = pf.poly_part.coeff(i) / Const(i + 1);
    }
    anti.trim();
    RatC rat{anti, PolyC::constant(Const(1))};
    for (const auto& pole : pf.poles) {
        PolyC lin;
        lin.c = {-pole.location, Const(1)};
        for (int k = 1; k <= pole.order(); ++k) {
            Const c = pole.coeffs[k - 1];
            if (c.is_zero()) continue;
            if (k == 1) {
                out.logs.push_back({c, pole.location});
            } else {
                rat += RatC(PolyC::constant(c / Const(1 - k)), poly_pow(lin, k - 1));
            }
        }
    }
    out.rational_part = rat;
    return out;
}

std::string hy_to_string(const Hyperexp& h, const std::string& var) {
    std::string pre = ratc_str(h.R, var);
    if (h.omega.is_zero()) return pre;
    // Decompose the exponent integral into exp(poly), power factors, and
    // an unevaluated remainder.
    PartialFractions pf = partial_fractions(h.omega);
    std::string out = pre == "1" ? "" : (pre.find(' ') == std::string::npos ? pre : "(" + pre + ")");
    PolyC anti;
    anti.c.assign(pf.poly_part.c.size() + 1, Const());
    for (int i = 0; i <= pf.poly_part.degree(); ++i) anti.c[i + 1] = pf.poly_part.coeff(i) / Const(i + 1);
    anti.trim();
    auto push = [&out](const std::string& s) {
        if (!out.empty()) out += " * ";
        out += s;
    };
    if (!anti.is_zero()) push("exp(" + polyc_str(anti, var) + ")");
    RatC rest;
    for (const auto& pole : pf.poles) {
        PolyC lin;
        lin.c = {-pole.location, Const(1)};
        std::string base = polyc_str(lin, var);
        if (base.find(' ') != std::string::npos) base = "(" + base + ")";
        for (int k = 1; k <= pole.order(); ++k) {
            Const c = pole.coeffs[k - 1];
            if (c.is_zero()) continue;
            if (k == 1 && c.is_rational()) {
                push(base + "^(" + rat_to_string(c.re) + ")");
            } else {
                rest += RatC(PolyC::constant(c), poly_pow(lin, k));
            }
        }
    }
    if (!rest.is_zero()) push("exp(INT (" + ratc_str(rest, var) + ") d" + var + ")");
    if (out.empty()) out = "1";
    return out;
}

}  // namespace algspec
