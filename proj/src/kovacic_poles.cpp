#include "algspec/kovacic.hpp"

#include <algorithm>

namespace algspec {

NormalFormODE reduce_normal_form(const RatC& a, const RatC& b) {
    NormalFormODE out;
    out.r = a * a / RatC(4) + ratfunc_derivative(a) / RatC(2) - b;
    out.kappa = hy_make(RatC(1), -(a / RatC(2)));
    out.strong = out.kappa.exp_free();
    return out;
}

bool riccati_check(const RatC& omega, const RatC& r) {
    return ratfunc_derivative(omega) + omega * omega == r;
}

bool ode_check(const Hyperexp& zeta, const RatC& r) {
    return riccati_check(hy_logderiv(zeta), r);
}

bool riccati_check_algebraic(const std::vector<RatC>& coeffs, const RatC& r) {
    // F in the variable w (= omega), coefficients rational functions of x.
    Poly<RatC> F{std::vector<RatC>(coeffs)};
    if (F.degree() < 2) return false;
    Poly<RatC> Fx;
    Fx.c.reserve(F.c.size());
    for (const RatC& k : F.c) Fx.c.push_back(ratfunc_derivative(k));
    Fx.trim();
    Poly<RatC> Fw = poly_derivative(F);
    Poly<RatC> quad;  // r - w^2
    quad.c = {r, RatC(0), RatC(-1)};
    Poly<RatC> G = Fx + quad * Fw;
    Poly<RatC> rem = G % F;
    return rem.is_zero();
}

namespace {

RadicalNumber alpha_from_b(const Const& b, int sign) {
    // (1 +- sqrt(1+4b)) / 2
    RadicalNumber r{Const(Rat(1, 2))};
    Const radicand = Const(1) + Const(4) * b;
    return r + radical_sqrt(radicand, Const(Rat(sign, 2)));
}

std::vector<int> e2_set_order2(const Const& b) {
    std::vector<int> out = {2};
    for (int s : {+1, -1}) {
        RadicalNumber v = RadicalNumber(Const(2)) +
                          radical_sqrt(Const(1) + Const(4) * b, Const(2 * s));
        if (v.is_integer()) {
            int n = static_cast<int>(rat_num(v.base.re).convert_to<long long>());
            out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> e3_set_order2(const Const& b, int m) {
    std::vector<int> out;
    for (int k = -m / 2; k <= m / 2; ++k) {
        RadicalNumber v = RadicalNumber(Const(6)) +
                          radical_sqrt(Const(1) + Const(4) * b, Const(Rat(12 * k, m)));
        if (v.is_integer()) {
            out.push_back(static_cast<int>(rat_num(v.base.re).convert_to<long long>()));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

PoleAnalysis analyze_poles(const RatC& r) {
    PoleAnalysis out;
    if (r.is_zero()) {
        out.infinity.order = 1 << 20;
        out.infinity.alpha_plus = RadicalNumber(Const(0));
        out.infinity.alpha_minus = RadicalNumber(Const(1));
        out.infinity.case1_data_ok = true;
        out.case1_admissible = true;
        out.e2_inf = {0, 2, 4};
        return out;
    }
    auto roots = factor_over_field(r.den);
    bool orders_ok_1 = true;
    bool any_order2_or_odd_tall = false;
    bool orders_ok_3 = true;
    bool data_ok_1 = true;
    for (const auto& rm : roots) {
        PoleSite s;
        s.location = rm.root;
        s.order = rm.mult;
        if (s.order == 1) {
            s.alpha_plus = RadicalNumber(Const(1));
            s.alpha_minus = RadicalNumber(Const(1));
            s.case1_data_ok = true;
        } else if (s.order == 2) {
            s.b = coefficient_at_pole(r, s.location, 2);
            s.alpha_plus = alpha_from_b(s.b, +1);
            s.alpha_minus = alpha_from_b(s.b, -1);
            s.case1_data_ok = true;
            any_order2_or_odd_tall = true;
        } else if (s.order % 2 == 0) {
            s.sqrt_part = sqrt_principal_at_pole(r, s.location);
            if (s.sqrt_part) {
                s.b = s.sqrt_part->b;
                Const v(s.order / 2);
                Const ba = s.b / s.sqrt_part->a;
                s.alpha_plus = RadicalNumber((ba + v) / Const(2));
                s.alpha_minus = RadicalNumber((v - ba) / Const(2));
                s.case1_data_ok = true;
            } else {
                data_ok_1 = false;
                out.warnings.push_back("leading series coefficient at " +
                                       const_to_string(s.location) +
                                       " has no square root in the constant field");
            }
        } else {
            orders_ok_1 = false;
            if (s.order > 2) any_order2_or_odd_tall = true;
        }
        if (s.order > 2) orders_ok_3 = false;
        out.poles.push_back(std::move(s));
    }
    std::sort(out.poles.begin(), out.poles.end(),
              [](const PoleSite& a, const PoleSite& b) { return const_less(a.location, b.location); });

    int o = r.order_at_infinity();
    out.infinity.order = o;
    bool inf_ok_1 = true;
    if (o > 2) {
        out.infinity.alpha_plus = RadicalNumber(Const(0));
        out.infinity.alpha_minus = RadicalNumber(Const(1));
        out.infinity.case1_data_ok = true;
    } else if (o == 2) {
        out.infinity.b = coefficient_at_infinity(r, -2);
        out.infinity.alpha_plus = alpha_from_b(out.infinity.b, +1);
        out.infinity.alpha_minus = alpha_from_b(out.infinity.b, -1);
        out.infinity.case1_data_ok = true;
    } else if (o <= 0 && o % 2 == 0) {
        out.infinity.sqrt_part = sqrt_principal_at_infinity(r);
        if (out.infinity.sqrt_part) {
            out.infinity.b = out.infinity.sqrt_part->b;
            Const v(-o / 2);
            Const ba = out.infinity.b / out.infinity.sqrt_part->a;
            out.infinity.alpha_plus = RadicalNumber((ba - v) / Const(2));
            out.infinity.alpha_minus = RadicalNumber((Const(0) - ba - v) / Const(2));
            out.infinity.case1_data_ok = true;
        } else {
            data_ok_1 = false;
            out.warnings.push_back(
                "leading series coefficient at infinity has no square root in the constant field");
        }
    } else {
        inf_ok_1 = false;  // order 1, or odd negative
    }

    out.case1_admissible = orders_ok_1 && inf_ok_1 && data_ok_1;
    out.case2_admissible = any_order2_or_odd_tall;
    out.case3_admissible = orders_ok_3 && o >= 2;

    // Case-2 E sets.
    for (const auto& s : out.poles) {
        if (s.order == 1) {
            out.e2.push_back({4});
        } else if (s.order == 2) {
            out.e2.push_back(e2_set_order2(s.b));
        } else {
            out.e2.push_back({s.order});
        }
    }
    if (o > 2) {
        out.e2_inf = {0, 2, 4};
    } else if (o == 2) {
        out.e2_inf = e2_set_order2(out.infinity.b);
    } else {
        out.e2_inf = {o};
    }

    // Case-3 E sets, per group order candidate m.
    if (out.case3_admissible) {
        for (int m : {4, 6, 12}) {
            std::vector<std::vector<int>> sets;
            for (const auto& s : out.poles) {
                if (s.order == 1) {
                    sets.push_back({12});
                } else {
                    sets.push_back(e3_set_order2(s.b, m));
                }
            }
            out.e3[m] = std::move(sets);
            out.e3_inf[m] = e3_set_order2(o > 2 ? Const(0) : out.infinity.b, m);
        }
    }
    return out;
}

}  // namespace algspec
