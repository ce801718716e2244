#include <algorithm>

#include "algspec/factor.hpp"
#include "algspec/galois.hpp"
#include "algspec/kovacic.hpp"
#include "algspec/linalg.hpp"

namespace algspec {

// Monic P of degree n with P'' + 2 omega P' + (omega' + omega^2 - r) P = 0,
// or nullopt. Shared by the case-1 search and the spectral verifier.
std::optional<PolyC> solve_recu1(const RatC& r, const RatC& omega, int n) {
    RatC u = ratfunc_derivative(omega) + omega * omega - r;
    PolyC D = poly_lcm(u.den, omega.den);
    std::vector<PolyC> basis_rows;
    int max_deg = 0;
    for (int j = 0; j <= n; ++j) {
        // E(x^j) * D must be a polynomial.
        RatC xj{PolyC::monomial(Const(1), j), PolyC::constant(Const(1))};
        RatC ddx = j >= 2 ? RatC(PolyC::monomial(Const(static_cast<long long>(j) * (j - 1)), j - 2))
                          : RatC(0);
        RatC dx = j >= 1 ? RatC(PolyC::monomial(Const(j), j - 1)) : RatC(0);
        RatC e = ddx + RatC(2) * omega * dx + u * xj;
        RatC scaled = e * RatC{D, PolyC::constant(Const(1))};
        if (scaled.den.degree() != 0) throw std::logic_error("recu1 clearing failed");
        PolyC row = scaled.num * const_inv(scaled.den.lc());
        max_deg = std::max(max_deg, row.degree());
        basis_rows.push_back(std::move(row));
    }
    Matrix<Const> A(max_deg + 1, n);
    std::vector<Const> rhs(max_deg + 1, Const());
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= basis_rows[j].degree(); ++k) {
            if (j < n) {
                A.at(k, j) = basis_rows[j].coeff(k);
            } else {
                rhs[k] = -basis_rows[j].coeff(k);
            }
        }
    }
    auto sol = solve_linear(A, rhs);
    if (!sol) return std::nullopt;
    PolyC P;
    P.c.assign(n + 1, Const());
    P.c[n] = Const(1);
    for (int j = 0; j < n; ++j) P.c[j] = (*sol)[j];
    P.trim();
    // The linear solve used a particular solution; substitute back exactly.
    RatC Pr{P, PolyC::constant(Const(1))};
    RatC check = ratfunc_derivative(ratfunc_derivative(Pr)) +
                 RatC(2) * omega * ratfunc_derivative(Pr) + u * Pr;
    if (!check.is_zero()) return std::nullopt;
    return P;
}

namespace {

struct PatternData {
    std::string pattern;
    int n = 0;
    RatC omega;
};

std::vector<PatternData> enumerate_patterns(const RatC& r, const PoleAnalysis& pa,
                                            std::vector<std::string>* warnings) {
    std::vector<PatternData> out;
    int np = static_cast<int>(pa.poles.size());
    if (np > 20) {
        if (warnings) warnings->push_back("too many poles for the sign-pattern sweep");
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (np + 1)); ++mask) {
        bool inf_plus = mask & 1u;
        RadicalNumber d = inf_plus ? *pa.infinity.alpha_plus : *pa.infinity.alpha_minus;
        RatC omega;
        std::string pat = inf_plus ? "+" : "-";
        pat += ";";
        bool usable = true;
        for (int i = 0; i < np; ++i) {
            bool plus = mask & (1u << (i + 1));
            const PoleSite& s = pa.poles[i];
            const RadicalNumber& a = plus ? *s.alpha_plus : *s.alpha_minus;
            d = d - a;
            pat += (i ? "," : "");
            pat += plus ? "+" : "-";
            if (!a.is_radical_free()) {
                usable = false;  // residue would leave the constant field
                continue;
            }
            PolyC lin;
            lin.c = {-s.location, Const(1)};
            omega += RatC(PolyC::constant(a.base), lin);
            if (s.order >= 4) {
                RatC sp = s.sqrt_part->principal;
                omega += plus ? sp : -sp;
            }
        }
        if (pa.infinity.order <= 0) {
            RatC sp{pa.infinity.sqrt_part->p, PolyC::constant(Const(1))};
            omega += inf_plus ? sp : -sp;
        }
        if (!d.is_nonneg_integer()) continue;
        if (!usable) {
            if (warnings)
                warnings->push_back("pattern " + pat +
                                    " admits an integer degree but its residues leave the "
                                    "constant field; skipped");
            continue;
        }
        Int nn = rat_num(d.base.re);
        if (nn > 3000) {
            if (warnings) warnings->push_back("pattern " + pat + " needs degree " + nn.str() + "; skipped");
            continue;
        }
        (void)r;
        out.push_back({pat, static_cast<int>(nn.convert_to<long long>()), omega});
    }
    return out;
}

bool already_have(const std::vector<Solution>& sols, const Hyperexp& h) {
    for (const auto& s : sols) {
        if (s.value && hy_equal_up_to_scalar(*s.value, h)) return true;
    }
    return false;
}

Solution make_explicit_solution(const Hyperexp& h) {
    Solution s;
    HyKind k = classify_hyperexp(h);
    s.kind = k.kind;
    s.algebraic_order = k.algebraic_order;
    s.value = h;
    return s;
}

// Rational S with S' + omega_g S = R_g, poles confined to those of the
// coefficients; degree-bounded search.
std::optional<RatC> first_order_rational_solve(const RatC& omega_g, const RatC& R_g, int slack) {
    PolyC den = poly_monic(omega_g.den * R_g.den);
    den = den * den;
    int extra = std::max(0, -R_g.order_at_infinity()) + std::max(0, -omega_g.order_at_infinity());
    int N = den.degree() + extra + slack;
    // S = sum c_j x^j / den.
    std::vector<PolyC> rows;
    int max_deg = 0;
    // Common clearing multiple: den^2 * den(omega_g).
    PolyC clear = den * den * omega_g.den;
    RatC clear_r{clear, PolyC::constant(Const(1))};
    for (int j = 0; j <= N; ++j) {
        RatC xj{PolyC::monomial(Const(1), j), den};
        RatC e = ratfunc_derivative(xj) + omega_g * xj;
        RatC scaled = e * clear_r;
        if (scaled.den.degree() != 0) throw std::logic_error("first-order clearing failed");
        PolyC row = scaled.num * const_inv(scaled.den.lc());
        max_deg = std::max(max_deg, row.degree());
        rows.push_back(std::move(row));
    }
    RatC rhs_scaled = R_g * clear_r;
    if (rhs_scaled.den.degree() != 0) return std::nullopt;  // R_g pole outside ansatz
    PolyC rhs_poly = rhs_scaled.num * const_inv(rhs_scaled.den.lc());
    max_deg = std::max(max_deg, rhs_poly.degree());
    Matrix<Const> A(max_deg + 1, N + 1);
    std::vector<Const> rhs(max_deg + 1, Const());
    for (int j = 0; j <= N; ++j) {
        for (int k = 0; k <= rows[j].degree(); ++k) A.at(k, j) = rows[j].coeff(k);
    }
    for (int k = 0; k <= rhs_poly.degree(); ++k) rhs[k] = rhs_poly.coeff(k);
    auto sol = solve_linear(A, rhs);
    if (!sol) return std::nullopt;
    PolyC num;
    num.c.assign(N + 1, Const());
    for (int j = 0; j <= N; ++j) num.c[j] = (*sol)[j];
    num.trim();
    if (num.is_zero()) return std::nullopt;
    RatC S{num, den};
    if (!(ratfunc_derivative(S) + omega_g * S == R_g)) return std::nullopt;
    return S;
}

}  // namespace

// Second solution from a known one. Appends to sols when something is found.
// A prefactor that is irreducible over the constant field blocks the
// reduction-of-order integral; the first solution then stands alone.
void extend_with_second_solution(const RatC& r, std::vector<Solution>& sols, int base_index,
                                 const KovacicOptions& opts) try {
    const Hyperexp& base = *sols[base_index].value;
    RatC v = hy_logderiv(base);
    // g = exp(-2 int v) written canonically.
    Hyperexp g = hy_make(RatC(1), RatC(-2) * v);
    if (g.exp_free()) {
        RationalIntegral integral = integrate_rational(g.R);
        if (integral.logs.empty()) {
            Hyperexp second = hy_mul(base, hy_rational(integral.rational_part));
            if (!ode_check(second, r)) throw std::logic_error("second solution failed the equation");
            if (!already_have(sols, second)) sols.push_back(make_explicit_solution(second));
        } else {
            Solution s;
            s.kind = SolutionKind::LogSecond;
            s.base_index = base_index;
            s.log_part = LogCombination{integral.rational_part, integral.logs};
            sols.push_back(std::move(s));
        }
        return;
    }
    auto S = first_order_rational_solve(g.omega, g.R, opts.second_degree_slack);
    if (S) {
        Hyperexp second = hy_mul(base, hy_make(*S, g.omega));
        if (!ode_check(second, r)) throw std::logic_error("second solution failed the equation");
        if (!already_have(sols, second)) sols.push_back(make_explicit_solution(second));
    }
} catch (const IrreducibleResidual&) {
}

std::vector<Solution> case1_solve(const RatC& r, const PoleAnalysis& pa,
                                  std::vector<KovacicResult::Case1Hit>* hits,
                                  std::vector<std::string>* warnings,
                                  const KovacicOptions& opts) {
    std::vector<Solution> sols;
    if (!pa.case1_admissible) return sols;
    for (const PatternData& pd : enumerate_patterns(r, pa, warnings)) {
        auto P = solve_recu1(r, pd.omega, pd.n);
        if (!P) continue;
        Hyperexp h = hy_make(RatC{*P, PolyC::constant(Const(1))}, pd.omega);
        if (opts.verify && !ode_check(h, r)) throw std::logic_error("case-1 solution failed the equation");
        if (hits) hits->push_back({pd.pattern, pd.n, pd.omega, *P});
        if (!already_have(sols, h)) sols.push_back(make_explicit_solution(h));
    }
    if (sols.size() == 1) extend_with_second_solution(r, sols, 0, opts);
    return sols;
}

}  // namespace algspec
