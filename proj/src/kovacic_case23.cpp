#include <algorithm>

#include "algspec/galois.hpp"
#include "algspec/kovacic.hpp"
#include "algspec/linalg.hpp"

namespace algspec {

namespace {

// Monic P of degree n satisfying the third-order relation
// P''' + 3 theta P'' + (3 theta^2 + 3 theta' - 4 r) P'
//       + (theta'' + 3 theta theta' + theta^3 - 4 r theta - 2 r') P = 0.
std::optional<PolyC> solve_recu2(const RatC& r, const RatC& theta, int n) {
    RatC t1 = theta;
    RatC t2 = ratfunc_derivative(theta);
    RatC t3 = ratfunc_derivative(t2);
    RatC rp = ratfunc_derivative(r);
    RatC c2 = RatC(3) * t1;
    RatC c1 = RatC(3) * t1 * t1 + RatC(3) * t2 - RatC(4) * r;
    RatC c0 = t3 + RatC(3) * t1 * t2 + t1 * t1 * t1 - RatC(4) * r * t1 - RatC(2) * rp;
    PolyC D = poly_monic(c2.den * c1.den * c0.den);
    std::vector<PolyC> rows;
    int max_deg = 0;
    RatC Dr{D, PolyC::constant(Const(1))};
    for (int j = 0; j <= n; ++j) {
        RatC xj{PolyC::monomial(Const(1), j), PolyC::constant(Const(1))};
        RatC d1 = j >= 1 ? RatC(PolyC::monomial(Const(j), j - 1)) : RatC(0);
        RatC d2 = j >= 2 ? RatC(PolyC::monomial(Const(static_cast<long long>(j) * (j - 1)), j - 2))
                         : RatC(0);
        RatC d3 = j >= 3 ? RatC(PolyC::monomial(
                               Const(static_cast<long long>(j) * (j - 1) * (j - 2)), j - 3))
                         : RatC(0);
        RatC e = d3 + c2 * d2 + c1 * d1 + c0 * xj;
        RatC scaled = e * Dr;
        if (scaled.den.degree() != 0) throw std::logic_error("recu2 clearing failed");
        PolyC row = scaled.num * const_inv(scaled.den.lc());
        max_deg = std::max(max_deg, row.degree());
        rows.push_back(std::move(row));
    }
    Matrix<Const> A(max_deg + 1, n);
    std::vector<Const> rhs(max_deg + 1, Const());
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= rows[j].degree(); ++k) {
            if (j < n) {
                A.at(k, j) = rows[j].coeff(k);
            } else {
                rhs[k] = -rows[j].coeff(k);
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
    return P;
}

// Exact square root of a rational function, when num and den are both
// squares (up to the leading unit).
std::optional<RatC> ratfunc_sqrt(const RatC& f) {
    if (f.is_zero()) return RatC(0);
    auto sn = poly_sqrt(f.num, const_sqrt);
    if (!sn) return std::nullopt;
    auto sd = poly_sqrt(f.den, const_sqrt);
    if (!sd) return std::nullopt;
    return RatC{*sn, *sd};
}

std::vector<std::vector<int>> families(const std::vector<std::vector<int>>& per_pole,
                                       const std::vector<int>& inf) {
    // Cartesian product: [e_inf, e_pole1, e_pole2, ...].
    std::vector<std::vector<int>> out;
    out.push_back({});
    std::vector<std::vector<int>> sets;
    sets.push_back(inf);
    for (const auto& s : per_pole) sets.push_back(s);
    for (const auto& s : sets) {
        std::vector<std::vector<int>> next;
        for (const auto& partial : out) {
            for (int e : s) {
                auto ext = partial;
                ext.push_back(e);
                next.push_back(std::move(ext));
            }
        }
        out = std::move(next);
        if (out.size() > 4096) throw std::runtime_error("case family explosion");
    }
    return out;
}

Solution make_explicit(const Hyperexp& h) {
    Solution s;
    HyKind k = classify_hyperexp(h);
    s.kind = k.kind;
    s.algebraic_order = k.algebraic_order;
    s.value = h;
    return s;
}

}  // namespace

std::vector<Solution> case2_solve(const RatC& r, const PoleAnalysis& pa,
                                  std::vector<std::string>* warnings,
                                  const KovacicOptions& opts) {
    std::vector<Solution> sols;
    if (!pa.case2_admissible || pa.poles.empty()) return sols;
    for (const auto& fam : families(pa.e2, pa.e2_inf)) {
        int e_inf = fam[0];
        int sum = 0;
        for (std::size_t i = 1; i < fam.size(); ++i) sum += fam[i];
        int twice_n = e_inf - sum;
        if (twice_n < 0 || twice_n % 2) continue;
        int n = twice_n / 2;
        if (n > 3000) {
            if (warnings) warnings->push_back("case-2 family needs a huge degree; skipped");
            continue;
        }
        RatC theta;
        for (std::size_t i = 1; i < fam.size(); ++i) {
            PolyC lin;
            lin.c = {-pa.poles[i - 1].location, Const(1)};
            theta += RatC(PolyC::constant(Const(Rat(fam[i], 2))), lin);
        }
        auto P = solve_recu2(r, theta, n);
        if (!P) continue;
        RatC Pr{*P, PolyC::constant(Const(1))};
        RatC phi = theta + ratfunc_derivative(Pr) / Pr;
        RatC C = (ratfunc_derivative(phi) + phi * phi - RatC(2) * r) / RatC(2);
        // omega^2 - phi omega + C = 0
        std::vector<RatC> minpoly = {C, -phi, RatC(1)};
        if (!riccati_check_algebraic(minpoly, r)) continue;
        RatC disc = phi * phi - RatC(4) * C;
        if (auto s = ratfunc_sqrt(disc)) {
            for (int sign : {+1, -1}) {
                RatC omega = (phi + (sign > 0 ? *s : -*s)) / RatC(2);
                if (!riccati_check(omega, r)) continue;
                Hyperexp h = hy_make(RatC(1), omega);
                if (opts.verify && !ode_check(h, r))
                    throw std::logic_error("case-2 rational-branch solution failed the equation");
                bool dup = false;
                for (const auto& existing : sols) {
                    if (existing.value && hy_equal_up_to_scalar(*existing.value, h)) dup = true;
                }
                if (!dup) sols.push_back(make_explicit(h));
            }
            if (sols.size() == 1) extend_with_second_solution(r, sols, 0, opts);
            if (!sols.empty()) return sols;
            continue;
        }
        Solution s;
        s.kind = SolutionKind::AlgebraicOmega;
        s.omega_minpoly = minpoly;
        s.note = "two conjugate branches of a degree-2 logarithmic derivative";
        sols.push_back(std::move(s));
        return sols;
    }
    return sols;
}

std::vector<Solution> case3_solve(const RatC& r, const PoleAnalysis& pa,
                                  std::vector<std::string>* warnings,
                                  const KovacicOptions& opts) {
    std::vector<Solution> sols;
    if (!pa.case3_admissible) return sols;
    (void)opts;
    PolyC S = PolyC::constant(Const(1));
    for (const auto& site : pa.poles) {
        PolyC lin;
        lin.c = {-site.location, Const(1)};
        S = S * lin;
    }
    RatC Sr{S, PolyC::constant(Const(1))};
    for (int m : {4, 6, 12}) {
        auto it3 = pa.e3.find(m);
        auto iti = pa.e3_inf.find(m);
        if (it3 == pa.e3.end() || iti == pa.e3_inf.end()) continue;
        bool empty = iti->second.empty();
        for (const auto& s : it3->second) empty = empty || s.empty();
        if (empty) continue;
        for (const auto& fam : families(it3->second, iti->second)) {
            int e_inf = fam[0];
            int sum = 0;
            for (std::size_t i = 1; i < fam.size(); ++i) sum += fam[i];
            int num = m * (e_inf - sum);
            if (num < 0 || num % 12) continue;
            int n = num / 12;
            if (n > 200) continue;
            RatC theta;
            for (std::size_t i = 1; i < fam.size(); ++i) {
                PolyC lin;
                lin.c = {-pa.poles[i - 1].location, Const(1)};
                theta += RatC(PolyC::constant(Const(Rat(static_cast<long long>(m) * fam[i], 12))), lin);
            }
            // theta * S and S^2 r are polynomials; the whole recursion stays
            // polynomial and linear in P.
            RatC StT = Sr * theta;
            if (StT.den.degree() != 0) throw std::logic_error("case-3 theta clearing failed");
            PolyC St = StT.num * const_inv(StT.den.lc());
            RatC S2rT = Sr * Sr * r;
            if (S2rT.den.degree() != 0) throw std::logic_error("case-3 r clearing failed");
            PolyC S2r = S2rT.num * const_inv(S2rT.den.lc());
            PolyC Sp = poly_derivative(S);
            auto descend = [&](const PolyC& P) {
                // Returns P_{-1}; P_i stored while descending.
                std::vector<PolyC> Pi(m + 2);
                Pi[m] = -P;
                Pi[m + 1] = PolyC();
                for (int i = m; i >= 0; --i) {
                    const PolyC& cur = Pi[i];
                    const PolyC& up = Pi[i + 1];
                    PolyC t = -(S * poly_derivative(cur));
                    PolyC mid = (Sp * Const(m - i) - St) * cur;
                    t = t + mid;
                    t = t - S2r * Const(static_cast<long long>(m - i) * (i + 1)) * up;
                    if (i == 0) return std::make_pair(t, Pi);
                    Pi[i - 1] = t;
                }
                return std::make_pair(PolyC(), Pi);
            };
            // Assemble the linear conditions P_{-1} = 0 over the monic ansatz.
            std::vector<PolyC> contrib;
            int max_deg = 0;
            for (int j = 0; j <= n; ++j) {
                auto res = descend(PolyC::monomial(Const(1), j));
                max_deg = std::max(max_deg, res.first.degree());
                contrib.push_back(std::move(res.first));
            }
            Matrix<Const> A(max_deg + 1, n);
            std::vector<Const> rhs(max_deg + 1, Const());
            for (int j = 0; j <= n; ++j) {
                for (int k = 0; k <= contrib[j].degree(); ++k) {
                    if (j < n) {
                        A.at(k, j) = contrib[j].coeff(k);
                    } else {
                        rhs[k] = -contrib[j].coeff(k);
                    }
                }
            }
            auto c = solve_linear(A, rhs);
            if (!c) continue;
            PolyC P;
            P.c.assign(n + 1, Const());
            P.c[n] = Const(1);
            for (int j = 0; j < n; ++j) P.c[j] = (*c)[j];
            P.trim();
            auto full = descend(P);
            if (!full.first.is_zero()) continue;
            const std::vector<PolyC>& Pi = full.second;
            // Minimal polynomial: sum_i S^i P_i / (m-i)! omega^i, normalized monic.
            std::vector<RatC> coeffs(m + 1);
            Rat fact = 1;
            for (int i = m; i >= 0; --i) {
                // fact = (m-i)!
                PolyC Si = poly_pow(S, i);
                coeffs[i] = RatC{Si * Pi[i], PolyC::constant(Const(fact))};
                fact *= (m - i + 1);
            }
            RatC lead = coeffs[m];
            if (lead.is_zero()) continue;
            for (auto& cf : coeffs) cf = cf / lead;
            if (!riccati_check_algebraic(coeffs, r)) {
                if (warnings)
                    warnings->push_back("case-3 candidate failed the exact consistency check");
                continue;
            }
            Solution s;
            s.kind = SolutionKind::AlgebraicOmega;
            s.omega_minpoly = coeffs;
            s.note = "degree-" + std::to_string(m) + " minimal polynomial";
            sols.push_back(std::move(s));
            sols.back().algebraic_order = m;
            return sols;
        }
    }
    return sols;
}

}  // namespace algspec
