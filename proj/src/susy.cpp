#include "algspec/susy.hpp"

#include <algorithm>

#include "algspec/field.hpp"
#include "algspec/laurent.hpp"

namespace algspec {

namespace {

Hyperexp zero_hy() {
    Hyperexp h;
    h.R = RatC(0);
    h.omega = RatC(0);
    return h;
}

Hyperexp make_or_zero(const RatC& R, const RatC& omega) {
    if (R.is_zero()) return zero_hy();
    return hy_make(R, omega);
}

// sign of re + rad*sqrt(d), exactly
int real_sign(const Const& c) {
    auto sgn = [](const Rat& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); };
    if (c.rad == 0) return sgn(c.re);
    if (c.re == 0) return sgn(c.rad);
    if (sgn(c.re) == sgn(c.rad)) return sgn(c.re);
    Rat lhs = c.re * c.re, rhs = c.rad * c.rad * Rat(c.d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sgn(c.re) : sgn(c.rad);
}

Const real_part(const Const& c) {
    Const r;
    r.re = c.re;
    r.rad = c.rad;
    r.d = c.d;
    return r;
}

RatC det_ratc(std::vector<std::vector<RatC>> m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    RatC out;
    Const sign(1);
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<RatC>> minor;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        out += RatC(sign) * m[r][0] * det_ratc(std::move(minor));
        sign = -sign;
    }
    return out;
}

std::vector<std::vector<Const>> binom_table(int n) {
    std::vector<std::vector<Const>> b(n + 1);
    for (int i = 0; i <= n; ++i) {
        b[i].assign(i + 1, Const(1));
        for (int j = 1; j < i; ++j) b[i][j] = b[i - 1][j - 1] + b[i - 1][j];
    }
    return b;
}

Const const_pow(const Const& c, int e) {
    Const r(1);
    for (int i = 0; i < e; ++i) r = r * c;
    return r;
}

// a_{k+1} = p a_k + q applied to a polynomial-in-a0 argument
PolyC affine_step(const PolyC& cur, const Const& p, const Const& q) {
    PolyC out = cur * p;
    if (out.c.empty()) out.c.push_back(q);
    else out.c[0] += q;
    out.trim();
    return out;
}

}  // namespace

bool is_eigenfunction(const RatC& V, const Hyperexp& psi, const Const& lambda) {
    if (psi.R.is_zero()) return false;
    RatC dR = ratfunc_derivative(psi.R);
    RatC ddR = ratfunc_derivative(dR);
    RatC lhs = ddR + RatC(2) * psi.omega * dR +
               (ratfunc_derivative(psi.omega) + psi.omega * psi.omega) * psi.R;
    return lhs == (V - RatC(lambda)) * psi.R;
}

Superpotential superpotential_from_seed(const RatC& V, const Hyperexp& psi, const Const& lambda1) {
    if (!is_eigenfunction(V, psi, lambda1))
        throw SeedNotEigenfunction("seed is not an eigenfunction at the given level");
    Superpotential s;
    s.W = -hy_logderiv(psi);
    s.seed = psi;
    s.lambda1 = lambda1;
    if (V - RatC(lambda1) != s.W * s.W - ratfunc_derivative(s.W))
        throw std::logic_error("superpotential fails its Riccati identity");
    return s;
}

PartnerPair partner_potentials(const RatC& w, const Const& lambda1) {
    PartnerPair p;
    RatC dw = ratfunc_derivative(w);
    RatC l{PolyC::constant(lambda1), PolyC::constant(Const(1))};
    p.v_minus = w * w - dw + l;
    p.v_plus = w * w + dw + l;
    p.w = w;
    p.lambda1 = lambda1;
    return p;
}

DarbouxResult darboux_transform(const RatC& V, const Hyperexp& seed, const Const& lambda1) {
    if (!is_eigenfunction(V, seed, lambda1))
        throw SeedNotEigenfunction("seed is not an eigenfunction at the given level");
    DarbouxResult out;
    RatC ld = hy_logderiv(seed);
    out.v_plus = V - RatC(2) * ratfunc_derivative(ld);
    out.seed_image = hy_div(hy_rational(RatC(1)), seed);
    out.map = [ld](const Hyperexp& psi) {
        RatC R = ratfunc_derivative(psi.R) + psi.omega * psi.R - ld * psi.R;
        return make_or_zero(R, psi.omega);
    };
    return out;
}

Hyperexp wronskian_hyperexp(const std::vector<Hyperexp>& fs) {
    if (fs.empty()) throw std::invalid_argument("wronskian of an empty list");
    std::size_t n = fs.size();
    std::vector<std::vector<RatC>> m(n, std::vector<RatC>(n));
    RatC osum;
    for (std::size_t j = 0; j < n; ++j) {
        RatC t = fs[j].R;
        osum += fs[j].omega;
        for (std::size_t i = 0; i < n; ++i) {
            m[i][j] = t;
            t = ratfunc_derivative(t) + fs[j].omega * t;
        }
    }
    return make_or_zero(det_ratc(std::move(m)), osum);
}

HyperexpAlg wronskian_hyperexp_z(const std::vector<Hyperexp>& fs, const RatC& alpha,
                                 int branch_sign) {
    if (fs.empty()) throw std::invalid_argument("wronskian of an empty list");
    std::size_t n = fs.size();
    RatC dlog_alpha = ratfunc_derivative(alpha) / alpha;
    RatC half{PolyC::constant(Const(Rat(1, 2))), PolyC::constant(Const(1))};
    std::vector<std::vector<RatC>> m(n, std::vector<RatC>(n));
    RatC osum;
    for (std::size_t j = 0; j < n; ++j) {
        RatC t = fs[j].R;
        osum += fs[j].omega;
        for (std::size_t i = 0; i < n; ++i) {
            m[i][j] = t;
            // one more hat-derivative: row i carries sqrt(alpha)^i
            RatC load = RatC(Const(static_cast<long long>(i))) * half * dlog_alpha;
            t = ratfunc_derivative(t) + fs[j].omega * t + load * t;
        }
    }
    HyperexpAlg out;
    out.alpha = alpha;
    RatC d = det_ratc(std::move(m));
    std::size_t tot = n * (n - 1) / 2;  // sqrt(alpha) factors across the rows
    for (std::size_t k = 0; k + 1 < tot; k += 2) d = d * alpha;
    out.sqrt_alpha_pow = static_cast<int>(tot % 2);
    if (branch_sign < 0 && tot % 2 == 1) d = -d;
    out.h = make_or_zero(d, osum);
    return out;
}

CrumResult crum_iterate(const RatC& V, const std::vector<std::pair<Hyperexp, Const>>& seeds) {
    if (seeds.empty()) throw std::invalid_argument("no seeds given");
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!is_eigenfunction(V, seeds[i].first, seeds[i].second))
            throw SeedNotEigenfunction("seed " + std::to_string(i + 1) +
                                       " is not an eigenfunction at its level");
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            if (seeds[i].second == seeds[j].second)
                throw std::invalid_argument("seed levels must be pairwise distinct");
    }
    std::vector<Hyperexp> base;
    for (const auto& s : seeds) base.push_back(s.first);
    Hyperexp w = wronskian_hyperexp(base);
    if (w.R.is_zero()) throw DependentSeeds("seed Wronskian vanishes");
    CrumResult out;
    out.v_n = V - RatC(2) * ratfunc_derivative(hy_logderiv(w));
    out.map = [base, w](const Hyperexp& psi) {
        std::vector<Hyperexp> full = base;
        full.push_back(psi);
        Hyperexp top = wronskian_hyperexp(full);
        if (top.R.is_zero()) return zero_hy();
        return hy_div(top, w);
    };
    return out;
}

ShapeInvarianceReport shape_invariance_check(const std::vector<RatC>& w_family,
                                             const RatC& sqrt_alpha) {
    ShapeInvarianceReport rep;
    rep.family = w_family;
    std::vector<RatC> wf = w_family;
    while (!wf.empty() && wf.back().is_zero()) wf.pop_back();
    if (wf.empty()) wf.push_back(RatC(0));
    int dw = static_cast<int>(wf.size()) - 1;
    if (dw > 2) throw std::invalid_argument("parameter degree above 2 is not supported");
    int M = 2 * dw;
    auto binom = binom_table(M);

    std::vector<RatC> u(M + 1), v(M + 1);
    for (int i = 0; i <= dw; ++i)
        for (int j = 0; j <= dw; ++j) {
            u[i + j] += wf[i] * wf[j];
            v[i + j] += wf[i] * wf[j];
        }
    for (int i = 0; i <= dw; ++i) {
        RatC dwi = sqrt_alpha * ratfunc_derivative(wf[i]);
        u[i] += dwi;
        v[i] -= dwi;
    }
    std::vector<RatC> du(M + 1), dv(M + 1);
    for (int i = 0; i <= M; ++i) {
        du[i] = ratfunc_derivative(u[i]);
        dv[i] = ratfunc_derivative(v[i]);
    }

    auto system_dump = [&]() {
        std::string s;
        for (int k = 0; k <= M; ++k)
            s += "Du_" + std::to_string(k) + " = " + ratc_str(du[k]) + "; Dv_" +
                 std::to_string(k) + " = " + ratc_str(dv[k]) + "\n";
        return s;
    };

    int m = -1;
    for (int k = M; k >= 0; --k)
        if (!du[k].is_zero() || !dv[k].is_zero()) {
            m = k;
            break;
        }

    std::vector<std::pair<Const, Const>> candidates;
    if (m <= 0) {
        candidates.push_back({Const(1), Const(0)});
    } else if (dv[m].is_zero()) {
        rep.note = "leading derivative coefficients cannot match:\n" + system_dump();
        return rep;
    } else {
        RatC rho = du[m] / dv[m];
        if (!rho.is_constant()) {
            rep.note = "leading coefficient ratio depends on the variable:\n" + system_dump();
            return rep;
        }
        Const rc = rho.constant_value();
        std::vector<Const> ps;
        if (m == 1) {
            ps.push_back(rc);
        } else if (m == 2) {
            if (auto s = const_sqrt(rc)) {
                ps.push_back(*s);
                ps.push_back(-*s);
            }
        } else if (m == 3) {
            if (rc == Const(1)) ps.push_back(Const(1));
            if (rc == Const(-1)) ps.push_back(Const(-1));
        } else if (m == 4) {
            if (auto s = const_sqrt(rc)) {
                if (auto t = const_sqrt(*s)) {
                    ps.push_back(*t);
                    ps.push_back(-*t);
                }
                if (auto t = const_sqrt(-*s)) {
                    ps.push_back(*t);
                    ps.push_back(-*t);
                }
            }
        }
        for (const Const& p : ps) {
            if (p.is_zero()) continue;
            // A_{m-1} = p^{m-1} (B_{m-1} + m q B_m), linear in q
            RatC lhs = du[m - 1] * RatC(const_inv(const_pow(p, m - 1))) - dv[m - 1];
            RatC qr = lhs / (RatC(Const(m)) * dv[m]);
            if (!qr.is_constant()) continue;
            candidates.push_back({p, qr.constant_value()});
        }
        if (candidates.empty()) {
            rep.note = "no admissible leading root for the parameter map:\n" + system_dump();
            return rep;
        }
    }

    for (const auto& [p, q] : candidates) {
        bool ok = true;
        for (int k = 0; k <= M && ok; ++k) {
            RatC rhs;
            for (int j = k; j <= M; ++j)
                rhs += RatC(binom[j][k] * const_pow(p, k) * const_pow(q, j - k)) * dv[j];
            if (du[k] != rhs) ok = false;
        }
        if (!ok) continue;
        PolyC r_prev;
        r_prev.c.assign(M + 1, Const());
        for (int k = 0; k <= M; ++k) {
            RatC s = u[k];
            for (int j = k; j <= M; ++j)
                s -= RatC(binom[j][k] * const_pow(p, k) * const_pow(q, j - k)) * v[j];
            if (!s.is_constant()) throw std::logic_error("remainder coefficient not constant");
            r_prev.c[k] = s.constant_value();
        }
        r_prev.trim();
        PolyC r_next;
        if (!p.is_zero()) {
            PolyC lin;
            Const ip = const_inv(p);
            lin.c = {-q * ip, ip};
            lin.trim();
            r_next = poly_eval_mapped(r_prev, lin, [](const Const& c) { return PolyC::constant(c); });
        } else {
            r_next = r_prev;
        }
        // some partial sum over k <= 3 must be nonzero, else the map is sterile
        PolyC a_sym;
        a_sym.c = {Const(0), Const(1)};
        PolyC cur = a_sym, total;
        bool nonzero = false;
        for (int K = 1; K <= 3 && !nonzero; ++K) {
            cur = affine_step(cur, p, q);
            total = total + poly_eval_mapped(r_next, cur,
                                             [](const Const& c) { return PolyC::constant(c); });
            if (!total.is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        rep.holds = true;
        rep.p = p;
        rep.q = q;
        rep.r_prev = r_prev;
        rep.r_next = r_next;
        if (p == Const(1) && r_next.degree() <= 1) {
            Const r0 = r_next.coeff(0), r1 = r_next.coeff(1);
            Const half = Const(Rat(1, 2));
            Const c2 = r1 * q * half;
            Const cn = r0 + r1 * q * half;
            std::string f;
            auto add_term = [&f](const Const& c, const std::string& sym) {
                if (c.is_zero()) return;
                std::string cs = const_to_string(c);
                if (!f.empty()) {
                    if (!cs.empty() && cs[0] == '-') {
                        f += " - ";
                        cs = cs.substr(1);
                    } else {
                        f += " + ";
                    }
                }
                if (cs == "1") f += sym;
                else if (cs == "-1") f += "-" + sym;
                else f += cs + "*" + sym;
            };
            add_term(r1, "a0*n");
            add_term(cn, "n");
            add_term(c2, "n^2");
            rep.energy_formula = f.empty() ? "0" : f;
        } else {
            rep.energy_formula = "sum of R(a_k) for k = 1..n";
        }
        return rep;
    }
    rep.note = "no affine parameter map solves the system:\n" + system_dump();
    return rep;
}

Const shape_param(const ShapeInvarianceReport& rep, const Const& a0, int k) {
    Const a = a0;
    for (int i = 0; i < k; ++i) a = rep.p * a + rep.q;
    return a;
}

Const shape_energy(const ShapeInvarianceReport& rep, const Const& a0, int n) {
    Const e(0);
    Const a = a0;
    for (int k = 1; k <= n; ++k) {
        a = rep.p * a + rep.q;
        e += poly_eval(rep.r_next, a);
    }
    return e;
}

SpectrumLevel gendenshtein_spectrum(const ShapeInvarianceReport& rep,
                                    const std::function<Hyperexp(const Const&)>& psi0,
                                    const Const& a0, int n, const RatC& sqrt_alpha) {
    if (!rep.holds) throw std::invalid_argument("shape invariance report does not hold");
    SpectrumLevel out;
    out.energy = shape_energy(rep, a0, n);
    // psi_n = Adag(a_0) ... Adag(a_{n-1}) psi_0(a_n), raising at the lower parameters
    Hyperexp psi = psi0(shape_param(rep, a0, n));
    for (int k = n - 1; k >= 0; --k) {
        Const ak = shape_param(rep, a0, k);
        RatC w;
        for (std::size_t i = 0; i < rep.family.size(); ++i)
            w += rep.family[i] * RatC(const_pow(ak, static_cast<int>(i)));
        // Adag psi = -D psi + w psi with D = sqrt_alpha d/dz
        RatC R = (w - sqrt_alpha * psi.omega) * psi.R - sqrt_alpha * ratfunc_derivative(psi.R);
        psi = make_or_zero(R, psi.omega);
    }
    out.psi = psi;
    return out;
}

BoundVerdict bound_state_heuristic(const Hyperexp& psi, Domain domain) {
    if (psi.R.is_zero()) return BoundVerdict::not_bound;
    PolyC pi = poly_divmod(psi.omega.num, psi.omega.den).first;
    int deg = pi.degree();
    int lead_sign = deg >= 0 ? real_sign(pi.lc()) : 0;
    if (domain == Domain::line) {
        if (deg < 1) {
            // a constant or empty exponent slope cannot decay on both sides
            return lead_sign != 0 ? BoundVerdict::not_bound : BoundVerdict::inconclusive;
        }
        if (lead_sign == 0) return BoundVerdict::inconclusive;
        if (deg % 2 == 0) return BoundVerdict::not_bound;  // one side always grows
        return lead_sign < 0 ? BoundVerdict::candidate_bound : BoundVerdict::not_bound;
    }
    // half line: decay toward +infinity, integrable exponent at 0
    BoundVerdict infinity_side;
    if (deg < 0) {
        infinity_side = BoundVerdict::inconclusive;
    } else if (lead_sign < 0) {
        infinity_side = BoundVerdict::candidate_bound;
    } else if (lead_sign > 0) {
        return BoundVerdict::not_bound;
    } else {
        infinity_side = BoundVerdict::inconclusive;
    }
    int ord = -ratfunc_pole_order(psi.R, Const(0));
    Const res = coefficient_at_pole(psi.omega, Const(0), 1);
    // exponent > -1/2 for square integrability near 0
    Const margin = real_part(res) + Const(Rat(2 * ord + 1, 2));
    int s = real_sign(margin);
    if (s <= 0) return BoundVerdict::not_bound;
    return infinity_side;
}

std::string bound_verdict_to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::candidate_bound: return "candidate_bound";
        case BoundVerdict::not_bound: return "not_bound";
        default: return "inconclusive";
    }
}

}  // namespace algspec
