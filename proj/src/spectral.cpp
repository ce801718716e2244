#include "algspec/spectral.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "algspec/factor.hpp"

namespace algspec {

namespace {

struct ConstOrd {
    bool operator()(const Const& a, const Const& b) const { return const_less(a, b); }
};

// Polynomial c0 + c1*t in the parameter t.
PolyC affine_poly(const Const& c0, const Const& c1) {
    PolyC p;
    p.c = {c0, c1};
    p.trim();
    return p;
}

// Value u + sum_j w_j * sqrt(g_j) with u, w_j in Q(..)(t) and the g_j in a
// shared radicand registry.
struct SymVal {
    ParamF u;
    std::map<std::size_t, ParamF> rad;
};

SymVal sym_of(const ParamF& u) { return SymVal{u, {}}; }

SymVal sym_add(const SymVal& a, const SymVal& b) {
    SymVal out = a;
    out.u = out.u + b.u;
    for (const auto& [j, w] : b.rad) {
        auto it = out.rad.find(j);
        if (it == out.rad.end()) {
            out.rad.emplace(j, w);
        } else {
            it->second = it->second + w;
            if (it->second.is_zero()) out.rad.erase(it);
        }
    }
    return out;
}

SymVal sym_scale(const SymVal& a, const ParamF& k) {
    SymVal out;
    out.u = a.u * k;
    if (k.is_zero()) return out;
    for (const auto& [j, w] : a.rad) out.rad.emplace(j, w * k);
    return out;
}

SymVal sym_sub(const SymVal& a, const SymVal& b) {
    return sym_add(a, sym_scale(b, ParamF(-1)));
}

struct Radicals {
    std::vector<PolyC> g;

    ParamF radicand(std::size_t j) const { return ParamF(g[j]); }

    // sqrt(h) for a nonzero polynomial h(t). A constant square root is
    // folded away; otherwise the leading coefficient's root (when it
    // exists) is pulled out so that equal radicands unify.
    SymVal sqrt_of(const PolyC& h) {
        if (h.degree() == 0) {
            if (auto s = const_sqrt(h.c[0])) return sym_of(param_const(*s));
        }
        Const mult(1);
        PolyC hn = h;
        if (auto s = const_sqrt(h.c.back())) {
            mult = *s;
            hn = poly_monic(h);
        }
        for (std::size_t j = 0; j < g.size(); ++j)
            if (hn == g[j]) return SymVal{{}, {{j, param_const(mult)}}};
        g.push_back(hn);
        return SymVal{{}, {{g.size() - 1, param_const(mult)}}};
    }

    // 1 / sqrt(h), using sqrt(h) = m*sqrt(ghat) => 1/sqrt(h) = sqrt(ghat)/(m*ghat).
    SymVal inv_sqrt_of(const PolyC& h) {
        SymVal s = sqrt_of(h);
        if (s.rad.empty()) return sym_of(ParamF(1) / s.u);
        auto [j, m] = *s.rad.begin();
        return SymVal{{}, {{j, ParamF(1) / (m * radicand(j))}}};
    }
};

int pole_order_at(const RatC& f, const Const& c) {
    if (f.is_zero()) return 0;
    int k = 0;
    PolyC lin;
    lin.c = {-c, Const(1)};
    PolyC d = f.den;
    while (!d.is_zero() && poly_eval(d, c).is_zero()) {
        auto [q, rem] = poly_divmod(d, lin);
        if (!rem.is_zero()) break;
        d = q;
        ++k;
    }
    return k;
}

// Order of f at infinity: deg(den) - deg(num); a large sentinel for f = 0.
int inf_order(const RatC& f) {
    if (f.is_zero()) return 1 << 20;
    return f.den.degree() - f.num.degree();
}

struct SiteOption {
    SymVal value;
    char label;  // '+', '-', '.': fixed single choice
};

// Candidate pool: lambda -> (pattern, n) provenance cells.
using Pool = std::map<Const, std::vector<std::pair<std::string, int>>, ConstOrd>;

void add_candidate(Pool& pool, const Const& lam, const std::string& pattern, int n) {
    pool[lam].push_back({pattern, n});
}

// Rational/quadratic roots of h(t) over the constant field. Unsplit
// higher-degree factors are reported, not guessed.
std::vector<Const> const_roots(const PolyC& h, std::vector<std::string>& warnings,
                               bool& complete) {
    std::vector<Const> out;
    PartialFactorization pf = factor_partial(h);
    for (const RootMult& rm : pf.roots) out.push_back(rm.root);
    if (pf.remainder.degree() == 2) {
        const Const& a2 = pf.remainder.c[2];
        const Const& a1 = pf.remainder.c[1];
        const Const& a0 = pf.remainder.c[0];
        Const disc = a1 * a1 - Const(4) * a2 * a0;
        if (auto sq = const_sqrt(disc)) {
            out.push_back((Const(0) - a1 + *sq) / (Const(2) * a2));
            out.push_back((Const(0) - a1 - *sq) / (Const(2) * a2));
            return out;
        }
    }
    if (pf.remainder.degree() > 0) {
        warnings.push_back("degree equation left an unsplit degree-" +
                           std::to_string(pf.remainder.degree()) + " factor in lambda");
        complete = false;
    }
    return out;
}

// Solve value == n for the parameter: isolate radicals, square (at most
// twice), then take constant-field roots of the numerator.
void solve_cell(const SymVal& value, int n, const Radicals& reg, const std::string& pattern,
                Pool& pool, std::vector<std::string>& warnings, bool& complete,
                bool& too_many) {
    SymVal e = value;
    e.u = e.u - ParamF(n);
    PolyC h;
    if (e.rad.empty()) {
        if (e.u.is_zero()) {
            warnings.push_back("pattern " + pattern + " at n=" + std::to_string(n) +
                               " holds identically in lambda; not enumerable");
            complete = false;
            return;
        }
        h = e.u.num;
    } else if (e.rad.size() == 1) {
        auto [j, w] = *e.rad.begin();
        // w^2 g = u^2
        ParamF q = w * w * reg.radicand(j) - e.u * e.u;
        if (q.is_zero()) {
            warnings.push_back("pattern " + pattern + " at n=" + std::to_string(n) +
                               " holds identically in lambda; not enumerable");
            complete = false;
            return;
        }
        h = q.num;
    } else if (e.rad.size() == 2) {
        auto it = e.rad.begin();
        auto [j1, w1] = *it++;
        auto [j2, w2] = *it;
        ParamF g1 = reg.radicand(j1), g2 = reg.radicand(j2);
        // (w1 sqrt(g1) + w2 sqrt(g2))^2 = u^2, then isolate the cross term.
        ParamF t = e.u * e.u - w1 * w1 * g1 - w2 * w2 * g2;
        ParamF q = ParamF(4) * w1 * w1 * w2 * w2 * g1 * g2 - t * t;
        if (q.is_zero()) {
            warnings.push_back("pattern " + pattern + " at n=" + std::to_string(n) +
                               " holds identically in lambda; not enumerable");
            complete = false;
            return;
        }
        h = q.num;
    } else {
        too_many = true;
        return;
    }
    for (const Const& lam : const_roots(h, warnings, complete))
        add_candidate(pool, lam, pattern, n);
}

}  // namespace

ScanResult spectral_scan(const RatC& r0, const RatC& s, const ScanOptions& opts) {
    ScanResult out;
    Pool pool;
    bool too_many = false;

    for (const Const& lam : opts.extra_lambdas) add_candidate(pool, lam, "*", -1);

    // Finite sites: the union of the pole sets, generic (largest) orders.
    struct Site {
        Const c;
        int order;
    };
    std::vector<Site> sites;
    bool parametric_ok = true;
    try {
        PolyC den = poly_monic(r0.den * s.den);
        for (const RootMult& rm : factor_over_field(den)) {
            int o0 = pole_order_at(r0, rm.root);
            int os = pole_order_at(s, rm.root);
            int o = std::max(o0, os);
            if (o == 0) continue;
            if (os > 2) {
                out.warnings.push_back(
                    "lambda multiplies a pole of order > 2; parametric sweep disabled");
                parametric_ok = false;
            }
            if (o0 == os) {
                // Pole may drop at one special lambda; probe it concretely.
                Const l0 = coefficient_at_pole(r0, rm.root, o0);
                Const ls = coefficient_at_pole(s, rm.root, os);
                if (!ls.is_zero()) add_candidate(pool, l0 / ls, "*", -1);
            }
            sites.push_back({rm.root, o});
        }
    } catch (const IrreducibleResidual&) {
        out.warnings.push_back(
            "pole locations do not split over the constant field; parametric sweep disabled");
        parametric_ok = false;
    }
    std::sort(sites.begin(), sites.end(),
              [](const Site& a, const Site& b) { return const_less(a.c, b.c); });

    // Generic order at infinity, plus the degeneration probe when the two
    // numerators compete for the top degree.
    int oi0 = inf_order(r0), ois = inf_order(s);
    int oinf = std::min(oi0, ois);
    if (oi0 == ois && !s.is_zero() && !r0.is_zero()) {
        Const l0 = coefficient_at_infinity(r0, -oinf);
        Const ls = coefficient_at_infinity(s, -oinf);
        if (!ls.is_zero()) add_candidate(pool, l0 / ls, "*", -1);
    }

    Radicals reg;
    std::size_t equations = 0;

    auto affine_at_pole = [&](const Const& c, int k) {
        return affine_poly(coefficient_at_pole(r0, c, k), Const(0) - coefficient_at_pole(s, c, k));
    };
    auto affine_at_inf = [&](int e) {
        return affine_poly(coefficient_at_infinity(r0, e),
                           Const(0) - coefficient_at_infinity(s, e));
    };

    if (parametric_ok) {
        // ---- first case: sign patterns ----
        // alpha options at infinity.
        std::vector<SiteOption> inf_opts;
        bool case1_ok = true;
        if (oinf > 2) {
            inf_opts.push_back({sym_of(ParamF(0)), '+'});
            inf_opts.push_back({sym_of(ParamF(1)), '-'});
        } else if (oinf == 2) {
            PolyC b = affine_at_inf(-2);
            PolyC gpoly = b * Const(4) + PolyC::constant(Const(1));
            SymVal root = reg.sqrt_of(gpoly);
            ParamF half = param_const(Const(Rat(1, 2)));
            SymVal rr = sym_scale(root, half);
            inf_opts.push_back({sym_add(sym_of(half), rr), '+'});
            inf_opts.push_back({sym_sub(sym_of(half), rr), '-'});
        } else if (oinf == 0) {
            // alpha = ±b / (2 sqrt(c0)) with c0 the value at infinity.
            PolyC c0 = affine_at_inf(0);
            PolyC b = affine_at_inf(-1);
            ParamF half_b = ParamF(b) * param_const(Const(Rat(1, 2)));
            SymVal is = reg.inv_sqrt_of(c0);
            inf_opts.push_back({sym_scale(is, half_b), '+'});
            inf_opts.push_back({sym_scale(is, ParamF(0) - half_b), '-'});
        } else if (oinf % 2 == 0) {
            int v = -oinf / 2;
            bool top_free = true;
            for (int k = v; k <= 2 * v; ++k)
                if (!coefficient_at_infinity(s, k).is_zero()) top_free = false;
            if (!top_free) {
                out.warnings.push_back(
                    "lambda reaches the square-root part at infinity; first-case sweep skipped");
                case1_ok = false;
            } else if (auto sq = sqrt_principal_at_infinity(r0)) {
                PolyC b = affine_at_inf(v - 1);
                ParamF a = param_const(sq->a);
                ParamF bf = ParamF(b);
                ParamF half = param_const(Const(Rat(1, 2)));
                inf_opts.push_back({sym_of((bf / a - ParamF(v)) * half), '+'});
                inf_opts.push_back({sym_of((ParamF(0) - bf / a - ParamF(v)) * half), '-'});
            } else {
                case1_ok = false;  // no square root of the leading behavior
            }
        } else {
            case1_ok = false;  // odd order at infinity below 3
        }

        std::vector<std::vector<SiteOption>> pole_opts;
        for (const Site& site : sites) {
            if (!case1_ok) break;
            std::vector<SiteOption> o;
            if (site.order == 1) {
                o.push_back({sym_of(ParamF(1)), '.'});
            } else if (site.order == 2) {
                PolyC b = affine_at_pole(site.c, 2);
                PolyC gpoly = b * Const(4) + PolyC::constant(Const(1));
                SymVal root = reg.sqrt_of(gpoly);
                ParamF half = param_const(Const(Rat(1, 2)));
                SymVal rr = sym_scale(root, half);
                o.push_back({sym_add(sym_of(half), rr), '+'});
                o.push_back({sym_sub(sym_of(half), rr), '-'});
            } else if (site.order % 2 == 0) {
                auto sq = sqrt_principal_at_pole(r0, site.c);
                if (!sq) {
                    case1_ok = false;
                    break;
                }
                int v = site.order / 2;
                ParamF ba = param_const(sq->b / sq->a);
                ParamF half = param_const(Const(Rat(1, 2)));
                o.push_back({sym_of((ba + ParamF(v)) * half), '+'});
                o.push_back({sym_of((ParamF(v) - ba) * half), '-'});
            } else {
                case1_ok = false;  // odd pole order >= 3
                break;
            }
            pole_opts.push_back(std::move(o));
        }

        if (case1_ok && sites.size() <= 16) {
            unsigned np = static_cast<unsigned>(sites.size());
            for (unsigned mask = 0; mask < (1u << (np + 1)); ++mask) {
                const SiteOption& io = inf_opts[(mask & 1u) ? 0 : 1];
                SymVal d = io.value;
                std::string pat(1, (mask & 1u) ? '+' : '-');
                pat += ';';
                for (unsigned i = 0; i < np; ++i) {
                    const auto& po = pole_opts[i];
                    const SiteOption& choice =
                        (po.size() == 1) ? po[0] : po[(mask & (2u << i)) ? 0 : 1];
                    d = sym_sub(d, choice.value);
                    if (i) pat += ',';
                    pat += choice.label;
                }
                for (int n = 0; n <= opts.n_max; ++n) {
                    if (++equations > opts.max_equations) break;
                    solve_cell(d, n, reg, pat, pool, out.warnings, out.symbolic_complete,
                               too_many);
                }
            }
        }

        // ---- second case: E-set sums ----
        // Each site contributes options for e; the degree equation is
        // (e_inf - sum e_c)/2 = n.
        struct EOpt {
            SymVal value;
        };
        bool case2_ok = true;
        auto order2_eopts = [&](const PolyC& b) {
            std::vector<EOpt> o;
            PolyC gpoly = b * Const(4) + PolyC::constant(Const(1));
            SymVal root = reg.sqrt_of(gpoly);
            o.push_back({sym_of(ParamF(2))});
            if (root.rad.empty()) {
                // Constant radicand: keep the two shifts only when integral.
                for (int sgn : {+1, -1}) {
                    ParamF e = ParamF(2) + param_const(Const(2 * sgn)) * root.u;
                    if (e.den.degree() == 0 && e.num.degree() <= 0) {
                        Const val = e.num.c.empty() ? Const(0) : e.num.c[0] / e.den.c[0];
                        if (val.is_integer()) o.push_back({sym_of(e)});
                    }
                }
            } else {
                o.push_back({sym_add(sym_of(ParamF(2)), sym_scale(root, ParamF(2)))});
                o.push_back({sym_sub(sym_of(ParamF(2)), sym_scale(root, ParamF(2)))});
            }
            return o;
        };
        std::vector<EOpt> einf;
        if (oinf > 2) {
            einf = {{sym_of(ParamF(0))}, {sym_of(ParamF(2))}, {sym_of(ParamF(4))}};
        } else if (oinf == 2) {
            einf = order2_eopts(affine_at_inf(-2));
        } else {
            einf = {{sym_of(ParamF(oinf))}};
        }
        std::vector<std::vector<EOpt>> epoles;
        for (const Site& site : sites) {
            if (site.order == 1) {
                epoles.push_back({{sym_of(ParamF(4))}});
            } else if (site.order == 2) {
                epoles.push_back(order2_eopts(affine_at_pole(site.c, 2)));
            } else {
                epoles.push_back({{sym_of(ParamF(site.order))}});
            }
        }
        if (case2_ok) {
            std::vector<std::size_t> idx(sites.size(), 0);
            for (std::size_t ii = 0; ii < einf.size(); ++ii) {
                std::fill(idx.begin(), idx.end(), 0);
                bool done = false;
                while (!done) {
                    SymVal d = einf[ii].value;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        d = sym_sub(d, epoles[i][idx[i]].value);
                    d = sym_scale(d, param_const(Const(Rat(1, 2))));
                    for (int n = 0; n <= opts.n_max; ++n) {
                        if (++equations > opts.max_equations) break;
                        solve_cell(d, n, reg, "E", pool, out.warnings, out.symbolic_complete,
                                   too_many);
                    }
                    // advance the mixed-radix counter
                    done = true;
                    for (std::size_t i = 0; i < idx.size(); ++i) {
                        if (++idx[i] < epoles[i].size()) {
                            done = false;
                            break;
                        }
                        idx[i] = 0;
                    }
                    if (idx.empty()) break;
                }
            }
        }
        if (equations > opts.max_equations) {
            out.warnings.push_back("degree-equation budget exhausted; sweep truncated");
            out.symbolic_complete = false;
        }
    } else {
        out.symbolic_complete = false;
    }

    if (too_many) {
        out.warnings.push_back(
            "TooManyRadicals: more than two lambda radicals in one degree equation; "
            "those cells were skipped");
        out.symbolic_complete = false;
    }

    // Concrete verification of every candidate; only solvable ones are kept.
    std::map<std::string, std::size_t> family_index;
    std::map<Const, int, ConstOrd> case_of;
    for (const auto& [lam, cells] : pool) {
        RatC r_at = r0 - s * RatC(lam);
        KovacicResult res;
        try {
            res = kovacic_solve(r_at, opts.kovacic);
        } catch (const IrreducibleResidual& e) {
            out.warnings.push_back("candidate skipped, roots leave the constant field: " +
                                   std::string(e.what()));
            out.symbolic_complete = false;
            continue;
        }
        if (res.case_used == 4) continue;
        case_of[lam] = res.case_used;
        // one hit per distinct provenance family
        std::map<std::string, int> seen;
        for (const auto& [pat, n] : cells) {
            auto it = seen.find(pat);
            if (it != seen.end() && it->second <= n) continue;
            seen[pat] = n;
        }
        for (const auto& [pat, n] : seen) {
            auto fit = family_index.find(pat);
            if (fit == family_index.end()) {
                fit = family_index.emplace(pat, out.families.size()).first;
                out.families.push_back({pat, {}});
            }
            out.families[fit->second].hits.push_back({n, lam, res});
        }
    }
    for (auto& fam : out.families)
        std::sort(fam.hits.begin(), fam.hits.end(), [](const SpectralHit& a, const SpectralHit& b) {
            if (a.n != b.n) return a.n < b.n;
            return const_less(a.lambda, b.lambda);
        });
    for (const auto& [lam, c] : case_of) {
        out.lambdas.push_back(lam);
        if (c == 3) ++out.case3_lambda_count;
    }
    if (out.case3_lambda_count > 1)
        out.warnings.push_back("more than one finite primitive lambda; this contradicts the "
                               "one-primitive-point bound");
    return out;
}

}  // namespace algspec
