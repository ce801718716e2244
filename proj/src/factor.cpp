#include "algspec/factor.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <set>

namespace algspec {

RatC param_substitute(const RatP& f, const Const& value) {
    auto sub = [&](const Poly<ParamF>& p) {
        PolyC out;
        out.c.reserve(p.c.size());
        for (const ParamF& k : p.c) out.c.push_back(param_eval(k, value));
        out.trim();
        return out;
    };
    PolyC d = sub(f.den);
    if (d.is_zero()) throw FieldError("parameter value annihilates a denominator");
    return RatC(sub(f.num), d);
}

namespace {

bool coeffs_rational(const PolyC& p) {
    for (const Const& k : p.c) {
        if (!k.is_rational()) return false;
    }
    return true;
}

bool coeffs_gaussian(const PolyC& p) {
    for (const Const& k : p.c) {
        if (!k.is_gaussian()) return false;
    }
    return true;
}

std::vector<Int> divisors_of(const Int& n0, bool& complete) {
    complete = true;
    Int n = n0 < 0 ? Int(-n0) : n0;
    std::vector<std::pair<Int, int>> fact;
    Int p = 2;
    const Int limit = 1000000;
    while (p * p <= n && p <= limit) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fact.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
    }
    if (n > 1) {
        // Possibly composite leftover: its internal divisors are not
        // enumerated, so the caller knows the list may be incomplete.
        fact.emplace_back(n, 1);
        if (!boost::multiprecision::miller_rabin_test(n, 25)) complete = false;
    }
    std::vector<Int> divs = {1};
    for (auto& [q, e] : fact) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= q;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > 5000) {
                    complete = false;
                    return divs;
                }
            }
        }
    }
    return divs;
}

// Rational root candidates for a rational-coefficient polynomial.
std::vector<Const> rational_root_candidates(const PolyC& p) {
    Int L = 1;
    for (const Const& k : p.c) L = boost::multiprecision::lcm(L, rat_den(k.re));
    std::vector<Int> c;
    for (const Const& k : p.c) c.push_back(rat_num(Rat(k.re * Rat(L))));
    while (!c.empty() && c.front() == 0) c.erase(c.begin());
    if (c.empty()) return {};
    bool ok1 = true, ok2 = true;
    std::vector<Int> ps = divisors_of(c.front(), ok1);
    std::vector<Int> qs = divisors_of(c.back(), ok2);
    std::vector<Const> out;
    if (ps.size() * qs.size() > 20000) return out;
    for (const Int& a : ps) {
        for (const Int& b : qs) {
            Rat r(a, b);
            out.emplace_back(r);
            out.emplace_back(Rat(-r));
        }
    }
    return out;
}

std::optional<Const> quadratic_root(const PolyC& p) {
    Const a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Const disc = b * b - Const(4) * a * c;
    auto s = const_sqrt(disc);
    if (!s) return std::nullopt;
    return (-b + *s) / (Const(2) * a);
}

std::optional<Const> find_one_root(const PolyC& p);

std::optional<Const> root_via_even_structure(const PolyC& p) {
    // p(x) = q(x^2)?
    for (int i = 1; i <= p.degree(); i += 2) {
        if (!(p.coeff(i) == Const())) return std::nullopt;
    }
    PolyC q;
    q.c.resize(p.degree() / 2 + 1, Const());
    for (int i = 0; i <= p.degree(); i += 2) q.c[i / 2] = p.coeff(i);
    q.trim();
    PolyC rem = q;
    // Walk every w-root we can find; any with a field square root gives x.
    while (rem.degree() >= 1) {
        auto w = find_one_root(rem);
        if (!w) break;
        if (auto x = const_sqrt(*w)) {
            if (poly_eval(p, *x).is_zero()) return x;
        }
        PolyC lin;
        lin.c = {-*w, Const(1)};
        rem = poly_divmod(rem, lin).first;
    }
    return std::nullopt;
}

std::optional<Const> find_one_root(const PolyC& p) {
    int d = p.degree();
    if (d <= 0) return std::nullopt;
    if (p.coeff(0) == Const()) return Const();
    if (d == 1) return -p.coeff(0) / p.coeff(1);
    if (d == 2) return quadratic_root(p);
    if (auto r = root_via_even_structure(p)) return r;
    std::vector<Const> candidates;
    if (coeffs_rational(p)) {
        candidates = rational_root_candidates(p);
    } else if (coeffs_gaussian(p)) {
        // Rational roots kill both component polynomials; mine whichever is
        // nonzero, and also scan small Gaussian integers and halves.
        PolyC re_part, im_part;
        re_part.c.resize(p.c.size());
        im_part.c.resize(p.c.size());
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            re_part.c[i] = Const(p.c[i].re);
            im_part.c[i] = Const(p.c[i].im);
        }
        re_part.trim();
        im_part.trim();
        if (!re_part.is_zero()) candidates = rational_root_candidates(re_part);
        if (!im_part.is_zero()) {
            auto more = rational_root_candidates(im_part);
            candidates.insert(candidates.end(), more.begin(), more.end());
        }
        for (int a = -8; a <= 8; ++a) {
            for (int b = -8; b <= 8; ++b) {
                if (b == 0) continue;
                candidates.push_back(Const(Rat(a), Rat(b)));
                candidates.push_back(Const(Rat(a, 2), Rat(b, 2)));
            }
        }
    } else {
        // Coefficients involve sqrt(d): roots of p divide roots of p * conj(p),
        // whose coefficients are Gaussian.
        PolyC conj;
        conj.c.resize(p.c.size());
        for (std::size_t i = 0; i < p.c.size(); ++i) conj.c[i] = const_conj_rad(p.c[i]);
        conj.trim();
        PolyC q = p * conj;
        PolyC rem = q;
        for (int guard = 0; guard < 64 && rem.degree() >= 1; ++guard) {
            auto r = find_one_root(rem);
            if (!r) break;
            if (poly_eval(p, *r).is_zero()) return r;
            PolyC lin;
            lin.c = {-*r, Const(1)};
            do {
                auto [qq, rr] = poly_divmod(rem, lin);
                if (!rr.is_zero()) break;
                rem = qq;
            } while (true);
        }
        return std::nullopt;
    }
    for (const Const& cand : candidates) {
        if (poly_eval(p, cand).is_zero()) return cand;
    }
    return std::nullopt;
}

}  // namespace

PartialFactorization factor_partial(const PolyC& p) {
    PartialFactorization out;
    if (p.is_zero()) throw std::domain_error("factoring the zero polynomial");
    PolyC rem = poly_monic(p);
    while (rem.degree() >= 1) {
        auto r = find_one_root(rem);
        if (!r) break;
        int mult = 0;
        PolyC lin;
        lin.c = {-*r, Const(1)};
        while (true) {
            auto [q, rr] = poly_divmod(rem, lin);
            if (!rr.is_zero()) break;
            rem = q;
            ++mult;
        }
        out.roots.push_back({*r, mult});
    }
    out.remainder = rem;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootMult& a, const RootMult& b) { return const_less(a.root, b.root); });
    // Self-check: re-multiply.
    PolyC prod = out.remainder;
    for (const auto& rm : out.roots) {
        PolyC lin;
        lin.c = {-rm.root, Const(1)};
        for (int k = 0; k < rm.mult; ++k) prod = prod * lin;
    }
    if (!(prod == poly_monic(p))) throw std::logic_error("factorization self-check failed");
    return out;
}

std::vector<RootMult> factor_over_field(const PolyC& p) {
    PartialFactorization pf = factor_partial(p);
    if (pf.remainder.degree() > 0) {
        throw IrreducibleResidual(pf.remainder,
                                  "polynomial has a factor with no roots in the constant field: " +
                                      polyc_str(pf.remainder));
    }
    return pf.roots;
}

}  // namespace algspec
