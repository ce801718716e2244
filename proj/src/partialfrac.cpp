#include "algspec/partialfrac.hpp"

namespace algspec {

namespace {

// Truncated inverse of a power series p (p(0) != 0) to n terms.
PolyC series_inverse(const PolyC& p, int n) {
    Const c0 = p.coeff(0);
    PolyC inv = PolyC::constant(Const(1) / c0);
    for (int len = 1; len < n; len *= 2) {
        int m = std::min(2 * len, n);
        // inv <- inv * (2 - p * inv) mod x^m
        PolyC t = p;
        if (t.degree() >= m) t.c.resize(m), t.trim();
        PolyC pi = t * inv;
        if (pi.degree() >= m) pi.c.resize(m), pi.trim();
        PolyC two_minus = PolyC::constant(Const(2)) - pi;
        inv = inv * two_minus;
        if (inv.degree() >= m) inv.c.resize(m), inv.trim();
    }
    return inv;
}

}  // namespace

PartialFractions partial_fractions(const RatC& f) {
    PartialFractions out;
    auto [q, r] = poly_divmod(f.num, f.den);
    out.poly_part = q;
    if (r.is_zero()) return out;
    auto roots = factor_over_field(f.den);
    for (const auto& rm : roots) {
        // Shift so the pole sits at the origin: N(t) / (t^m * Q(t)).
        PolyC n_sh = poly_taylor_shift(r, rm.root);
        PolyC d_sh = poly_taylor_shift(f.den, rm.root);
        // Remove t^m.
        PolyC qpoly;
        qpoly.c.assign(d_sh.c.begin() + rm.mult, d_sh.c.end());
        qpoly.trim();
        PolyC inv = series_inverse(qpoly, rm.mult);
        PolyC t = n_sh * inv;
        if (t.degree() >= rm.mult) t.c.resize(rm.mult), t.trim();
        PartialFractions::Pole pole;
        pole.location = rm.root;
        pole.coeffs.assign(rm.mult, Const());
        // t_j is the coefficient of (x-c)^{-(m-j)}.
        for (int j = 0; j < rm.mult; ++j) pole.coeffs[rm.mult - 1 - j] = t.coeff(j);
        while (!pole.coeffs.empty() && pole.coeffs.back() == Const()) pole.coeffs.pop_back();
        if (!pole.coeffs.empty()) out.poles.push_back(std::move(pole));
    }
    // Self-check: the decomposition must re-sum to f exactly.
    if (!(partial_fractions_sum(out) == f)) {
        throw std::logic_error("partial fraction self-check failed");
    }
    return out;
}

RatC partial_fractions_sum(const PartialFractions& pf) {
    RatC acc{pf.poly_part, PolyC::constant(Const(1))};
    for (const auto& pole : pf.poles) {
        PolyC lin;
        lin.c = {-pole.location, Const(1)};
        PolyC den = PolyC::constant(Const(1));
        for (int k = 1; k <= pole.order(); ++k) {
            den = den * lin;
            if (pole.coeffs[k - 1] == Const()) continue;
            acc += RatC(PolyC::constant(pole.coeffs[k - 1]), den);
        }
    }
    return acc;
}

Const pf_coeff(const PartialFractions& pf, const Const& c, int k) {
    const auto* pole = pf.find(c);
    if (!pole || k < 1 || k > pole->order()) return Const();
    return pole->coeffs[k - 1];
}

}  // namespace algspec
