#include "algspec/laurent.hpp"

namespace algspec {

namespace {

PolyC truncate(PolyC p, int n) {
    if (p.degree() >= n) {
        p.c.resize(n);
        p.trim();
    }
    return p;
}

PolyC series_div(const PolyC& num, const PolyC& den, int n) {
    // num/den as a power series mod x^n; den(0) != 0.
    Const d0 = den.coeff(0);
    if (d0 == Const()) throw std::logic_error("series division by x");
    PolyC inv = PolyC::constant(Const(1) / d0);
    for (int len = 1; len < n; len *= 2) {
        int m = std::min(2 * len, n);
        PolyC t = truncate(den, m);
        PolyC pi = truncate(t * inv, m);
        inv = truncate(inv * (PolyC::constant(Const(2)) - pi), m);
    }
    return truncate(num * inv, n);
}

// Coefficients of sqrt(u) as a power series mod x^n; u(0) must have a
// square root in the field.
std::optional<PolyC> series_sqrt(const PolyC& u, int n) {
    auto s0 = const_sqrt(u.coeff(0));
    if (!s0 || s0->is_zero()) return std::nullopt;
    PolyC s;
    s.c.assign(n, Const());
    s.c[0] = *s0;
    for (int k = 1; k < n; ++k) {
        Const inner;
        for (int i = 1; i < k; ++i) inner += s.c[i] * s.c[k - i];
        s.c[k] = (u.coeff(k) - inner) / (Const(2) * *s0);
    }
    // Guarded self-check: square back and compare all n coefficients.
    PolyC sq = truncate(s * s, n);
    for (int k = 0; k < n; ++k) {
        if (!(sq.coeff(k) == truncate(u, n).coeff(k)))
            throw InternalSeriesError("series sqrt failed to square back");
    }
    s.trim();
    return s;
}

PolyC reverse_poly(const PolyC& p, int deg) {
    // x^deg * p(1/x) for deg >= p.degree().
    PolyC r;
    r.c.assign(deg + 1, Const());
    for (int i = 0; i <= p.degree(); ++i) r.c[deg - i] = p.coeff(i);
    r.trim();
    return r;
}

}  // namespace

Const coefficient_at_pole(const RatC& g, const Const& c, int k) {
    if (g.is_zero()) return Const();
    int m = ratfunc_pole_order(g, c);
    if (m < k) return Const();
    PolyC n_sh = poly_taylor_shift(g.num, c);
    PolyC d_sh = poly_taylor_shift(g.den, c);
    // d_sh = t^m * q with q(0) != 0; n_sh may also carry powers of t if m<=0,
    // but m >= k >= 1 here so den really vanishes.
    int drop = 0;
    while (drop <= d_sh.degree() && d_sh.coeff(drop) == Const()) ++drop;
    PolyC q;
    q.c.assign(d_sh.c.begin() + drop, d_sh.c.end());
    q.trim();
    // g = n_sh / (t^drop q); coeff of t^(-k) = series coeff of n_sh/q at t^(drop-k).
    int want = drop - k;
    if (want < 0) return Const();
    PolyC ser = series_div(n_sh, q, want + 1);
    return ser.coeff(want);
}

Const coefficient_at_infinity(const RatC& g, int e) {
    if (g.is_zero()) return Const();
    int dn = g.num.degree(), dd = g.den.degree();
    PolyC rn = reverse_poly(g.num, dn);
    PolyC rd = reverse_poly(g.den, dd);
    // g(1/w) = w^(dd-dn) * rn(w)/rd(w); coeff of x^e = coeff of w^(-e).
    int t = -e - (dd - dn);
    if (t < 0) return Const();
    PolyC ser = series_div(rn, rd, t + 1);
    return ser.coeff(t);
}

std::optional<SqrtAtPole> sqrt_principal_at_pole(const RatC& r, const Const& c) {
    int order = ratfunc_pole_order(r, c);
    if (order < 4 || order % 2) throw std::logic_error("pole order must be even >= 4");
    int v = order / 2;
    PolyC n_sh = poly_taylor_shift(r.num, c);
    PolyC d_sh = poly_taylor_shift(r.den, c);
    PolyC q;
    q.c.assign(d_sh.c.begin() + order, d_sh.c.end());
    q.trim();
    int terms = v + 2;  // v-1 needed for S, extra guard terms checked in sqrt
    PolyC u = series_div(n_sh, q, terms);
    auto s = series_sqrt(u, terms);
    if (!s) return std::nullopt;
    SqrtAtPole out;
    out.location = c;
    out.v = v;
    out.a = s->coeff(0);
    // S = sum_{k=0}^{v-2} s_k (x-c)^(k-v)
    PolyC lin;
    lin.c = {-c, Const(1)};
    RatC S;
    for (int k = 0; k <= v - 2; ++k) {
        if (s->coeff(k) == Const()) continue;
        S += RatC(PolyC::constant(s->coeff(k)) * poly_pow(lin, k), poly_pow(lin, v));
    }
    out.principal = S;
    out.b = coefficient_at_pole(r - S * S, c, v + 1);
    return out;
}

std::optional<SqrtAtInfinity> sqrt_principal_at_infinity(const RatC& r) {
    int o = r.order_at_infinity();
    if (o > 0 || o % 2) throw std::logic_error("order at infinity must be even <= 0");
    int v = -o / 2;
    int dn = r.num.degree(), dd = r.den.degree();
    PolyC rn = reverse_poly(r.num, dn);
    PolyC rd = reverse_poly(r.den, dd);
    int terms = v + 2;
    PolyC u = series_div(rn, rd, terms);
    auto s = series_sqrt(u, terms);
    if (!s) return std::nullopt;
    SqrtAtInfinity out;
    out.v = v;
    out.a = s->coeff(0);
    PolyC p;
    p.c.assign(v + 1, Const());
    for (int k = 0; k <= v; ++k) p.c[v - k] = s->coeff(k);
    p.trim();
    out.p = p;
    RatC P{p, PolyC::constant(Const(1))};
    out.b = coefficient_at_infinity(r - P * P, v - 1);
    return out;
}

}  // namespace algspec
