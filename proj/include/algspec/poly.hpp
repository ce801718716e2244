#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algspec {

// Dense univariate polynomial over a field F. Coefficients ascending;
// the zero polynomial has an empty coefficient vector. F needs exact
// +,-,*,/, ==, default construction to 0, and construction from long long.
template <class F>
struct Poly {
    std::vector<F> c;

    Poly() = default;
    Poly(std::initializer_list<F> init) : c(init) { trim(); }
    explicit Poly(std::vector<F> v) : c(std::move(v)) { trim(); }

    static Poly constant(const F& k) {
        Poly p;
        if (!(k == F())) p.c.push_back(k);
        return p;
    }
    static Poly x() {
        Poly p;
        p.c = {F(), F(1)};
        return p;
    }
    // k * x^n
    static Poly monomial(const F& k, int n) {
        Poly p;
        if (k == F()) return p;
        p.c.assign(n + 1, F());
        p.c[n] = k;
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == F()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const F& lc() const {
        static const F zero{};
        return c.empty() ? zero : c.back();
    }
    F coeff(int n) const {
        if (n < 0 || n >= static_cast<int>(c.size())) return F();
        return c[n];
    }
};

template <class F>
bool operator==(const Poly<F>& a, const Poly<F>& b) {
    return a.c == b.c;
}
template <class F>
bool operator!=(const Poly<F>& a, const Poly<F>& b) {
    return !(a == b);
}

template <class F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), F());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        F v = F();
        if (i < a.c.size()) v = v + a.c[i];
        if (i < b.c.size()) v = v + b.c[i];
        r.c[i] = v;
    }
    r.trim();
    return r;
}

template <class F>
Poly<F> operator-(const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& v : r.c) v = F() - v;
    return r;
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
    return a + (-b);
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, F());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == F()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == F()) continue;
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
    }
    r.trim();
    return r;
}

template <class F>
Poly<F> operator*(const Poly<F>& a, const F& k) {
    Poly<F> r = a;
    for (auto& v : r.c) v = v * k;
    r.trim();
    return r;
}

template <class F>
Poly<F> operator*(const F& k, const Poly<F>& a) {
    return a * k;
}

template <class F>
Poly<F> operator+(const Poly<F>& a, const F& k) {
    return a + Poly<F>::constant(k);
}

template <class F>
Poly<F> operator+(const F& k, const Poly<F>& a) {
    return a + Poly<F>::constant(k);
}

template <class F>
Poly<F> operator-(const Poly<F>& a, const F& k) {
    return a - Poly<F>::constant(k);
}

template <class F>
Poly<F> operator-(const F& k, const Poly<F>& a) {
    return Poly<F>::constant(k) - a;
}

template <class F>
Poly<F> poly_div_scalar(const Poly<F>& a, const F& k) {
    Poly<F> r = a;
    for (auto& v : r.c) v = v / k;
    return r;
}

// Quotient and remainder; divisor must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly<F> q, r = a;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        F f = r.lc() / b.lc();
        if (q.c.size() < static_cast<std::size_t>(k + 1)) q.c.resize(k + 1, F());
        q.c[k] = q.c[k] + f;
        // r -= f * x^k * b
        for (int i = 0; i <= db; ++i) {
            r.c[i + k] = r.c[i + k] - f * b.c[i];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(a, b).first;
}
template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(a, b).second;
}

template <class F>
Poly<F> poly_monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_div_scalar(a, a.lc());
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

template <class F>
Poly<F> poly_lcm(const Poly<F>& a, const Poly<F>& b) {
    if (a.degree() == 0 && b.degree() == 0) return Poly<F>::constant(F(1));
    return poly_monic((a * b) / poly_gcd(a, b));
}

template <class F>
Poly<F> poly_derivative(const Poly<F>& a) {
    Poly<F> r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = a.c[i] * F(static_cast<long long>(i));
    r.trim();
    return r;
}

template <class F>
F poly_eval(const Poly<F>& a, const F& x) {
    F r = F();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * x + *it;
    return r;
}

// Evaluate with coefficients mapped into another ring first.
template <class F, class G, class Map>
G poly_eval_mapped(const Poly<F>& a, const G& x, Map&& into) {
    G r = G();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * x + into(*it);
    return r;
}

template <class F>
Poly<F> poly_pow(Poly<F> base, int e) {
    Poly<F> r = Poly<F>::constant(F(1));
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// p(x + s), built by Horner: q = (((a_n)(x+s) + a_{n-1})(x+s) + ...) + a_0.
template <class F>
Poly<F> poly_taylor_shift(const Poly<F>& p, const F& s) {
    if (p.is_zero() || s == F()) return p;
    int n = p.degree();
    Poly<F> q;
    Poly<F> xs;
    xs.c = {s, F(1)};
    for (int i = n; i >= 0; --i) {
        q = q * xs;
        q = q + Poly<F>::constant(p.c[i]);
    }
    return q;
}

// Squarefree decomposition (Yun). Returns factors f_i with multiplicity i:
// p = lc * prod f_i^i, each f_i monic squarefree. Characteristic zero only.
template <class F>
std::vector<std::pair<Poly<F>, int>> poly_squarefree(const Poly<F>& p0) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (p0.degree() <= 0) return out;
    Poly<F> p = poly_monic(p0);
    Poly<F> dp = poly_derivative(p);
    Poly<F> a = poly_gcd(p, dp);
    Poly<F> b = p / a;
    Poly<F> c = dp / a;
    Poly<F> d = c - poly_derivative(b);
    int i = 1;
    while (b.degree() > 0) {
        Poly<F> f = poly_gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f, i);
        b = b / f;
        c = d / f;
        d = c - poly_derivative(b);
        ++i;
    }
    return out;
}

template <class F>
Poly<F> poly_from_roots(const std::vector<F>& roots) {
    Poly<F> p = Poly<F>::constant(F(1));
    for (const F& r : roots) {
        Poly<F> lin;
        lin.c = {F() - r, F(1)};
        p = p * lin;
    }
    return p;
}

// Exact square root of a polynomial when it is a perfect square (monic-aware:
// handles any square leading coefficient). Returns the root with lc chosen
// so that its leading coefficient is sqrt_lc.
template <class F, class SqrtFn>
std::optional<Poly<F>> poly_sqrt(const Poly<F>& p, SqrtFn&& sqrt_in_field) {
    if (p.is_zero()) return Poly<F>();
    int d = p.degree();
    if (d % 2) return std::nullopt;
    auto sl = sqrt_in_field(p.lc());
    if (!sl) return std::nullopt;
    int m = d / 2;
    Poly<F> s;
    s.c.assign(m + 1, F());
    s.c[m] = *sl;
    // Solve coefficients top-down: coefficient of x^(m+k) in s^2 equals
    // 2 s_m s_k plus a sum over already-known s_i with k < i < m.
    for (int k = m - 1; k >= 0; --k) {
        F acc = F();
        for (int i = k + 1; i <= m - 1; ++i) {
            int j = m + k - i;
            if (j <= k || j > m - 1) continue;
            acc = acc + s.c[i] * s.c[j];
        }
        F need = p.coeff(m + k) - acc;
        s.c[k] = need / (F(2) * s.c[m]);
    }
    if (s * s == p) return s;
    return std::nullopt;
}

template <class F, class Fmt>
std::string poly_to_string(const Poly<F>& p, const std::string& var, Fmt&& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        F k = p.coeff(i);
        if (k == F()) continue;
        std::string ks = fmt(k);
        bool neg = !ks.empty() && ks[0] == '-';
        std::string mag = neg ? ks.substr(1) : ks;
        bool composite = mag.find(' ') != std::string::npos;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body;
        if (i == 0) {
            body = composite ? "(" + mag + ")" : mag;
        } else {
            std::string xs = i == 1 ? var : var + "^" + std::to_string(i);
            if (mag == "1") {
                body = xs;
            } else {
                body = (composite ? "(" + mag + ")" : mag) + "*" + xs;
            }
        }
        out += body;
    }
    return out;
}

}  // namespace algspec
