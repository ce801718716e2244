#pragma once

#include "algspec/poly.hpp"

namespace algspec {

// Rational function num/den over a field F, kept in lowest terms with a
// monic denominator. den is never zero.
template <class F>
struct RatFunc {
    Poly<F> num;
    Poly<F> den = Poly<F>::constant(F(1));

    RatFunc() = default;
    RatFunc(long long n) : num(Poly<F>::constant(F(n))) {}
    explicit RatFunc(const F& k) : num(Poly<F>::constant(k)) {}
    explicit RatFunc(Poly<F> n) : num(std::move(n)) {}
    RatFunc(Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static RatFunc x() { return RatFunc(Poly<F>::x()); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num.is_zero()) {
            den = Poly<F>::constant(F(1));
            return;
        }
        Poly<F> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        F l = den.lc();
        if (!(l == F(1))) {
            num = poly_div_scalar(num, l);
            den = poly_div_scalar(den, l);
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }
    bool is_poly() const { return den.degree() == 0; }
    F constant_value() const {
        if (!is_constant()) throw std::domain_error("not a constant");
        return num.is_zero() ? F() : num.c[0];
    }
    // Order at infinity: deg(den) - deg(num). Large sentinel for zero.
    int order_at_infinity() const {
        if (num.is_zero()) return 1 << 20;
        return den.degree() - num.degree();
    }
};

template <class F>
bool operator==(const RatFunc<F>& a, const RatFunc<F>& b) {
    return a.num == b.num && a.den == b.den;
}
template <class F>
bool operator!=(const RatFunc<F>& a, const RatFunc<F>& b) {
    return !(a == b);
}

template <class F>
RatFunc<F> operator+(const RatFunc<F>& a, const RatFunc<F>& b) {
    return RatFunc<F>(a.num * b.den + b.num * a.den, a.den * b.den);
}
template <class F>
RatFunc<F> operator-(const RatFunc<F>& a) {
    RatFunc<F> r = a;
    r.num = -r.num;
    return r;
}
template <class F>
RatFunc<F> operator-(const RatFunc<F>& a, const RatFunc<F>& b) {
    return a + (-b);
}
template <class F>
RatFunc<F> operator*(const RatFunc<F>& a, const RatFunc<F>& b) {
    return RatFunc<F>(a.num * b.num, a.den * b.den);
}
template <class F>
RatFunc<F> operator/(const RatFunc<F>& a, const RatFunc<F>& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFunc<F>(a.num * b.den, a.den * b.num);
}

template <class F>
RatFunc<F>& operator+=(RatFunc<F>& a, const RatFunc<F>& b) { return a = a + b; }
template <class F>
RatFunc<F>& operator-=(RatFunc<F>& a, const RatFunc<F>& b) { return a = a - b; }
template <class F>
RatFunc<F>& operator*=(RatFunc<F>& a, const RatFunc<F>& b) { return a = a * b; }
template <class F>
RatFunc<F>& operator/=(RatFunc<F>& a, const RatFunc<F>& b) { return a = a / b; }

template <class F>
RatFunc<F> ratfunc_derivative(const RatFunc<F>& f) {
    Poly<F> n = poly_derivative(f.num) * f.den - f.num * poly_derivative(f.den);
    return RatFunc<F>(n, f.den * f.den);
}

// f'/f without needing f in factored form; poles/zeros appear with integer
// residues equal to their multiplicities.
template <class F>
RatFunc<F> ratfunc_logderiv(const RatFunc<F>& f) {
    if (f.is_zero()) throw std::domain_error("log derivative of zero");
    RatFunc<F> a(poly_derivative(f.num), f.num);
    RatFunc<F> b(poly_derivative(f.den), f.den);
    return a - b;
}

template <class F>
F ratfunc_eval(const RatFunc<F>& f, const F& x) {
    F d = poly_eval(f.den, x);
    if (d == F()) throw std::domain_error("evaluation at a pole");
    return poly_eval(f.num, x) / d;
}

// Multiplicity of root c in den minus multiplicity in num (positive = pole).
template <class F>
int ratfunc_pole_order(const RatFunc<F>& f, const F& c) {
    auto mult = [&](const Poly<F>& p) {
        if (p.is_zero()) return -1;
        int m = 0;
        Poly<F> lin;
        lin.c = {F() - c, F(1)};
        Poly<F> cur = p;
        while (true) {
            auto [q, r] = poly_divmod(cur, lin);
            if (!r.is_zero()) break;
            ++m;
            cur = q;
        }
        return m;
    };
    return mult(f.den) - mult(f.num);
}

// Substitute another rational function for the variable.
template <class F>
RatFunc<F> ratfunc_compose(const RatFunc<F>& f, const RatFunc<F>& g) {
    auto horner = [&](const Poly<F>& p) {
        RatFunc<F> acc;
        for (int i = p.degree(); i >= 0; --i) {
            acc = acc * g + RatFunc<F>(Poly<F>::constant(p.coeff(i)));
        }
        return acc;
    };
    return horner(f.num) / horner(f.den);
}

template <class F, class Fmt>
std::string ratfunc_to_string(const RatFunc<F>& f, const std::string& var, Fmt&& fmt) {
    std::string n = poly_to_string(f.num, var, fmt);
    if (f.den.degree() == 0) return n;
    std::string d = poly_to_string(f.den, var, fmt);
    std::string out = (n.find(' ') == std::string::npos) ? n : "(" + n + ")";
    return out + " / (" + d + ")";
}

}  // namespace algspec
