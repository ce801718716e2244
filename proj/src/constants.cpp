#include "algspec/constants.hpp"

#include <limits>
#include <vector>

namespace algspec {

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto sn = int_sqrt_exact(rat_num(r));
    if (!sn) return std::nullopt;
    auto sd = int_sqrt_exact(rat_den(r));
    if (!sd) return std::nullopt;
    return Rat(*sn, *sd);
}

SquareSplit split_square(const Int& n) {
    if (n == 0) return {0, 0};
    Int m = n < 0 ? Int(-n) : n;
    Int s = 1, f = 1;
    Int p = 2;
    // Trial division; bounded so huge semiprimes cannot stall the session.
    const Int limit = 1000000;
    while (p * p <= m && p <= limit) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            for (int k = 0; k < e / 2; ++k) s *= p;
            if (e % 2) f *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (m > 1) {
        if (auto r = int_sqrt_exact(m)) {
            s *= *r;
        } else {
            f *= m;
        }
    }
    if (n < 0) f = -f;
    return {s, f};
}

std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    auto read_int = [&](const char* what) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError(std::string("expected ") + what + " in '" + s + "'");
        return Int(s.substr(start, i - start));
    };
    Int num = read_int("numerator");
    Int den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_int("denominator");
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    if (i != s.size()) throw ParseError("trailing characters in rational '" + s + "'");
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

namespace {

std::int64_t merge_d(const Const& a, const Const& b) {
    bool ra = a.rad != 0 || a.rad_im != 0;
    bool rb = b.rad != 0 || b.rad_im != 0;
    if (ra && rb && a.d != b.d)
        throw FieldError("constants from different quadratic extensions");
    if (ra) return a.d;
    if (rb) return b.d;
    return a.d ? a.d : b.d;
}

}  // namespace

Const const_i() {
    Const c;
    c.im = 1;
    return c;
}

Const const_sqrt_d(std::int64_t d) {
    if (d < 2) throw FieldError("adjoined radicand must be >= 2");
    Const c;
    c.rad = 1;
    c.d = d;
    return c;
}

Const operator+(const Const& a, const Const& b) {
    Const r;
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    r.rad = a.rad + b.rad;
    r.rad_im = a.rad_im + b.rad_im;
    r.d = merge_d(a, b);
    return r;
}

Const operator-(const Const& a, const Const& b) { return a + (-b); }

Const operator-(const Const& a) {
    Const r = a;
    r.re = -r.re;
    r.im = -r.im;
    r.rad = -r.rad;
    r.rad_im = -r.rad_im;
    return r;
}

Const operator*(const Const& a, const Const& b) {
    // (x1 + y1*s)(x2 + y2*s) with s = sqrt(d), x,y Gaussian, s^2 = d.
    std::int64_t d = merge_d(a, b);
    Rat x1r = a.re, x1i = a.im, y1r = a.rad, y1i = a.rad_im;
    Rat x2r = b.re, x2i = b.im, y2r = b.rad, y2i = b.rad_im;
    Rat dd(d);
    Const r;
    r.d = d;
    // x1*x2 + d*y1*y2
    r.re = x1r * x2r - x1i * x2i + dd * (y1r * y2r - y1i * y2i);
    r.im = x1r * x2i + x1i * x2r + dd * (y1r * y2i + y1i * y2r);
    // x1*y2 + x2*y1
    r.rad = x1r * y2r - x1i * y2i + x2r * y1r - x2i * y1i;
    r.rad_im = x1r * y2i + x1i * y2r + x2r * y1i + x2i * y1r;
    return r;
}

Const const_conj(const Const& a) {
    Const r = a;
    r.im = -r.im;
    r.rad_im = -r.rad_im;
    return r;
}

Const const_conj_rad(const Const& a) {
    Const r = a;
    r.rad = -r.rad;
    r.rad_im = -r.rad_im;
    return r;
}

Const const_inv(const Const& a) {
    if (a.is_zero()) throw FieldError("division by zero constant");
    // Clear sqrt(d): a * conj_rad(a) is Gaussian.
    Const cr = const_conj_rad(a);
    Const g = a * cr;  // Gaussian now
    Rat n = g.re * g.re + g.im * g.im;
    if (n == 0) throw FieldError("division by zero constant");
    Const gc = const_conj(g);
    Const r = cr * gc;
    Const out;
    out.re = r.re / n;
    out.im = r.im / n;
    out.rad = r.rad / n;
    out.rad_im = r.rad_im / n;
    out.d = r.d;
    return out;
}

Const operator/(const Const& a, const Const& b) { return a * const_inv(b); }

bool operator==(const Const& a, const Const& b) {
    if (a.re != b.re || a.im != b.im || a.rad != b.rad || a.rad_im != b.rad_im) return false;
    bool ra = a.rad != 0 || a.rad_im != 0;
    if (ra && a.d != b.d) return false;
    return true;
}

bool operator!=(const Const& a, const Const& b) { return !(a == b); }

Const& operator+=(Const& a, const Const& b) { return a = a + b; }
Const& operator-=(Const& a, const Const& b) { return a = a - b; }
Const& operator*=(Const& a, const Const& b) { return a = a * b; }
Const& operator/=(Const& a, const Const& b) { return a = a / b; }

Rat const_norm_q(const Const& a) {
    Const g = a * const_conj_rad(a);
    return g.re * g.re + g.im * g.im;
}

namespace {

void push_if_square(std::vector<Const>& out, const Const& a, const Const& w) {
    if (w * w == a) out.push_back(w);
}

// Candidates for sqrt of a real value A + C*sqrt(d) (C may be zero).
void real_sqrt_candidates(std::vector<Const>& out, const Const& a) {
    Rat A = a.re, C = a.rad;
    std::int64_t d = a.d;
    if (C == 0) {
        if (A >= 0) {
            if (auto s = rat_sqrt_exact(A)) {
                Const w;
                w.re = *s;
                w.d = d;
                push_if_square(out, a, w);
            }
            if (d >= 2) {
                if (auto s = rat_sqrt_exact(Rat(A / d))) {
                    Const w;
                    w.rad = *s;
                    w.d = d;
                    push_if_square(out, a, w);
                }
            }
            if (out.empty() && d < 2 && A > 0) {
                // No radical in play yet: adjoin sqrt of the square-free part.
                Int n = rat_num(A), m = rat_den(A);
                auto sp = split_square(Int(n * m));
                if (sp.free_part > 1 &&
                    sp.free_part <= Int(std::numeric_limits<std::int64_t>::max())) {
                    Const w;
                    w.rad = Rat(sp.square_root, m);
                    w.d = static_cast<std::int64_t>(sp.free_part);
                    push_if_square(out, a, w);
                }
            }
        }
        return;
    }
    if (d < 2) return;
    // w = p + q*sqrt(d): p^2 + d q^2 = A, 2 p q = C.
    Rat disc = A * A - C * C * d;
    if (auto s = rat_sqrt_exact(disc)) {
        for (int sign = 0; sign < 2; ++sign) {
            Rat t = (A + (sign ? -*s : *s)) / 2;
            if (t <= 0) continue;
            if (auto p = rat_sqrt_exact(t)) {
                if (*p == 0) continue;
                Const w;
                w.re = *p;
                w.rad = C / (2 * *p);
                w.d = d;
                push_if_square(out, a, w);
            }
        }
    }
}

void gaussian_sqrt_candidates(std::vector<Const>& out, const Const& a) {
    // a = p + q i with q != 0. w = u + v i needs u^2 = (p + n)/2, n = |a|.
    Rat p = a.re, q = a.im;
    Rat N = p * p + q * q;
    auto n = rat_sqrt_exact(N);
    if (!n) return;
    for (int which = 0; which < 2; ++which) {
        Rat t = which ? Rat((*n - p) / 2) : Rat((p + *n) / 2);
        if (t <= 0) continue;
        if (auto u = rat_sqrt_exact(t)) {
            if (*u == 0) continue;
            Const w;
            w.d = a.d;
            if (which == 0) {
                w.re = *u;
                w.im = q / (2 * *u);
            } else {
                w.im = *u;
                w.re = q / (2 * *u);
            }
            push_if_square(out, a, w);
        }
        if (a.d >= 2) {
            Rat td = t / a.d;
            if (td > 0) {
                if (auto u = rat_sqrt_exact(td)) {
                    if (*u == 0) continue;
                    Const w;
                    w.d = a.d;
                    if (which == 0) {
                        w.rad = *u;
                        w.rad_im = q / (2 * *u * a.d);
                    } else {
                        w.rad_im = *u;
                        w.rad = q / (2 * *u * a.d);
                    }
                    push_if_square(out, a, w);
                }
            }
        }
    }
}

}  // namespace

std::optional<Const> const_sqrt(const Const& a) {
    if (a.is_zero()) return Const();
    std::vector<Const> cands;
    if (a.is_real()) {
        real_sqrt_candidates(cands, a);
        if (cands.empty()) {
            // Negative real: sqrt = i * sqrt(-a).
            Const neg = -a;
            std::vector<Const> inner;
            real_sqrt_candidates(inner, neg);
            for (const Const& t : inner) {
                Const w;
                w.im = t.re;
                w.rad_im = t.rad;
                w.d = t.d;
                push_if_square(cands, a, w);
            }
        }
    } else {
        if (a.is_gaussian()) gaussian_sqrt_candidates(cands, a);
        if (cands.empty() && a.re == 0 && a.rad == 0) {
            // Pure imaginary: sqrt(i q) = (1 + i)/2 * sqrt(2 q), and the
            // conjugate recipe for the negative ray.
            Const twice_q;
            twice_q.re = a.im * 2;
            twice_q.rad = a.rad_im * 2;
            twice_q.d = a.d;
            Const half_one_plus_i(Rat(1, 2), Rat(1, 2));
            std::vector<Const> inner;
            real_sqrt_candidates(inner, twice_q);
            for (const Const& t : inner) push_if_square(cands, a, half_one_plus_i * t);
            inner.clear();
            real_sqrt_candidates(inner, -twice_q);
            for (const Const& t : inner)
                push_if_square(cands, a, const_conj(half_one_plus_i) * t);
        }
        if (cands.empty() && !(a.re == 0 && a.rad == 0) && !a.is_gaussian()) {
        // Mixed complex + radical shapes: try w = u + v i with u, v in Q(sqrt(d)).
        // Reduce to the Gaussian recipe over the real subfield Q(sqrt(d)).
        Const p;
        p.re = a.re;
        p.rad = a.rad;
        p.d = a.d;
        Const q;
        q.re = a.im;
        q.rad = a.rad_im;
        q.d = a.d;
        Const N = p * p + q * q;
        std::vector<Const> ncands;
        if (N.is_real()) real_sqrt_candidates(ncands, N);
        for (const Const& n : ncands) {
            for (int sign = 0; sign < 2; ++sign) {
                Const t = (p + (sign ? -n : n)) / Const(2);
                std::vector<Const> ucands;
                if (t.is_real()) real_sqrt_candidates(ucands, t);
                for (const Const& u : ucands) {
                    if (u.is_zero()) continue;
                    Const v = q / (Const(2) * u);
                    Const w = u + const_i() * v;
                    push_if_square(cands, a, w);
                }
            }
        }
        }
    }
    if (cands.empty()) return std::nullopt;
    // Deterministic branch: prefer the candidate that is lexicographically
    // largest in (re, rad, im, rad_im), i.e. the "positive" root.
    Const best = cands[0];
    for (const Const& c : cands) {
        if (const_less(best, c)) best = c;
    }
    return best;
}

bool const_less(const Const& a, const Const& b) {
    if (a.re != b.re) return a.re < b.re;
    if (a.rad != b.rad) return a.rad < b.rad;
    if (a.im != b.im) return a.im < b.im;
    return a.rad_im < b.rad_im;
}

namespace {

void append_term(std::string& out, const Rat& coeff, const std::string& sym) {
    if (coeff == 0) return;
    bool neg = coeff < 0;
    Rat mag = neg ? Rat(-coeff) : coeff;
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (sym.empty()) {
        out += rat_to_string(mag);
    } else if (mag == 1) {
        out += sym;
    } else {
        out += rat_to_string(mag) + "*" + sym;
    }
}

}  // namespace

std::string const_to_string(const Const& c) {
    std::string out;
    std::string sd = c.d ? "sqrt(" + std::to_string(c.d) + ")" : "";
    append_term(out, c.re, "");
    append_term(out, c.im, "i");
    append_term(out, c.rad, sd);
    append_term(out, c.rad_im, "i*" + sd);
    if (out.empty()) out = "0";
    return out;
}

}  // namespace algspec
