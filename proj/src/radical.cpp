#include "algspec/radical.hpp"

#include <algorithm>

namespace algspec {

RadicalNumber radical_sqrt(const Const& radicand, const Const& coeff) {
    RadicalNumber r;
    r.terms.push_back({radicand, coeff});
    return radical_reduce(r);
}

RadicalNumber radical_reduce(const RadicalNumber& r) {
    RadicalNumber out;
    out.base = r.base;
    std::vector<RadicalTerm> pending;
    // Folding a term into the base must never adjoin a fresh sqrt(d): terms
    // with different square-free radicands have to coexist side by side.
    auto foldable = [](const Const& radicand, const Const& s) {
        bool has_rad = s.rad != 0 || s.rad_im != 0;
        return !has_rad || radicand.d != 0;
    };
    for (RadicalTerm t : r.terms) {
        if (t.coeff.is_zero() || t.radicand.is_zero()) continue;
        if (auto s = const_sqrt(t.radicand); s && foldable(t.radicand, *s)) {
            out.base += t.coeff * *s;
            continue;
        }
        if (t.radicand.is_rational()) {
            Rat q = t.radicand.re;
            if (q < 0) {
                t.coeff *= const_i();
                q = -q;
            }
            // q = num/den -> sqrt(q) = sqrt(num*den)/den.
            Int n = rat_num(q) * rat_den(q);
            t.coeff = t.coeff * Const(Rat(1, rat_den(q)));
            SquareSplit sp = split_square(n);
            t.coeff *= Const(Rat(sp.square_root));
            t.radicand = Const(Rat(sp.free_part));
            if (auto s2 = const_sqrt(t.radicand); s2 && foldable(t.radicand, *s2)) {
                out.base += t.coeff * *s2;
                continue;
            }
        }
        pending.push_back(t);
    }
    std::sort(pending.begin(), pending.end(), [](const RadicalTerm& a, const RadicalTerm& b) {
        return const_less(a.radicand, b.radicand);
    });
    for (const RadicalTerm& t : pending) {
        if (!out.terms.empty() && out.terms.back().radicand == t.radicand) {
            out.terms.back().coeff += t.coeff;
        } else {
            out.terms.push_back(t);
        }
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [](const RadicalTerm& t) { return t.coeff.is_zero(); }),
                    out.terms.end());
    return out;
}

RadicalNumber operator+(const RadicalNumber& a, const RadicalNumber& b) {
    RadicalNumber r;
    r.base = a.base + b.base;
    r.terms = a.terms;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return radical_reduce(r);
}

RadicalNumber operator-(const RadicalNumber& a) {
    RadicalNumber r = a;
    r.base = -r.base;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

RadicalNumber operator-(const RadicalNumber& a, const RadicalNumber& b) { return a + (-b); }

RadicalNumber radical_scale(const RadicalNumber& a, const Const& k) {
    RadicalNumber r = a;
    r.base *= k;
    for (auto& t : r.terms) t.coeff *= k;
    return radical_reduce(r);
}

bool operator==(const RadicalNumber& a, const RadicalNumber& b) {
    RadicalNumber d = a - b;
    return d.base.is_zero() && d.terms.empty();
}

std::string radical_to_string(const RadicalNumber& r) {
    std::string out;
    if (!r.base.is_zero() || r.terms.empty()) out = const_to_string(r.base);
    for (const auto& t : r.terms) {
        std::string c = const_to_string(t.coeff);
        std::string body = "sqrt(" + const_to_string(t.radicand) + ")";
        if (c == "1") {
            // bare sqrt
        } else if (c == "-1") {
            body = "-" + body;
        } else if (c.find(' ') != std::string::npos) {
            body = "(" + c + ")*" + body;
        } else {
            body = c + "*" + body;
        }
        if (out.empty()) {
            out = body;
        } else if (!body.empty() && body[0] == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
    }
    return out;
}

}  // namespace algspec
