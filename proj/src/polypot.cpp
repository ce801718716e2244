#include "algspec/polypot.hpp"

#include <stdexcept>

namespace algspec {

SquareCompletion complete_square(const PolyC& q) {
    int deg = q.degree();
    if (deg < 0 || deg % 2 != 0) throw std::invalid_argument("degree must be even");
    if (!(q.c.back() == Const(1))) throw std::invalid_argument("polynomial must be monic");
    int n = deg / 2;
    PolyC a;
    a.c.assign(static_cast<std::size_t>(n) + 1, Const(0));
    a.c[n] = Const(1);
    // a_k from the x^(n+k) coefficient of q - a^2, highest slot first.
    for (int k = n - 1; k >= 0; --k) {
        PolyC a2 = a * a;
        Const want = (n + k <= q.degree()) ? q.c[n + k] : Const(0);
        Const have = (n + k <= a2.degree()) ? a2.c[n + k] : Const(0);
        a.c[k] = (want - have) / Const(2);
    }
    a.trim();
    SquareCompletion out;
    out.a = a;
    out.b = q - a * a;
    if (out.b.degree() >= n) throw std::logic_error("square completion left a tall remainder");
    return out;
}

PolyPotentialResult poly_potential_analyze(const PolyC& V, const Const& lambda) {
    PolyPotentialResult out;
    out.group.id = GroupId::SL2;
    if (V.degree() <= 0) {
        out.note = "constant potential; not analyzed here";
        return out;
    }
    if (V.degree() % 2 != 0) {
        out.note = "odd degree forces the full group";
        return out;
    }
    PolyC q = V;
    q.c[0] = q.c[0] - lambda;
    q.trim();
    if (!(q.c.back() == Const(1))) {
        out.note = "non-monic even potential; not analyzed here";
        return out;
    }
    int n = q.degree() / 2;
    SquareCompletion sc = complete_square(q);
    Const bn1 = (n - 1 <= sc.b.degree() && n >= 1) ? sc.b.c[n - 1] : Const(0);
    RatC rfull{q, PolyC::constant(Const(1))};
    for (int sgn : {+1, -1}) {
        Const t = Const(sgn) * bn1 - Const(n);
        if (!t.is_integer()) continue;
        Rat tv = t.re;
        if (tv < 0 || rat_num(tv) % 2 != 0) continue;
        long long m = static_cast<long long>(rat_num(tv).convert_to<long long>() / 2);
        RatC omega{sgn > 0 ? sc.a : PolyC() - sc.a, PolyC::constant(Const(1))};
        if (auto P = solve_recu1(rfull, omega, static_cast<int>(m))) {
            out.solvable = true;
            out.group.id = GroupId::Borel;
            out.group.evidence = "polynomial times an exponential of a polynomial integral";
            out.eigenfunctions.push_back(
                hy_make(RatC{*P, PolyC::constant(Const(1))}, omega));
        }
    }
    if (!out.solvable) out.note = "no polynomial eigenfunction branch";
    return out;
}

}  // namespace algspec
