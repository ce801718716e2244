#include "algspec/eigenring.hpp"

#include <stdexcept>

#include "algspec/linalg.hpp"

namespace algspec {

namespace {

int max_multiplicity(const PolyC& d) {
    int m = 0;
    for (const auto& [f, k] : poly_squarefree(d))
        if (f.degree() > 0) m = std::max(m, k);
    return m;
}

std::array<RatC, 4> induced_matrix(const Operator2& L, const RatC& a, const RatC& b) {
    RatC c = ratfunc_derivative(a) - b * L.q;
    RatC d = a + ratfunc_derivative(b) - b * L.p;
    return {a, b, c, d};
}

}  // namespace

CompanionSystem op_to_system(const Operator2& L) {
    return {{RatC(0), RatC(-1), L.q, L.p}};
}

bool eigenring_check(const Operator2& L, const EigenringElement& e) {
    CompanionSystem s = op_to_system(L);
    const auto& A = s.A;
    const auto& P = e.P;
    // dP - (PA - AP) entrywise.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            RatC pa, ap;
            for (int k = 0; k < 2; ++k) {
                pa += P[2 * i + k] * A[2 * k + j];
                ap += A[2 * i + k] * P[2 * k + j];
            }
            if (!(ratfunc_derivative(P[2 * i + j]) == pa - ap)) return false;
        }
    }
    return true;
}

EigenringBasis eigenring_compute(const Operator2& L, int degree_bound) {
    PolyC D = poly_monic(poly_lcm(L.p.den, L.q.den));
    int k = std::max(max_multiplicity(poly_monic(L.p.den)), max_multiplicity(poly_monic(L.q.den))) + 1;
    PolyC Dk = poly_pow(D, k);
    int N = std::max(degree_bound, Dk.degree());

    // Unknowns: numerator coefficients of a (N+1) then of b (N+1), over Dk.
    // Residual equations of dP = PA - AP in operator form:
    //   E1: 2a' + b'' - p b' - p' b = 0
    //   E2: a'' + p a' - 2 q b' - q' b = 0
    RatC pprime = ratfunc_derivative(L.p);
    RatC qprime = ratfunc_derivative(L.q);
    int cols = 2 * (N + 1);
    std::vector<RatC> e1(cols), e2(cols);
    for (int j = 0; j <= N; ++j) {
        RatC phi{PolyC::monomial(Const(1), j), Dk};
        RatC d1 = ratfunc_derivative(phi);
        RatC d2 = ratfunc_derivative(d1);
        e1[j] = RatC(2) * d1;
        e2[j] = d2 + L.p * d1;
        e1[N + 1 + j] = d2 - L.p * d1 - pprime * phi;
        e2[N + 1 + j] = RatC(-2) * L.q * d1 - qprime * phi;
    }

    auto stack_rows = [&](const std::vector<RatC>& eq, Matrix<Const>& M, int row0) {
        PolyC clear = PolyC::constant(Const(1));
        for (const RatC& g : eq) clear = poly_lcm(clear, g.den);
        std::vector<PolyC> cleared;
        int maxdeg = 0;
        RatC clear_r{clear, PolyC::constant(Const(1))};
        for (const RatC& g : eq) {
            RatC s = g * clear_r;
            if (s.den.degree() != 0) throw std::logic_error("eigenring clearing failed");
            PolyC n = s.num * const_inv(s.den.lc());
            maxdeg = std::max(maxdeg, n.degree());
            cleared.push_back(std::move(n));
        }
        for (int j = 0; j < cols; ++j)
            for (int t = 0; t <= cleared[j].degree(); ++t)
                M.at(row0 + t, j) = cleared[j].coeff(t);
        return maxdeg + 1;
    };

    // First pass to size the matrix, then fill.
    PolyC clear1 = PolyC::constant(Const(1)), clear2 = clear1;
    for (const RatC& g : e1) clear1 = poly_lcm(clear1, g.den);
    for (const RatC& g : e2) clear2 = poly_lcm(clear2, g.den);
    int h1 = 0, h2 = 0;
    {
        RatC c1{clear1, PolyC::constant(Const(1))}, c2{clear2, PolyC::constant(Const(1))};
        for (const RatC& g : e1) h1 = std::max(h1, (g * c1).num.degree() + 1);
        for (const RatC& g : e2) h2 = std::max(h2, (g * c2).num.degree() + 1);
    }
    Matrix<Const> M(h1 + h2, cols);
    stack_rows(e1, M, 0);
    stack_rows(e2, M, h1);

    EigenringBasis out;
    out.degree_bound = degree_bound;
    for (const auto& v : nullspace(M)) {
        PolyC An, Bn;
        An.c.assign(v.begin(), v.begin() + (N + 1));
        An.trim();
        Bn.c.assign(v.begin() + (N + 1), v.end());
        Bn.trim();
        EigenringElement e;
        e.a = RatC{An, Dk};
        e.b = RatC{Bn, Dk};
        e.P = induced_matrix(L, e.a, e.b);
        e.invertible = !(e.P[0] * e.P[3] - e.P[1] * e.P[2]).is_zero();
        if (!eigenring_check(L, e)) throw std::logic_error("eigenring element failed its equation");
        out.elements.push_back(std::move(e));
    }
    out.dim = static_cast<int>(out.elements.size());
    if (out.dim < 1 || out.dim > 4)
        throw std::logic_error("eigenring dimension outside 1..4: " + std::to_string(out.dim));
    return out;
}

bool eigenring_contains(const EigenringBasis& basis, const RatC& a, const RatC& b) {
    PolyC clear = poly_lcm(a.den, b.den);
    for (const auto& e : basis.elements) clear = poly_lcm(poly_lcm(clear, e.a.den), e.b.den);
    RatC cr{clear, PolyC::constant(Const(1))};
    auto as_poly = [&](const RatC& f) {
        RatC s = f * cr;
        if (s.den.degree() != 0) throw std::logic_error("containment clearing failed");
        return s.num * const_inv(s.den.lc());
    };
    int rows = 0;
    std::vector<std::pair<PolyC, PolyC>> cols;
    for (const auto& e : basis.elements) {
        cols.push_back({as_poly(e.a), as_poly(e.b)});
        rows = std::max(rows, std::max(cols.back().first.degree(), cols.back().second.degree()) + 1);
    }
    PolyC ta = as_poly(a), tb = as_poly(b);
    rows = std::max(rows, std::max(ta.degree(), tb.degree()) + 1);
    Matrix<Const> M(2 * rows, static_cast<int>(cols.size()));
    std::vector<Const> rhs(2 * static_cast<std::size_t>(rows), Const());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (int t = 0; t <= cols[j].first.degree(); ++t) M.at(t, static_cast<int>(j)) = cols[j].first.coeff(t);
        for (int t = 0; t <= cols[j].second.degree(); ++t)
            M.at(rows + t, static_cast<int>(j)) = cols[j].second.coeff(t);
    }
    for (int t = 0; t <= ta.degree(); ++t) rhs[t] = ta.coeff(t);
    for (int t = 0; t <= tb.degree(); ++t) rhs[static_cast<std::size_t>(rows) + t] = tb.coeff(t);
    return solve_linear(M, rhs).has_value();
}

OperatorPoly op_mul(const OperatorPoly& f, const OperatorPoly& g) {
    OperatorPoly out;
    OperatorPoly cur = g;  // D^i g, raised as i grows
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i].is_zero()) {
            if (out.size() < cur.size()) out.resize(cur.size(), RatC(0));
            for (std::size_t j = 0; j < cur.size(); ++j) out[j] += f[i] * cur[j];
        }
        if (i + 1 < f.size()) {
            OperatorPoly next(cur.size() + 1, RatC(0));
            for (std::size_t j = 0; j < cur.size(); ++j) {
                next[j + 1] += cur[j];
                next[j] += ratfunc_derivative(cur[j]);
            }
            cur = std::move(next);
        }
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

OperatorPoly op_mod(const OperatorPoly& f, const Operator2& L) {
    OperatorPoly r = f;
    while (r.size() > 2) {
        std::size_t n = r.size() - 1;
        RatC lead = r.back();
        if (lead.is_zero()) {
            r.pop_back();
            continue;
        }
        // subtract lead * D^(n-2) * (D^2 + p D + q)
        OperatorPoly shift(n - 2, RatC(0));
        shift.push_back(lead);
        OperatorPoly sub = op_mul(shift, {L.q, L.p, RatC(1)});
        if (sub.size() < r.size()) sub.resize(r.size(), RatC(0));
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] - sub[j];
        while (!r.empty() && r.back().is_zero()) r.pop_back();
    }
    return r;
}

GaloisHint galois_hint_from_dim(int dim, const KovacicResult& context) {
    GaloisHint h;
    const GroupInfo& g = context.group;
    switch (dim) {
        case 4: {
            h.note = "dimension 4: the group is the identity";
            h.consistent = (g.id == GroupId::Trivial);
            // All pairwise products of a rational basis stay rational.
            std::vector<const Hyperexp*> vals;
            for (const auto& s : context.solutions)
                if (s.value) vals.push_back(&*s.value);
            for (std::size_t i = 0; i < vals.size() && h.consistent; ++i)
                for (std::size_t j = i; j < vals.size(); ++j)
                    if (!hy_mul(*vals[i], *vals[j]).exp_free()) h.consistent = false;
            break;
        }
        case 2:
            h.note = "dimension 2: additive group or inside the multiplicative torus";
            h.consistent = (g.id == GroupId::Additive || g.id == GroupId::Torus ||
                            g.id == GroupId::CyclicN || g.upper_bound);
            break;
        case 1:
            h.note = "dimension 1: the operator is irreducible or indecomposable";
            h.consistent = (g.id != GroupId::Trivial);
            break;
        default:
            h.note = "dimension " + std::to_string(dim) + ": no classification rule";
            break;
    }
    return h;
}

}  // namespace algspec
