#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algspec/factor.hpp"
#include "algspec/field.hpp"
#include "algspec/laurent.hpp"
#include "algspec/linalg.hpp"
#include "algspec/partialfrac.hpp"
#include "algspec/radical.hpp"

using namespace algspec;

namespace {

std::mt19937 rng(20240817u);

Rat small_rat() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rat(num(rng), den(rng));
}

PolyC random_poly(int max_deg) {
    std::uniform_int_distribution<int> d(0, max_deg);
    int deg = d(rng);
    PolyC p;
    p.c.assign(deg + 1, Const());
    for (int i = 0; i <= deg; ++i) p.c[i] = Const(small_rat());
    p.trim();
    return p;
}

}  // namespace

TEST_CASE("rational scalar helpers") {
    CHECK(rat_from_string("-3/6") == Rat(-1, 2));
    CHECK(rat_from_string("14") == Rat(14));
    CHECK_THROWS_AS(rat_from_string("2/0"), ParseError);
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_floor(Rat(-6, 2)) == -3);
    CHECK(int_sqrt_exact(Int(144)).value() == 12);
    CHECK(!int_sqrt_exact(Int(145)));
    CHECK(rat_sqrt_exact(Rat(9, 4)).value() == Rat(3, 2));
    CHECK(!rat_sqrt_exact(Rat(2)));
    auto sp = split_square(Int(72));
    CHECK(sp.square_root == 6);
    CHECK(sp.free_part == 2);
}

TEST_CASE("constant field arithmetic") {
    Const i = const_i();
    CHECK(i * i == Const(-1));
    Const s2 = const_sqrt_d(2);
    CHECK(s2 * s2 == Const(2));
    Const a = Const(Rat(3, 2)) + s2 * Const(Rat(1, 3)) + i;
    Const b = Const(Rat(-1, 5)) + i * s2;
    Const p = a * b;
    CHECK(p * const_inv(b) == a);
    CHECK(const_inv(a) * a == Const(1));
    CHECK(!a.is_rational());
    CHECK((a - a).is_zero());
    CHECK(const_conj(i) == -i);
}

TEST_CASE("constant square roots") {
    auto check_root = [](const Const& x) {
        auto w = const_sqrt(x);
        REQUIRE(w);
        CHECK(*w * *w == x);
    };
    CHECK(const_sqrt(Const(Rat(9, 4))).value() == Const(Rat(3, 2)));
    CHECK(const_sqrt(Const(-1)).value() == const_i());
    CHECK(const_sqrt(Const(-4)).value() == Const(0, 2));
    check_root(Const(2));                          // sqrt(2), adjoins d = 2
    check_root(Const(3) + const_sqrt_d(2) * 2);    // (1 + sqrt 2)^2
    check_root(Const(3, 4));                       // (2 + i)^2
    check_root(Const(-5, 12));                     // (2 + 3i)^2
    check_root(const_i());                         // needs d = 2
    check_root(const_i() * 7);
    CHECK(!const_sqrt(const_sqrt_d(5)));           // sqrt(sqrt 5) leaves the field
}

TEST_CASE("polynomial division, gcd, shift, squarefree") {
    for (int trial = 0; trial < 40; ++trial) {
        PolyC p = random_poly(6);
        PolyC d = random_poly(3);
        if (d.is_zero()) continue;
        auto [q, r] = poly_divmod(p, d);
        CHECK(q * d + r == p);
        CHECK(r.degree() < d.degree());
    }
    PolyC x = PolyC::x();
    PolyC g1 = (x - Const(1)) * (x - Const(2)) * (x - Const(2));
    PolyC g2 = (x - Const(2)) * (x - Const(3));
    CHECK(poly_gcd(g1, g2) == x - Const(2));

    PolyC p = random_poly(5);
    Const s(Rat(7, 3));
    PolyC shifted = poly_taylor_shift(p, s);
    Const at(Rat(-2, 5));
    CHECK(poly_eval(shifted, at) == poly_eval(p, at + s));

    PolyC f = (x - Const(1)) * (x - Const(1)) * (x + Const(3));
    auto parts = poly_squarefree(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == x + Const(3));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == x - Const(1));
    CHECK(parts[1].second == 2);
}

TEST_CASE("polynomial square root") {
    PolyC x = PolyC::x();
    PolyC s = (x * x + Const(1)) * Const(2);
    auto back = poly_sqrt(s * s, const_sqrt);
    REQUIRE(back);
    CHECK((*back == s || *back == -s));
    CHECK(!poly_sqrt(x * x + Const(1), const_sqrt));
    for (int trial = 0; trial < 20; ++trial) {
        PolyC p = random_poly(4);
        if (p.is_zero()) continue;
        auto r = poly_sqrt(p * p, const_sqrt);
        REQUIRE(r);
        CHECK(*r * *r == p * p);
    }
}

TEST_CASE("rational functions normalize and differentiate") {
    PolyC x = PolyC::x();
    RatC f{(x - Const(1)) * (x + Const(2)) * Const(3), (x - Const(1)) * Const(6)};
    CHECK(f.den.degree() == 0);  // common factor cancelled
    CHECK(f == RatC{(x + Const(2)), PolyC::constant(Const(2))});

    RatC g{PolyC::constant(Const(1)), x - Const(1)};
    RatC dg = ratfunc_derivative(g);
    CHECK(dg == -(g * g));

    RatC h = RatC(3) * g + RatC{x, x + Const(5)};
    RatC sum = ratfunc_derivative(RatC(3) * g) + ratfunc_derivative(RatC{x, x + Const(5)});
    CHECK(ratfunc_derivative(h) == sum);

    // Leibniz rule on random inputs.
    for (int trial = 0; trial < 25; ++trial) {
        PolyC a = random_poly(4), b = random_poly(3), c = random_poly(3), d = random_poly(2);
        if (b.is_zero() || d.is_zero()) continue;
        RatC u{a, b}, v{c, d};
        CHECK(ratfunc_derivative(u * v) ==
              ratfunc_derivative(u) * v + u * ratfunc_derivative(v));
    }
}

TEST_CASE("linear algebra over the constant field") {
    Matrix<Const> A(2, 2);
    A.at(0, 0) = Const(1);
    A.at(0, 1) = Const(2);
    A.at(1, 0) = Const(3);
    A.at(1, 1) = Const(4);
    auto sol = solve_linear(A, {Const(5), Const(6)});
    REQUIRE(sol);
    CHECK((*sol)[0] == Const(-4));
    CHECK((*sol)[1] == Const(Rat(9, 2)));

    Matrix<Const> B(2, 2);
    B.at(0, 0) = Const(1);
    B.at(0, 1) = Const(2);
    B.at(1, 0) = Const(2);
    B.at(1, 1) = Const(4);
    CHECK(!solve_linear(B, {Const(1), Const(3)}));
    auto ns = nullspace(B);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] * Const(1) + ns[0][1] * Const(2) == Const(0));
}

TEST_CASE("factorization over the closed constant field") {
    PolyC x = PolyC::x();
    auto roots = factor_over_field(x * x + Const(1));
    REQUIRE(roots.size() == 2);
    bool seen_i = false, seen_mi = false;
    for (auto& rm : roots) {
        if (rm.root == const_i()) seen_i = true;
        if (rm.root == -const_i()) seen_mi = true;
    }
    CHECK(seen_i);
    CHECK(seen_mi);

    auto r2 = factor_over_field(x * x - Const(2));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].root * r2[0].root == Const(2));

    PolyC planted = (x - Const(1)) * (x - Const(1)) * (x - Const(1)) * (x + Const(2));
    auto rm = factor_over_field(planted);
    REQUIRE(rm.size() == 2);
    for (auto& e : rm) {
        if (e.root == Const(1)) CHECK(e.mult == 3);
        if (e.root == Const(-2)) CHECK(e.mult == 1);
    }

    // Gaussian and half-integer roots.
    PolyC g = (x - Const(1, 2)) * (x + Const(1, 2)) * (x - Const(Rat(1, 2)));
    auto gr = factor_over_field(g);
    CHECK(gr.size() == 3);

    PolyC hard = x * x * x * x * x - x - Const(1);
    CHECK_THROWS_AS(factor_over_field(hard), IrreducibleResidual);
    auto part = factor_partial(hard);
    CHECK(part.roots.empty());
    CHECK(part.remainder == poly_monic(hard));
}

TEST_CASE("partial fractions round trip") {
    PolyC x = PolyC::x();
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> mult(1, 3);
    const Const locs[3] = {Const(0), Const(1), Const(-2)};
    for (int trial = 0; trial < 50; ++trial) {
        PolyC den = PolyC::constant(Const(1));
        for (int j = 0; j < 3; ++j) {
            if (pick(rng) == 0) continue;
            int m = mult(rng);
            PolyC lin = x - locs[j];
            for (int k = 0; k < m; ++k) den = den * lin;
        }
        if (den.degree() == 0) continue;
        PolyC num = random_poly(den.degree() + 2);
        if (num.is_zero()) continue;
        RatC f{num, den};
        auto pf = partial_fractions(f);
        CHECK(partial_fractions_sum(pf) == f);
        for (const auto& pole : pf.poles) CHECK(!pole.coeffs.empty());
    }
    // Known expansion: 1/(x^2 (x-1)) = -1/x - 1/x^2 + 1/(x-1).
    RatC f{PolyC::constant(Const(1)), x * x * (x - Const(1))};
    auto pf = partial_fractions(f);
    CHECK(pf.poly_part.is_zero());
    REQUIRE(pf.poles.size() == 2);
    CHECK(pf_coeff(pf, Const(0), 1) == Const(-1));
    CHECK(pf_coeff(pf, Const(0), 2) == Const(-1));
    CHECK(pf_coeff(pf, Const(1), 1) == Const(1));
}

TEST_CASE("series extraction at poles and infinity") {
    PolyC x = PolyC::x();
    // g = 3/(x-1)^3 + 5/(x-1) + x^2.
    RatC g = RatC{PolyC::constant(Const(3)), (x - Const(1)) * (x - Const(1)) * (x - Const(1))} +
             RatC{PolyC::constant(Const(5)), x - Const(1)} + RatC{x * x, PolyC::constant(Const(1))};
    CHECK(coefficient_at_pole(g, Const(1), 3) == Const(3));
    CHECK(coefficient_at_pole(g, Const(1), 2) == Const(0));
    CHECK(coefficient_at_pole(g, Const(1), 1) == Const(5));
    CHECK(coefficient_at_infinity(RatC{x * x * Const(4) + x, PolyC::constant(Const(1))}, 2) ==
          Const(4));
    CHECK(coefficient_at_infinity(RatC{PolyC::constant(Const(7)), x}, -1) == Const(7));

    // r = 1/x^4 + 13/x^3 + 9/x^2 + 1/x: the principal square root at 0 keeps
    // only the 1/x^2 term, and b picks up the 13.
    RatC S{PolyC::constant(Const(1)), x * x};
    RatC r = S * S + RatC{PolyC::constant(Const(13)), x * x * x} +
             RatC{PolyC::constant(Const(9)), x * x} + RatC{PolyC::constant(Const(1)), x};
    auto sq = sqrt_principal_at_pole(r, Const(0));
    REQUIRE(sq);
    CHECK((sq->principal == S || sq->principal == -S));
    CHECK(sq->v == 2);
    CHECK((sq->a == Const(1) || sq->a == Const(-1)));
    CHECK(sq->b * const_inv(sq->a) == Const(13));  // coefficient of x^-3 in r - S^2, relative sign

    // At infinity: p = x^2 + 2x, r = p^2 + 5x.
    PolyC p = x * x + x * Const(2);
    RatC rp = RatC{p * p + x * Const(5), PolyC::constant(Const(1))};
    auto si = sqrt_principal_at_infinity(rp);
    REQUIRE(si);
    CHECK((si->p == p || si->p == -p));
    CHECK(si->v == 2);
    CHECK(si->b == Const(5));  // coefficient of x^(v-1) in r - p^2
}

TEST_CASE("radical numbers reduce canonically") {
    RadicalNumber a = radical_sqrt(Const(8), Const(1));
    REQUIRE(a.terms.size() == 1);
    CHECK(a.terms[0].coeff == Const(2));
    CHECK(a.terms[0].radicand == 2);

    RadicalNumber b = radical_sqrt(Const(Rat(9, 4)), Const(1));
    CHECK(b.is_radical_free());
    CHECK(b.base == Const(Rat(3, 2)));

    RadicalNumber c = radical_sqrt(Const(-4), Const(1));
    CHECK(c.is_radical_free());
    CHECK(c.base == const_i() * 2);

    RadicalNumber d = radical_sqrt(Const(12), Const(1)) + radical_sqrt(Const(27), Const(1));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coeff == Const(5));
    CHECK(d.terms[0].radicand == 3);

    RadicalNumber e = radical_sqrt(Const(3), Const(1)) - radical_sqrt(Const(3), Const(1));
    CHECK(e.is_radical_free());
    CHECK(e.base.is_zero());
    CHECK(e.is_integer());
    CHECK(e.is_nonneg_integer());

    RadicalNumber half = radical_sqrt(Const(Rat(1, 4)), Const(1));
    CHECK(half.base == Const(Rat(1, 2)));
}

TEST_CASE("parameter substitution") {
    // f(lambda) = (lambda^2 - 1) x / (x - lambda) evaluated at lambda = 2.
    PolyP xP;
    xP.c = {ParamF(0), ParamF(1)};
    ParamF lam{Poly<Const>::x(), Poly<Const>::constant(Const(1))};
    PolyP num;
    num.c = {ParamF(0), lam * lam - ParamF(1)};
    PolyP den;
    den.c = {ParamF(0) - lam, ParamF(1)};
    RatP f{num, den};
    RatC at2 = param_substitute(f, Const(2));
    PolyC x = PolyC::x();
    CHECK(at2 == RatC{x * Const(3), x - Const(2)});
}
