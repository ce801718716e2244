#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algspec/galois.hpp"
#include "algspec/kovacic.hpp"

using namespace algspec;

namespace {

RatC rx() { return RatC{PolyC::x(), PolyC::constant(Const(1))}; }

RatC rat(long long n, long long d = 1) {
    return RatC{PolyC::constant(Const(Rat(n, d))), PolyC::constant(Const(1))};
}

// 1/(x - c)^k
RatC pole_term(const Const& c, int k, const Rat& coeff) {
    PolyC lin;
    lin.c = {-c, Const(1)};
    return RatC{PolyC::constant(Const(coeff)), poly_pow(lin, k)};
}

bool has_kind(const KovacicResult& res, SolutionKind k) {
    for (const auto& s : res.solutions)
        if (s.kind == k) return true;
    return false;
}

}  // namespace

TEST_CASE("zero potential gives the trivial group") {
    auto res = kovacic_solve(RatC(0));
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 2);
    CHECK(res.group.id == GroupId::Trivial);
    CHECK(group_to_string(res.group) == "e");
}

TEST_CASE("normal form reduction") {
    // y'' + a y' + b y = 0 with a = 2x, b = x^2 + 1: r = a^2/4 + a'/2 - b = 0.
    auto nf = reduce_normal_form(RatC(2) * rx(), rx() * rx() + rat(1));
    CHECK(nf.r.is_zero());
    CHECK(!nf.strong);  // the conjugation factor exp(-x^2/2) is not rational
    // a = 2/x: kappa = 1/x is rational, so the reduction is strong.
    auto nf2 = reduce_normal_form(RatC(2) / rx(), RatC(0));
    CHECK(nf2.strong);
}

TEST_CASE("gauge r = 2/x^2 has a rational basis") {
    auto res = kovacic_solve(rat(2) / (rx() * rx()));
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 2);
    CHECK(res.solutions[0].kind == SolutionKind::Rational);
    CHECK(res.solutions[1].kind == SolutionKind::Rational);
    CHECK(res.group.id == GroupId::Trivial);
}

TEST_CASE("harmonic well at its ground eigenvalue") {
    // r = x^2 - 1: zeta = exp(-x^2/2), second solution not hyperexponential.
    RatC r = rx() * rx() - rat(1);
    auto res = kovacic_solve(r);
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].kind == SolutionKind::Hyperexponential);
    const Hyperexp& h = *res.solutions[0].value;
    CHECK(hy_logderiv(h) == -rx());
    CHECK(res.group.id == GroupId::Borel);
    CHECK(ode_check(h, r));
}

TEST_CASE("harmonic well first excited eigenvalue") {
    // r = x^2 - 3: zeta = x exp(-x^2/2).
    RatC r = rx() * rx() - rat(3);
    auto res = kovacic_solve(r);
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 1);
    CHECK(hy_logderiv(*res.solutions[0].value) == RatC(1) / rx() - rx());
}

TEST_CASE("constant coefficient equation splits as a torus") {
    // r = 1: basis {exp(x), exp(-x)}.
    auto res = kovacic_solve(rat(1));
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 2);
    CHECK(res.solutions[0].kind == SolutionKind::Hyperexponential);
    CHECK(res.solutions[1].kind == SolutionKind::Hyperexponential);
    CHECK(res.group.id == GroupId::Torus);
    CHECK(group_to_string(res.group) == "G_m");
}

TEST_CASE("algebraic pair of fourth order") {
    // r = -3/(16 x^2): basis {x^(1/4), x^(3/4)}, cyclic of order 4.
    RatC r = pole_term(Const(0), 2, Rat(-3, 16));
    auto res = kovacic_solve(r);
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 2);
    CHECK(res.solutions[0].kind == SolutionKind::AlgebraicPower);
    CHECK(res.solutions[1].kind == SolutionKind::AlgebraicPower);
    CHECK(res.group.id == GroupId::CyclicN);
    CHECK(res.group.n == 4);
    CHECK(group_to_string(res.group) == "G^[4]");
}

TEST_CASE("single algebraic solution gives the metacyclic extension") {
    // omega = x/(2(x^2-1)), zeta = (x^2-1)^(1/4); the companion solution
    // involves an inverse hyperbolic integral and stays outside the field.
    RatC omega = rx() / (RatC(2) * (rx() * rx() - rat(1)));
    RatC r = ratfunc_derivative(omega) + omega * omega;
    auto res = kovacic_solve(r);
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].kind == SolutionKind::AlgebraicPower);
    CHECK(res.solutions[0].algebraic_order == 4);
    CHECK(res.group.id == GroupId::MetacyclicN);
    CHECK(res.group.n == 4);
    CHECK(group_to_string(res.group) == "G^{4}");
}

TEST_CASE("rational plus logarithmic second solution") {
    // zeta_1 = x(x-1), r = 2/(x(x-1)): reduction of order brings in logs.
    RatC r = rat(2) / (rx() * (rx() - rat(1)));
    auto res = kovacic_solve(r);
    CHECK(res.case_used == 1);
    REQUIRE(res.solutions.size() == 2);
    CHECK(res.solutions[0].kind == SolutionKind::Rational);
    CHECK(has_kind(res, SolutionKind::LogSecond));
    CHECK(res.group.id == GroupId::Additive);
    CHECK(group_to_string(res.group) == "G_a");
    const Solution& logsol = res.solutions[1];
    REQUIRE(logsol.log_part);
    CHECK(logsol.log_part->logs.size() == 2);
}

TEST_CASE("airy-type equation is unsolvable") {
    auto res = kovacic_solve(rx());
    CHECK(res.case_used == 4);
    CHECK(res.solutions.empty());
    CHECK(res.group.id == GroupId::SL2);
    CHECK(group_to_string(res.group) == "SL2");
    CHECK(!group_virtually_solvable(res.group));
}

TEST_CASE("dihedral equation through the quadratic branch") {
    // omega = sqrt(x) - 1/(4x) satisfies the Riccati equation for
    // r = x + 5/(16 x^2); no hyperexponential solution exists.
    RatC r = rx() + pole_term(Const(0), 2, Rat(5, 16));
    auto res = kovacic_solve(r);
    CHECK(res.case_used == 2);
    REQUIRE(res.solutions.size() == 1);
    const Solution& s = res.solutions[0];
    CHECK(s.kind == SolutionKind::AlgebraicOmega);
    REQUIRE(s.omega_minpoly.size() == 3);
    // omega^2 + 1/(2x) omega + 1/(16x^2) - x = 0.
    CHECK(s.omega_minpoly[1] == RatC(1) / (RatC(2) * rx()));
    CHECK(s.omega_minpoly[0] == pole_term(Const(0), 2, Rat(1, 16)) - rx());
    CHECK(riccati_check_algebraic(s.omega_minpoly, r));
    CHECK(res.group.id == GroupId::DihedralInf);
    CHECK(res.group.upper_bound);
}

TEST_CASE("tetrahedral equation through the cubic resolvent") {
    // Exponent differences 1/2, 1/3, 1/3 at 0, 1, infinity.
    RatC r = pole_term(Const(0), 2, Rat(-3, 16)) + pole_term(Const(1), 2, Rat(-2, 9)) +
             rat(3, 16) / (rx() * (rx() - rat(1)));
    PoleAnalysis pa = analyze_poles(r);
    CHECK(pa.case1_admissible);
    CHECK(pa.case2_admissible);
    CHECK(pa.case3_admissible);

    auto res = kovacic_solve(r);
    CHECK(res.case_used == 3);
    REQUIRE(res.solutions.size() == 1);
    const Solution& s = res.solutions[0];
    CHECK(s.kind == SolutionKind::AlgebraicOmega);
    CHECK(s.algebraic_order == 4);
    CHECK(s.omega_minpoly.size() == 5);
    CHECK(riccati_check_algebraic(s.omega_minpoly, r));
    CHECK(res.group.id == GroupId::Tetrahedral);
    CHECK(group_to_string(res.group) == "A4");
    CHECK(group_virtually_solvable(res.group));
    CHECK(group_finite_primitive(res.group));
}

TEST_CASE("pole analysis fills the recursion data") {
    RatC r = rx() + pole_term(Const(0), 2, Rat(5, 16));
    PoleAnalysis pa = analyze_poles(r);
    REQUIRE(pa.poles.size() == 1);
    CHECK(pa.poles[0].order == 2);
    CHECK(pa.poles[0].b == Const(Rat(5, 16)));
    CHECK(!pa.case1_admissible);  // odd order at infinity
    CHECK(pa.case2_admissible);
    CHECK(!pa.case3_admissible);
    REQUIRE(pa.e2.size() == 1);
    // E_0 = {2, -1, 5}, E_inf = {-1}.
    std::vector<int> e0 = pa.e2[0];
    std::sort(e0.begin(), e0.end());
    CHECK(e0 == std::vector<int>{-1, 2, 5});
    CHECK(pa.e2_inf == std::vector<int>{-1});
}

TEST_CASE("verification helpers reject wrong answers") {
    RatC r = rx() * rx() - rat(1);
    CHECK(riccati_check(-rx(), r));
    CHECK(!riccati_check(rx() * rx(), r));
    Hyperexp good = hy_make(RatC(1), -rx());
    CHECK(ode_check(good, r));
    CHECK(!ode_check(good, rx()));
}
