#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algspec/field.hpp"
#include "algspec/kovacic.hpp"
#include "algspec/susy.hpp"

using namespace algspec;

namespace {

RatC rx() { return RatC::x(); }

// c / x^k
RatC inv_xk(long long c, int k) {
    return RatC(PolyC::constant(Const(c)), PolyC::monomial(Const(1), k));
}

RatC family_at(const std::vector<RatC>& wf, const Const& a) {
    RatC w;
    Const ak(1);
    for (const RatC& c : wf) {
        w += c * RatC(ak);
        ak = ak * a;
    }
    return w;
}

// V_plus(x; a0) - V_minus(x; a1) must be x-free and equal R(a1)
void check_shape_identity(const ShapeInvarianceReport& rep, const Const& a0,
                          const RatC& sqrt_alpha = RatC(1)) {
    Const a1 = rep.p * a0 + rep.q;
    RatC w0 = family_at(rep.family, a0);
    RatC w1 = family_at(rep.family, a1);
    RatC diff = (w0 * w0 + sqrt_alpha * ratfunc_derivative(w0)) -
                (w1 * w1 - sqrt_alpha * ratfunc_derivative(w1));
    REQUIRE(diff.is_constant());
    CHECK(diff.constant_value() == poly_eval(rep.r_next, a1));
}

long long const_to_ll(const Const& c) { return rat_num(c.re).convert_to<long long>(); }

}  // namespace

TEST_CASE("eigenfunction check is exact substitution") {
    CHECK(is_eigenfunction(RatC(0), hy_rational(rx()), Const(0)));
    CHECK(is_eigenfunction(RatC(0), hy_make(RatC(1), RatC(1)), Const(-1)));
    CHECK(is_eigenfunction(inv_xk(2, 2), hy_rational(rx() * rx()), Const(0)));
    CHECK_FALSE(is_eigenfunction(RatC(0), hy_rational(rx() * rx()), Const(0)));
    CHECK_FALSE(is_eigenfunction(RatC(0), Hyperexp{RatC(0), RatC(0)}, Const(0)));
}

TEST_CASE("hyperexponential derivative and log derivative") {
    Hyperexp gauss = hy_make(RatC(1), -rx());
    Hyperexp d = hy_derivative(gauss);
    CHECK(d.R == -rx());
    CHECK(d.omega == -rx());

    // integer residue of 2/x folds into the prefactor, so the value is x^3
    Hyperexp h = hy_make(rx(), inv_xk(2, 1));
    CHECK(hy_logderiv(h) == inv_xk(3, 1));

    Hyperexp a = hy_make(rx(), RatC(1));
    Hyperexp b = hy_make(rx() + RatC(1), RatC(-1));
    Hyperexp ab = hy_mul(a, b);
    CHECK(ab.R == rx() * (rx() + RatC(1)));
    CHECK(ab.omega.is_zero());
}

TEST_CASE("superpotential from a seed eigenfunction") {
    Superpotential s1 = superpotential_from_seed(RatC(0), hy_rational(rx()), Const(0));
    CHECK(s1.W == inv_xk(-1, 1));

    Superpotential s2 =
        superpotential_from_seed(rx() * rx() - RatC(1), hy_make(RatC(1), -rx()), Const(0));
    CHECK(s2.W == rx());

    Superpotential s3 = superpotential_from_seed(inv_xk(2, 2), hy_rational(rx() * rx()), Const(0));
    CHECK(s3.W == inv_xk(-2, 1));

    CHECK_THROWS_AS(superpotential_from_seed(RatC(0), hy_rational(rx() * rx()), Const(0)),
                    SeedNotEigenfunction);
}

TEST_CASE("partner potentials from a superpotential") {
    PartnerPair p = partner_potentials(rx(), Const(0));
    CHECK(p.v_minus == rx() * rx() - RatC(1));
    CHECK(p.v_plus == rx() * rx() + RatC(1));

    // radial oscillator at angular momentum one
    PartnerPair r = partner_potentials(rx() - inv_xk(2, 1), Const(0));
    CHECK(r.v_minus == rx() * rx() + inv_xk(2, 2) - RatC(5));
    CHECK(r.v_plus == rx() * rx() + inv_xk(6, 2) - RatC(3));

    PartnerPair z = partner_potentials(RatC(0), Const(0));
    CHECK(z.v_minus.is_zero());
    CHECK(z.v_plus.is_zero());

    RatC w = rx() * rx() * rx() + inv_xk(1, 1);
    Const lam(7);
    CHECK(partner_potentials(w, lam).v_plus == partner_potentials(-w, lam).v_minus);
    RatC mid = (partner_potentials(w, lam).v_plus + partner_potentials(w, lam).v_minus) / RatC(2);
    CHECK(mid - RatC(lam) == w * w);
}

TEST_CASE("darboux transform of the free potential") {
    DarbouxResult d = darboux_transform(RatC(0), hy_rational(rx()), Const(0));
    CHECK(d.v_plus == inv_xk(2, 2));
    CHECK(d.seed_image.R == inv_xk(1, 1));
    CHECK(d.seed_image.omega.is_zero());

    Hyperexp mapped = d.map(hy_make(RatC(1), RatC(1)));
    CHECK(mapped.R == (rx() - RatC(1)) / rx());
    CHECK(mapped.omega == RatC(1));
    CHECK(is_eigenfunction(d.v_plus, mapped, Const(-1)));

    DarbouxResult c = darboux_transform(RatC(0), hy_rational(RatC(1)), Const(0));
    CHECK(c.v_plus.is_zero());

    DarbouxResult g = darboux_transform(rx() * rx() - RatC(1), hy_make(RatC(1), -rx()), Const(0));
    CHECK(g.v_plus == rx() * rx() + RatC(1));

    CHECK_THROWS_AS(darboux_transform(RatC(0), hy_rational(rx() * rx()), Const(0)),
                    SeedNotEigenfunction);
}

TEST_CASE("darboux transform of the singular well") {
    RatC V = inv_xk(2, 2);
    Hyperexp s1 = hy_make((rx() + RatC(1)) / rx(), RatC(-1));
    Hyperexp s4 = hy_make((rx() * RatC(2) + RatC(1)) / (rx() * RatC(2)), RatC(-2));
    REQUIRE(is_eigenfunction(V, s1, Const(-1)));
    REQUIRE(is_eigenfunction(V, s4, Const(-4)));

    DarbouxResult d = darboux_transform(V, s1, Const(-1));
    RatC xp1 = rx() + RatC(1);
    CHECK(d.v_plus == RatC(2) / (xp1 * xp1));

    Hyperexp m = d.map(s4);
    CHECK(is_eigenfunction(d.v_plus, m, Const(-4)));
    CHECK(d.map(s1).R.is_zero());
}

TEST_CASE("wronskians of hyperexponentials") {
    Hyperexp one = hy_rational(RatC(1));
    Hyperexp x = hy_rational(rx());
    Hyperexp w1 = wronskian_hyperexp({one, x});
    CHECK(w1.R == RatC(1));
    CHECK(w1.omega.is_zero());

    Hyperexp ep = hy_make(RatC(1), RatC(1));
    Hyperexp em = hy_make(RatC(1), RatC(-1));
    Hyperexp w2 = wronskian_hyperexp({ep, em});
    CHECK(w2.R == RatC(-2));
    CHECK(w2.omega.is_zero());

    // proportional entries give the zero value
    Hyperexp w3 = wronskian_hyperexp({x, hy_rational(rx() * RatC(2))});
    CHECK(w3.R.is_zero());
}

TEST_CASE("algebrized wronskian carries explicit square root factors") {
    RatC alpha = RatC(1) - rx() * rx();
    Hyperexp t1 = hy_rational(rx());
    Hyperexp t2 = hy_rational(rx() * rx() * RatC(2) - RatC(1));

    HyperexpAlg neg = wronskian_hyperexp_z({t1, t2}, alpha, -1);
    CHECK(neg.h.R == -(rx() * rx() * RatC(2) + RatC(1)));
    CHECK(neg.h.omega.is_zero());
    CHECK(neg.sqrt_alpha_pow == 1);

    HyperexpAlg pos = wronskian_hyperexp_z({t1, t2}, alpha, 1);
    CHECK(pos.h.R == rx() * rx() * RatC(2) + RatC(1));

    // three columns: one full alpha folds in, one square root stays explicit
    HyperexpAlg trip = wronskian_hyperexp_z({hy_rational(RatC(1)), t1, hy_rational(rx() * rx())},
                                            alpha, 1);
    CHECK(trip.h.R == RatC(2) * alpha);
    CHECK(trip.sqrt_alpha_pow == 1);
}

TEST_CASE("crum iteration on two levels of the singular well") {
    RatC V = inv_xk(2, 2);
    Hyperexp s1 = hy_make((rx() + RatC(1)) / rx(), RatC(-1));
    Hyperexp s4 = hy_make((rx() * RatC(2) + RatC(1)) / (rx() * RatC(2)), RatC(-2));

    Hyperexp w = wronskian_hyperexp({s1, s4});
    CHECK(w.R == -(rx() * RatC(2) + RatC(3)) / (rx() * RatC(2)));
    CHECK(w.omega == RatC(-3));

    CrumResult cr = crum_iterate(V, {{s1, Const(-1)}, {s4, Const(-4)}});
    RatC den = rx() * RatC(2) + RatC(3);
    CHECK(cr.v_n == RatC(8) / (den * den));

    // one seed collapses to the plain transform
    CrumResult single = crum_iterate(V, {{s1, Const(-1)}});
    CHECK(single.v_n == darboux_transform(V, s1, Const(-1)).v_plus);

    CHECK_THROWS_AS(crum_iterate(V, {{s1, Const(-1)}, {s1, Const(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(crum_iterate(V, {{hy_rational(rx()), Const(0)}}), SeedNotEigenfunction);
}

TEST_CASE("crum map sends solutions to partner solutions") {
    RatC V = inv_xk(2, 2);
    Hyperexp s1 = hy_make((rx() + RatC(1)) / rx(), RatC(-1));
    Hyperexp s4 = hy_make((rx() * RatC(2) + RatC(1)) / (rx() * RatC(2)), RatC(-2));
    CrumResult cr = crum_iterate(V, {{s1, Const(-1)}, {s4, Const(-4)}});

    // both branches at level -9
    Hyperexp u3 = hy_make((rx() * RatC(3) - RatC(1)) / (rx() * RatC(3)), RatC(3));
    Hyperexp um3 = hy_make((rx() * RatC(3) + RatC(1)) / (rx() * RatC(3)), RatC(-3));
    REQUIRE(is_eigenfunction(V, u3, Const(-9)));
    REQUIRE(is_eigenfunction(V, um3, Const(-9)));

    Hyperexp m3 = cr.map(u3);
    CHECK(m3.R == (rx() * RatC(120) + RatC(140)) / (rx() * RatC(6) + RatC(9)));
    CHECK(m3.omega == RatC(3));
    CHECK(is_eigenfunction(cr.v_n, m3, Const(-9)));
    CHECK(hy_equal_up_to_scalar(m3, hy_make((rx() * RatC(6) + RatC(7)) / (rx() * RatC(2) + RatC(3)), RatC(3))));

    Hyperexp mm3 = cr.map(um3);
    CHECK(is_eigenfunction(cr.v_n, mm3, Const(-9)));
    CHECK(hy_equal_up_to_scalar(mm3,
                                hy_make((rx() * RatC(6) + RatC(11)) / (rx() * RatC(2) + RatC(3)), RatC(-3))));

    // seeds lie in the kernel
    CHECK(cr.map(s1).R.is_zero());
    CHECK(cr.map(s4).R.is_zero());

    // two single steps compose to the double step
    DarbouxResult d1 = darboux_transform(V, s1, Const(-1));
    Hyperexp s4p = d1.map(s4);
    REQUIRE(is_eigenfunction(d1.v_plus, s4p, Const(-4)));
    DarbouxResult d2 = darboux_transform(d1.v_plus, s4p, Const(-4));
    CHECK(d2.v_plus == cr.v_n);
}

TEST_CASE("shape invariance of the radial oscillator family") {
    std::vector<RatC> wf = {rx() - inv_xk(1, 1), inv_xk(-1, 1)};
    ShapeInvarianceReport rep = shape_invariance_check(wf);
    REQUIRE(rep.holds);
    CHECK(rep.p == Const(1));
    CHECK(rep.q == Const(1));
    CHECK(rep.r_next.degree() == 0);
    CHECK(rep.r_next.coeff(0) == Const(4));
    CHECK(rep.energy_formula == "4*n");
    CHECK(shape_param(rep, Const(1), 3) == Const(4));
    CHECK(shape_energy(rep, Const(0), 3) == Const(12));
    for (long long a0 : {0, 1, 5}) check_shape_identity(rep, Const(a0));
}

TEST_CASE("shape invariance of the harmonic family") {
    ShapeInvarianceReport rep = shape_invariance_check({RatC(0), rx()});
    REQUIRE(rep.holds);
    CHECK(rep.p == Const(1));
    CHECK(rep.q.is_zero());
    CHECK(rep.r_next.degree() == 1);
    CHECK(rep.r_next.coeff(1) == Const(2));
    CHECK(rep.r_next.coeff(0).is_zero());
    CHECK(rep.energy_formula == "2*a0*n");
    CHECK(shape_energy(rep, Const(3), 2) == Const(12));
    check_shape_identity(rep, Const(2));
}

TEST_CASE("shape invariance of the hyperbolic well") {
    RatC sa = RatC(1) - rx() * rx();
    ShapeInvarianceReport rep = shape_invariance_check({RatC(0), rx()}, sa);
    REQUIRE(rep.holds);
    CHECK(rep.p == Const(1));
    CHECK(rep.q == Const(-1));
    CHECK(rep.r_next.degree() == 1);
    CHECK(rep.r_next.coeff(0) == Const(1));
    CHECK(rep.r_next.coeff(1) == Const(2));
    CHECK(rep.energy_formula == "2*a0*n - n^2");
    CHECK(shape_param(rep, Const(5), 2) == Const(3));
    CHECK(shape_energy(rep, Const(3), 2) == Const(8));
    for (long long a0 : {2, 4}) check_shape_identity(rep, Const(a0), sa);
}

TEST_CASE("shape invariance fails without an affine parameter map") {
    ShapeInvarianceReport rep = shape_invariance_check({rx(), rx() * rx()});
    CHECK_FALSE(rep.holds);
    CHECK(rep.note.find("Du_2") != std::string::npos);
}

TEST_CASE("ladder construction for the harmonic family") {
    ShapeInvarianceReport rep = shape_invariance_check({RatC(0), rx()});
    REQUIRE(rep.holds);
    auto psi0 = [](const Const& a) { return hy_make(RatC(1), -rx() * RatC(a)); };

    SpectrumLevel l0 = gendenshtein_spectrum(rep, psi0, Const(1), 0);
    CHECK(l0.energy.is_zero());
    CHECK(l0.psi.R == RatC(1));
    CHECK(l0.psi.omega == -rx());

    SpectrumLevel l2 = gendenshtein_spectrum(rep, psi0, Const(1), 2);
    CHECK(l2.energy == Const(4));
    CHECK(l2.psi.R == RatC(poly_from_ints({-2, 0, 4})));
    CHECK(l2.psi.omega == -rx());
    RatC vm = partner_potentials(rx(), Const(0)).v_minus;
    CHECK(is_eigenfunction(vm, l2.psi, Const(4)));
}

TEST_CASE("ladder construction for the radial oscillator") {
    std::vector<RatC> wf = {rx() - inv_xk(1, 1), inv_xk(-1, 1)};
    ShapeInvarianceReport rep = shape_invariance_check(wf);
    REQUIRE(rep.holds);
    auto psi0 = [](const Const& a) {
        int e = static_cast<int>(const_to_ll(a)) + 1;
        return hy_make(RatC(PolyC::monomial(Const(1), e)), -rx());
    };

    SpectrumLevel l0 = gendenshtein_spectrum(rep, psi0, Const(1), 0);
    CHECK(l0.energy.is_zero());
    CHECK(l0.psi.R == RatC(PolyC::monomial(Const(1), 2)));

    SpectrumLevel l1 = gendenshtein_spectrum(rep, psi0, Const(1), 1);
    CHECK(l1.energy == Const(4));
    CHECK(l1.psi.R == RatC(poly_from_ints({0, 0, -5, 0, 2})));
    RatC vm = partner_potentials(rx() - inv_xk(2, 1), Const(0)).v_minus;
    CHECK(is_eigenfunction(vm, l1.psi, Const(4)));

    ShapeInvarianceReport bad;
    CHECK_THROWS_AS(gendenshtein_spectrum(bad, psi0, Const(1), 1), std::invalid_argument);
}

TEST_CASE("bound state heuristic sorts decay patterns") {
    CHECK(bound_state_heuristic(hy_make(RatC(1), -rx()), Domain::line) ==
          BoundVerdict::candidate_bound);
    CHECK(bound_state_heuristic(hy_make(RatC(1), rx()), Domain::line) == BoundVerdict::not_bound);
    CHECK(bound_state_heuristic(hy_make(RatC(1), rx() * rx()), Domain::line) ==
          BoundVerdict::not_bound);
    CHECK(bound_state_heuristic(hy_rational(rx()), Domain::line) == BoundVerdict::inconclusive);
    CHECK(bound_state_heuristic(hy_make(RatC(1), rx() * RatC(const_i())), Domain::line) ==
          BoundVerdict::inconclusive);

    // radial ground state r^2 e^{-r^2/2}
    CHECK(bound_state_heuristic(hy_make(RatC(PolyC::monomial(Const(1), 2)), -rx()),
                                Domain::half_line) == BoundVerdict::candidate_bound);
    // morse-style constant decay with a mild singularity
    CHECK(bound_state_heuristic(hy_make(RatC(1), RatC(PolyC::constant(Const(Rat(1, 2))),
                                                      PolyC::monomial(Const(1), 1)) -
                                                     RatC(1)),
                                Domain::half_line) == BoundVerdict::candidate_bound);
    // too singular at the origin
    CHECK(bound_state_heuristic(hy_make(inv_xk(1, 1), RatC(-1)), Domain::half_line) ==
          BoundVerdict::not_bound);
    CHECK(bound_state_heuristic(hy_make(RatC(1), RatC(1)), Domain::half_line) ==
          BoundVerdict::not_bound);

    CHECK(bound_verdict_to_string(BoundVerdict::candidate_bound) == "candidate_bound");
    CHECK(bound_verdict_to_string(BoundVerdict::not_bound) == "not_bound");
    CHECK(bound_verdict_to_string(BoundVerdict::inconclusive) == "inconclusive");
}

TEST_CASE("transformed operators keep the galois group") {
    // free potential against its partner 2/x^2 away from the seed level
    KovacicResult g1 = kovacic_solve(RatC(4));
    KovacicResult g2 = kovacic_solve(inv_xk(2, 2) + RatC(4));
    CHECK(g1.group.id == g2.group.id);

    // the crum pair: 2/x^2 and 8/(2x+3)^2 at level -9 mean r = V + 9
    KovacicResult g3 = kovacic_solve(inv_xk(2, 2) + RatC(9));
    RatC den = rx() * RatC(2) + RatC(3);
    KovacicResult g4 = kovacic_solve(RatC(8) / (den * den) + RatC(9));
    CHECK(g3.group.id == g4.group.id);
}
