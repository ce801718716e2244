#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "algspec/polypot.hpp"
#include "algspec/spectral.hpp"

using namespace algspec;

namespace {

RatC rx() { return RatC{PolyC::x(), PolyC::constant(Const(1))}; }

RatC rat(long long n, long long d = 1) {
    return RatC{PolyC::constant(Const(Rat(n, d))), PolyC::constant(Const(1))};
}

RatC pole_term(const Const& c, int k, const Rat& coeff) {
    PolyC lin;
    lin.c = {-c, Const(1)};
    return RatC{PolyC::constant(Const(coeff)), poly_pow(lin, k)};
}

bool has_lambda(const ScanResult& sr, const Const& v) {
    for (const Const& l : sr.lambdas)
        if (l == v) return true;
    return false;
}

const SpectralFamily* family(const ScanResult& sr, const std::string& pat) {
    for (const auto& f : sr.families)
        if (f.pattern == pat) return &f;
    return nullptr;
}

std::vector<Const> family_lambdas(const SpectralFamily& f) {
    std::vector<Const> out;
    for (const auto& h : f.hits) out.push_back(h.lambda);
    return out;
}

}  // namespace

TEST_CASE("harmonic well spectrum from the sign-pattern sweep") {
    ScanOptions so;
    so.n_max = 6;
    auto sr = spectral_scan(rx() * rx() - rat(1), rat(1), so);
    // Lambda = {2n} from the decaying branch, {-2n-2} from the growing one.
    CHECK(sr.lambdas.size() == 14);
    for (int n = 0; n <= 6; ++n) {
        CHECK(has_lambda(sr, Const(2 * n)));
        CHECK(has_lambda(sr, Const(-2 * n - 2)));
    }
    CHECK(sr.case3_lambda_count == 0);
    CHECK(sr.symbolic_complete);

    const SpectralFamily* minus = family(sr, "-;");
    REQUIRE(minus != nullptr);
    REQUIRE(minus->hits.size() == 7);
    for (const auto& h : minus->hits) {
        CHECK(h.lambda == Const(2 * h.n));
        CHECK(h.result.case_used == 1);
        // The eigenfunction prefactor is monic of degree n.
        bool found = false;
        for (const auto& c1 : h.result.case1_hits) {
            if (c1.sign_pattern != "-;") continue;
            found = true;
            CHECK(c1.p.degree() == h.n);
            CHECK(c1.p.c.back() == Const(1));
            CHECK(c1.omega == RatC(0) - rx());
        }
        CHECK(found);
    }

    const SpectralFamily* plus = family(sr, "+;");
    REQUIRE(plus != nullptr);
    for (const auto& h : plus->hits) CHECK(h.lambda == Const(-2 * h.n - 2));
}

TEST_CASE("radial oscillator families for l = 1") {
    // r0 = x^2 + 2/x^2 - 5, ground energy shifted to zero.
    ScanOptions so;
    so.n_max = 5;
    auto sr = spectral_scan(rx() * rx() + pole_term(Const(0), 2, Rat(2)) - rat(5), rat(1), so);
    CHECK(sr.case3_lambda_count <= 1);

    struct Expect {
        const char* pat;
        long long a, b;  // lambda = a*n + b
    };
    for (const Expect& e : {Expect{"-;+", 2, 0}, Expect{"-;-", 2, -6}, Expect{"+;+", -2, -10},
                            Expect{"+;-", -2, -4}}) {
        const SpectralFamily* f = family(sr, e.pat);
        REQUIRE(f != nullptr);
        for (int n = 0; n <= 5; ++n) {
            Const want(e.a * n + e.b);
            auto ls = family_lambdas(*f);
            bool present = false;
            for (const auto& h : f->hits)
                if (h.n == n && h.lambda == want) present = true;
            CHECK_MESSAGE(present, e.pat, " misses n=", n);
        }
    }
    // Ground state of the decaying branch: x^(l+1} e^{-x^2/2} has omega = -x + 2/x.
    const SpectralFamily* f = family(sr, "-;+");
    REQUIRE(f != nullptr);
    const SpectralHit* h0 = nullptr;
    for (const auto& h : f->hits)
        if (h.n == 0 && h.lambda == Const(0)) h0 = &h;
    REQUIRE(h0 != nullptr);
    bool ground = false;
    for (const auto& c1 : h0->result.case1_hits)
        if (c1.sign_pattern == "-;+" && c1.p.degree() == 0 &&
            c1.omega == pole_term(Const(0), 1, Rat(2)) - rx())
            ground = true;
    CHECK(ground);
}

TEST_CASE("morse spectrum in the algebrized frame") {
    // r0 = (x^2 - x - 1/4)/x^2, s = 1/x^2.
    RatC x2 = rx() * rx();
    RatC r0 = (x2 - rx() - rat(1, 4)) / x2;
    ScanOptions so;
    so.n_max = 6;
    auto sr = spectral_scan(r0, rat(1) / x2, so);
    for (int n = 0; n <= 6; ++n) CHECK(has_lambda(sr, Const(-n * n)));
    // Nothing outside -n^2 shows up.
    for (const Const& l : sr.lambdas) {
        CHECK(l.is_rational());
        bool ok = false;
        for (int n = 0; n <= 7; ++n)
            if (l == Const(-n * n)) ok = true;
        CHECK_MESSAGE(ok, "unexpected lambda ", const_to_string(l));
    }
    CHECK(sr.case3_lambda_count == 0);
}

TEST_CASE("coulomb families for l = 1 and the degenerate top") {
    // r0 = 2/x^2 - 4/x + 1.
    RatC r0 = pole_term(Const(0), 2, Rat(2)) - pole_term(Const(0), 1, Rat(4)) + rat(1);
    ScanOptions so;
    so.n_max = 5;
    auto sr = spectral_scan(r0, rat(1), so);
    // lambda = 1 - (2/(n+2))^2 and lambda = 1 - (2/(n-1))^2.
    for (int n = 0; n <= 5; ++n) {
        CHECK(has_lambda(sr, Const(1) - Const(4) / Const((n + 2) * (n + 2))));
        if (n != 1) CHECK(has_lambda(sr, Const(1) - Const(4) / Const((n - 1) * (n - 1))));
    }
    // The top-degree degeneration lambda = 1 is probed but fails concretely.
    CHECK(!has_lambda(sr, Const(1)));
    auto at1 = kovacic_solve(r0 - rat(1));
    CHECK(at1.case_used == 4);
}

TEST_CASE("radical overflow degrades to the supplied grid") {
    RatC s = pole_term(Const(0), 2, Rat(1)) + pole_term(Const(1), 2, Rat(2)) + rat(1) +
             pole_term(Const(0), 1, Rat(1));
    ScanOptions so;
    so.n_max = 3;
    so.extra_lambdas = {Const(0)};
    auto sr = spectral_scan(RatC(0), s, so);
    CHECK(!sr.symbolic_complete);
    bool flagged = false;
    for (const auto& w : sr.warnings)
        if (w.find("TooManyRadicals") != std::string::npos) flagged = true;
    CHECK(flagged);
    // The grid value survives: r(0) = 0 is solvable.
    CHECK(has_lambda(sr, Const(0)));
    const SpectralFamily* g = family(sr, "*");
    REQUIRE(g != nullptr);
    CHECK(g->hits.size() == 1);
    CHECK(g->hits[0].result.case_used == 1);
}

TEST_CASE("square completion cascade") {
    // x^4 + 4x^3 + 2x^2 - 6x - 5 = (x^2 + 2x - 1)^2 - 2x - 6.
    PolyC q;
    q.c = {Const(-5), Const(-6), Const(2), Const(4), Const(1)};
    auto sc = complete_square(q);
    PolyC a_want;
    a_want.c = {Const(-1), Const(2), Const(1)};
    CHECK(sc.a == a_want);
    PolyC b_want;
    b_want.c = {Const(-6), Const(-2)};
    CHECK(sc.b == b_want);
    CHECK(sc.a * sc.a + sc.b == q);

    PolyC odd;
    odd.c = {Const(0), Const(1)};
    CHECK_THROWS(complete_square(odd));
}

TEST_CASE("polynomial potentials: even branch and odd degree") {
    PolyC V;
    V.c = {Const(-1), Const(0), Const(1)};  // x^2 - 1
    auto r4 = poly_potential_analyze(V, Const(4));
    REQUIRE(r4.solvable);
    CHECK(r4.group.id == GroupId::Borel);
    REQUIRE(r4.eigenfunctions.size() == 1);
    // P = x^2 - 1/2, omega = -x.
    CHECK(r4.eigenfunctions[0].omega == RatC(0) - rx());
    PolyC p_want;
    p_want.c = {Const(Rat(-1, 2)), Const(0), Const(1)};
    CHECK(r4.eigenfunctions[0].R == RatC{p_want, PolyC::constant(Const(1))});

    CHECK(!poly_potential_analyze(V, Const(3)).solvable);

    PolyC cubic;
    cubic.c = {Const(0), Const(0), Const(0), Const(1)};
    auto rc = poly_potential_analyze(cubic, Const(0));
    CHECK(!rc.solvable);
    CHECK(rc.group.id == GroupId::SL2);
}

TEST_CASE("quasi-solvable quartic") {
    // V = x^4 + 4x^3 + 2x^2 - 6x: solvable exactly at lambda = 1 with P = 1.
    PolyC V;
    V.c = {Const(0), Const(-6), Const(2), Const(4), Const(1)};
    auto r1 = poly_potential_analyze(V, Const(1));
    REQUIRE(r1.solvable);
    REQUIRE(r1.eigenfunctions.size() == 1);
    CHECK(r1.eigenfunctions[0].R == rat(1));
    CHECK(!poly_potential_analyze(V, Const(2)).solvable);
    CHECK(!poly_potential_analyze(V, Const(0)).solvable);

    // Odd linear coefficient (mu = 5) admits no branch at any lambda tried.
    PolyC V5;
    V5.c = {Const(0), Const(-5), Const(2), Const(4), Const(1)};
    for (int l = -3; l <= 3; ++l) CHECK(!poly_potential_analyze(V5, Const(l)).solvable);
}
