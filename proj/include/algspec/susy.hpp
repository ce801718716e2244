#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algspec/hyperexp.hpp"

namespace algspec {

struct SeedNotEigenfunction : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DependentSeeds : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// psi'' == (V - lambda) psi, checked exactly on the hyperexponential form.
bool is_eigenfunction(const RatC& V, const Hyperexp& psi, const Const& lambda);

// W = -d(ln seed); satisfies V - lambda1 = W^2 - dW.
struct Superpotential {
    RatC W;
    Hyperexp seed;
    Const lambda1;
};
Superpotential superpotential_from_seed(const RatC& V, const Hyperexp& psi, const Const& lambda1);

// V_pm = W^2 pm dW + lambda1, so (V_plus + V_minus)/2 - lambda1 = W^2.
struct PartnerPair {
    RatC v_minus;
    RatC v_plus;
    RatC w;
    Const lambda1;
};
PartnerPair partner_potentials(const RatC& w, const Const& lambda1);

struct DarbouxResult {
    RatC v_plus;        // V - 2 d(d ln seed)
    Hyperexp seed_image;  // the seed itself maps to 1/seed
    std::function<Hyperexp(const Hyperexp&)> map;  // psi -> d psi - d(ln seed) psi
};
DarbouxResult darboux_transform(const RatC& V, const Hyperexp& seed, const Const& lambda1);

struct CrumResult {
    RatC v_n;
    std::function<Hyperexp(const Hyperexp&)> map;  // Wronskian quotient
};
// Seeds are (eigenfunction, level) pairs at pairwise distinct levels.
CrumResult crum_iterate(const RatC& V, const std::vector<std::pair<Hyperexp, Const>>& seeds);

// Columns factor as (twisted prefactor) exp(int omega_j); the determinant of
// the prefactor matrix is rational. A zero determinant comes back as the zero
// value (R = 0) and signals linear dependence.
Hyperexp wronskian_hyperexp(const std::vector<Hyperexp>& fs);

// Wronskian under the derivation sqrt(alpha) d/dz. Even sqrt(alpha) powers
// fold into R; an odd one stays in sqrt_alpha_pow rather than extending the
// field. branch_sign picks which square root of alpha the caller means.
struct HyperexpAlg {
    Hyperexp h;
    int sqrt_alpha_pow = 0;  // 0 or 1
    RatC alpha = RatC(1);
};
HyperexpAlg wronskian_hyperexp_z(const std::vector<Hyperexp>& fs, const RatC& alpha,
                                 int branch_sign = 1);

// Family W(x; a) = sum w[i] a^i with rational coefficients, parameter degree
// at most 2. On success the parameter map is a_{k+1} = p a_k + q and
// V_plus(x; a0) - V_minus(x; a1) = R(a1) is x-free.
struct ShapeInvarianceReport {
    bool holds = false;
    std::vector<RatC> family;
    Const p;
    Const q;
    PolyC r_next;  // R as a polynomial in its argument (the advanced parameter)
    PolyC r_prev;  // the same remainder written in the preceding parameter
    std::string energy_formula;  // closed form of E_n when p = 1
    std::string note;            // on failure, the polynomial system
};
ShapeInvarianceReport shape_invariance_check(const std::vector<RatC>& w_family,
                                             const RatC& sqrt_alpha = RatC(1));

Const shape_param(const ShapeInvarianceReport& rep, const Const& a0, int k);   // a_k
Const shape_energy(const ShapeInvarianceReport& rep, const Const& a0, int n);  // sum R(a_k), k=1..n

// Ladder construction: psi_n = Adag(a_0) ... Adag(a_{n-1}) psi0(a_n) with
// Adag = -D + W(.; a_k), D = sqrt_alpha d/dz and a_k = shape_param(a0, k).
struct SpectrumLevel {
    Const energy;
    Hyperexp psi;
};
SpectrumLevel gendenshtein_spectrum(const ShapeInvarianceReport& rep,
                                    const std::function<Hyperexp(const Const&)>& psi0,
                                    const Const& a0, int n, const RatC& sqrt_alpha = RatC(1));

enum class BoundVerdict { candidate_bound, not_bound, inconclusive };
enum class Domain { line, half_line };

// Decay heuristic, never a proof: exponential decay from the polynomial part
// of omega toward each boundary; on the half line additionally the local
// exponent at 0 (order of R plus the residue of omega) must exceed -1/2.
BoundVerdict bound_state_heuristic(const Hyperexp& psi, Domain domain);
std::string bound_verdict_to_string(BoundVerdict v);

}  // namespace algspec
