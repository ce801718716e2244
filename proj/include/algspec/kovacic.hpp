#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algspec/hyperexp.hpp"
#include "algspec/laurent.hpp"
#include "algspec/radical.hpp"

namespace algspec {

// y'' + a y' + b y = 0 brought to zeta'' = r zeta via y = kappa zeta,
// kappa = exp(-int a/2). The transport is strong when kappa is rational,
// i.e. a/2 has only integer simple-pole residues and no polynomial part.
struct NormalFormODE {
    RatC r;
    Hyperexp kappa;
    bool strong = false;
};
NormalFormODE reduce_normal_form(const RatC& a, const RatC& b);

struct PoleSite {
    Const location;
    int order = 0;
    Const b;  // order-2 expansion coefficient (or series b for order >= 4)
    std::optional<RadicalNumber> alpha_plus, alpha_minus;
    std::optional<SqrtAtPole> sqrt_part;  // order >= 4 only
    bool case1_data_ok = false;           // series sqrt existed where needed
};

struct InfinitySite {
    int order = 0;  // deg(den) - deg(num); large when r = 0
    Const b;
    std::optional<RadicalNumber> alpha_plus, alpha_minus;
    std::optional<SqrtAtInfinity> sqrt_part;  // order <= 0 only
    bool case1_data_ok = false;
};

struct PoleAnalysis {
    std::vector<PoleSite> poles;  // sorted by location
    InfinitySite infinity;
    bool case1_admissible = false;
    bool case2_admissible = false;
    bool case3_admissible = false;
    std::vector<std::string> warnings;

    // E-sets for the second and third cases, per pole / at infinity.
    std::vector<std::vector<int>> e2;
    std::vector<int> e2_inf;
    std::map<int, std::vector<std::vector<int>>> e3;  // key: m in {4,6,12}
    std::map<int, std::vector<int>> e3_inf;
};
PoleAnalysis analyze_poles(const RatC& r);

// A second solution obtained from a first one, zeta2 = zeta1 * (T + sum
// rho log(x - c)), with T rational. Present logs make the unipotent part
// of the group visible.
struct LogCombination {
    RatC T;
    std::vector<RationalIntegral::LogTerm> logs;
};

enum class SolutionKind {
    Rational,        // omega fully absorbed: zeta in C(x)
    AlgebraicPower,  // zeta^n in C(x) for minimal n >= 2
    Hyperexponential,  // exp part present, not algebraic over C(x)
    LogSecond,         // zeta1 * (rational + logs)
    AlgebraicOmega,    // omega algebraic of degree 2 (case 2) or 4/6/12 (case 3)
};

struct Solution {
    SolutionKind kind;
    std::optional<Hyperexp> value;           // except AlgebraicOmega
    std::optional<LogCombination> log_part;  // LogSecond only (relative to base)
    int base_index = -1;                     // LogSecond: index of the base solution
    int algebraic_order = 0;                 // AlgebraicPower: minimal n
    // AlgebraicOmega: minimal polynomial of omega, coefficients of omega^i.
    std::vector<RatC> omega_minpoly;
    std::string note;
};

enum class GroupId {
    Trivial,        // e
    CyclicN,        // G^[n], diagonal with character of order n
    MetacyclicN,    // G^{n}, triangular, diagonal of order n, full unipotent
    Torus,          // G_m
    Additive,       // G_a
    Borel,          // B
    DihedralInf,    // D_inf
    DihedralN,      // D_2n
    Tetrahedral,    // A4 (projective)
    Octahedral,     // S4
    Icosahedral,    // A5
    SL2,
    // Reducible but unresolved: a solution certifies a common eigenvector, yet
    // the bounded tests could not pin the group down further. Carries evidence.
    ReducibleUnresolved,
};

struct GroupInfo {
    GroupId id = GroupId::SL2;
    int n = 0;  // order parameter for CyclicN / MetacyclicN / DihedralN
    bool upper_bound = false;  // true when only an upper bound is certified
    std::string evidence;
};

std::string group_to_string(const GroupInfo& g);
bool group_virtually_solvable(const GroupInfo& g);
bool group_finite(const GroupInfo& g);
bool group_finite_primitive(const GroupInfo& g);
// Identity component, as a GroupInfo with trivial evidence.
GroupInfo group_identity_component(const GroupInfo& g);

struct KovacicResult {
    int case_used = 4;  // 1, 2, 3, or 4 (no Liouvillian solutions)
    std::vector<Solution> solutions;
    GroupInfo group;
    std::vector<std::string> warnings;
    // Case-1 bookkeeping for reports and the spectral scan.
    struct Case1Hit {
        std::string sign_pattern;  // e.g. "-;+,-" (infinity; poles in order)
        int n = 0;
        RatC omega;
        PolyC p;
    };
    std::vector<Case1Hit> case1_hits;
};

struct KovacicOptions {
    bool verify = true;        // substitute every solution back
    int second_degree_slack = 10;  // extra degree room in second-solution solves
};

// Individual case drivers (empty solution list = that case fails).
std::vector<Solution> case1_solve(const RatC& r, const PoleAnalysis& pa,
                                  std::vector<KovacicResult::Case1Hit>* hits,
                                  std::vector<std::string>* warnings,
                                  const KovacicOptions& opts = {});
std::vector<Solution> case2_solve(const RatC& r, const PoleAnalysis& pa,
                                  std::vector<std::string>* warnings,
                                  const KovacicOptions& opts = {});
std::vector<Solution> case3_solve(const RatC& r, const PoleAnalysis& pa,
                                  std::vector<std::string>* warnings,
                                  const KovacicOptions& opts = {});

KovacicResult kovacic_solve(const RatC& r, const KovacicOptions& opts = {});

// Monic P of degree n with P'' + 2 omega P' + (omega' + omega^2 - r) P = 0,
// if one exists.
std::optional<PolyC> solve_recu1(const RatC& r, const RatC& omega, int n);

// Given exactly one explicit solution at sols[base_index], append the second
// one obtained from reduction of order when it stays in closed form.
void extend_with_second_solution(const RatC& r, std::vector<Solution>& sols, int base_index,
                                 const KovacicOptions& opts);

// Exact check that v = omega satisfies v' + v^2 = r.
bool riccati_check(const RatC& omega, const RatC& r);

// Exact check of the Riccati compatibility for an algebraic omega with
// minimal polynomial F = sum coeffs[i] * omega^i: F_x + (r - omega^2) F_omega
// must vanish modulo F.
bool riccati_check_algebraic(const std::vector<RatC>& coeffs, const RatC& r);

// zeta'' = r zeta for explicit hyperexponential values.
bool ode_check(const Hyperexp& zeta, const RatC& r);

std::string solution_to_string(const Solution& s, const std::string& var);

}  // namespace algspec
