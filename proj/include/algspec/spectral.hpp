#pragma once

#include "algspec/kovacic.hpp"

namespace algspec {

// One verified eigenvalue inside a family. n is the integer level whose
// degree equation produced lambda; -1 marks sweep / user-supplied values.
struct SpectralHit {
    int n = -1;
    Const lambda;
    KovacicResult result;
};

// Hits grouped by provenance. For the first-case sweep the pattern string
// is the sign pattern "s_inf;s_c1,s_c2,..." with finite poles in location
// order; "E" collects the second-case candidates and "*" the concrete
// sweep bucket.
struct SpectralFamily {
    std::string pattern;
    std::vector<SpectralHit> hits;
};

struct ScanOptions {
    int n_max = 12;
    std::vector<Const> extra_lambdas;  // verified concretely, no algebra
    KovacicOptions kovacic;
    std::size_t max_equations = 20000;
};

struct ScanResult {
    std::vector<SpectralFamily> families;
    std::vector<Const> lambdas;  // verified, deduplicated, sorted
    std::vector<std::string> warnings;
    int case3_lambda_count = 0;      // distinct verified lambdas in case 3
    bool symbolic_complete = true;   // no unresolved factors, no degradation
};

// Scans the pencil r(x; lambda) = r0 - lambda*s for lambdas where the
// equation zeta'' = r zeta has Liouvillian solutions. Pole locations must
// not depend on lambda, and lambda may enter finite poles only through
// their order-1 and order-2 coefficients. Candidate lambdas are produced
// by parametric degree equations (first case: sign patterns; second case:
// E-set sums) and every candidate is confirmed by a full concrete solve;
// only non-failing results are reported. More than two distinct
// lambda-dependent radicals degrade the sweep to the supplied grid.
ScanResult spectral_scan(const RatC& r0, const RatC& s, const ScanOptions& opts = {});

}  // namespace algspec
