#include "algspec/galois.hpp"
#include "algspec/kovacic.hpp"

namespace algspec {

namespace {

Solution rational_solution(const RatC& f) {
    Solution s;
    s.kind = SolutionKind::Rational;
    s.value = hy_rational(f);
    return s;
}

}  // namespace

KovacicResult kovacic_solve(const RatC& r, const KovacicOptions& opts) {
    KovacicResult res;
    if (r.is_zero()) {
        // zeta'' = 0: basis {1, x}.
        res.case_used = 1;
        res.solutions.push_back(rational_solution(RatC(1)));
        RatC x{PolyC::x(), PolyC::constant(Const(1))};
        res.solutions.push_back(rational_solution(x));
        res.group = classify_group(1, res.solutions, 0);
        return res;
    }
    PoleAnalysis pa = analyze_poles(r);
    res.warnings = pa.warnings;

    auto s1 = case1_solve(r, pa, &res.case1_hits, &res.warnings, opts);
    if (!s1.empty()) {
        res.case_used = 1;
        res.solutions = std::move(s1);
        res.group = classify_group(1, res.solutions, 0);
        return res;
    }
    auto s2 = case2_solve(r, pa, &res.warnings, opts);
    if (!s2.empty()) {
        res.case_used = 2;
        res.solutions = std::move(s2);
        res.group = classify_group(2, res.solutions, 0);
        return res;
    }
    auto s3 = case3_solve(r, pa, &res.warnings, opts);
    if (!s3.empty()) {
        res.case_used = 3;
        int m = s3.front().algebraic_order;
        res.solutions = std::move(s3);
        res.group = classify_group(3, res.solutions, m);
        return res;
    }
    res.case_used = 4;
    res.group = classify_from_kovacic(res);
    return res;
}

std::string solution_to_string(const Solution& s, const std::string& var) {
    switch (s.kind) {
        case SolutionKind::Rational:
        case SolutionKind::AlgebraicPower:
        case SolutionKind::Hyperexponential: {
            std::string out = s.value ? hy_to_string(*s.value, var) : "?";
            if (s.kind == SolutionKind::AlgebraicPower)
                out += "  [algebraic of order " + std::to_string(s.algebraic_order) + "]";
            return out;
        }
        case SolutionKind::LogSecond: {
            std::string out = "zeta_" + std::to_string(s.base_index + 1) + " * (";
            out += s.log_part ? ratc_str(s.log_part->T, var) : std::string("0");
            if (s.log_part)
            for (const auto& lg : s.log_part->logs) {
                out += " + (" + const_to_string(lg.coeff) + ")*log(" + var + " - (" +
                       const_to_string(lg.location) + "))";
            }
            out += ")";
            return out;
        }
        case SolutionKind::AlgebraicOmega: {
            std::string out = "omega algebraic of degree " +
                              std::to_string(s.omega_minpoly.size() - 1) + ": 0 = ";
            bool first = true;
            for (std::size_t i = s.omega_minpoly.size(); i-- > 0;) {
                const RatC& c = s.omega_minpoly[i];
                if (c.is_zero()) continue;
                if (!first) out += " + ";
                first = false;
                out += "(" + ratc_str(c, var) + ")";
                if (i == 1) out += "*w";
                if (i > 1) out += "*w^" + std::to_string(i);
            }
            return out;
        }
    }
    return "?";
}

}  // namespace algspec
