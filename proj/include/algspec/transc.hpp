#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algspec/hyperexp.hpp"

namespace algspec {

// Expression trees for one-variable potentials that may leave C(x):
// exponential factors with rational-function arguments, trigonometric and
// hyperbolic atoms with rational-linear arguments, the sqrt(1+x^2) atom, and
// exact constants from Q(i, sqrt(d)). Purely rational trees evaluate down to
// a RatC.
enum class TxKind {
    Num,   // value
    Var,   // the independent variable
    Exp,   // exp(a) with a rational in the variable (validated at parse time)
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Coth,  // freq * variable argument, freq rational
    SqrtOnePlusSq,  // sqrt(1 + variable^2)
    Add,
    Sub,
    Mul,
    DivOp,
    Neg,  // child in a
    Pow,  // a ^ exponent, integer exponent
};

struct TranscExpr;
using TxPtr = std::shared_ptr<const TranscExpr>;

struct TranscExpr {
    TxKind kind = TxKind::Num;
    Const value;       // Num
    Rat freq;          // Sin..Coth: argument is freq * variable
    TxPtr a, b;        // children; Neg/Pow/Exp use a only
    int exponent = 0;  // Pow
};

TxPtr tx_num(const Const& c);
TxPtr tx_var();
TxPtr tx_exp(TxPtr arg);
TxPtr tx_trig(TxKind k, const Rat& freq);
TxPtr tx_sqrt1px2();
TxPtr tx_add(TxPtr a, TxPtr b);
TxPtr tx_sub(TxPtr a, TxPtr b);
TxPtr tx_mul(TxPtr a, TxPtr b);
TxPtr tx_div(TxPtr a, TxPtr b);
TxPtr tx_neg(TxPtr a);
TxPtr tx_pow(TxPtr a, int n);

bool tx_equal(const TxPtr& a, const TxPtr& b);

// Deterministic, re-parseable rendering.
std::string tx_to_string(const TxPtr& e, const std::string& var);

// Which atoms appear (Var counts the bare variable only, not frequencies).
struct TxAtoms {
    bool var = false;
    bool exp_atom = false;
    bool sin_a = false, cos_a = false, tan_a = false;
    bool sinh_a = false, cosh_a = false, tanh_a = false, coth_a = false;
    bool sqrt1px2 = false;
    bool any_transcendental() const {
        return exp_atom || sin_a || cos_a || tan_a || sinh_a || cosh_a || tanh_a || coth_a ||
               sqrt1px2;
    }
};
TxAtoms tx_atoms(const TxPtr& e);

// Every exp atom's argument, in first-appearance order (duplicates kept).
std::vector<TxPtr> tx_exp_args(const TxPtr& e);

// Evaluate a tree with no transcendental atoms to a rational function of the
// variable. Throws FieldError on division by zero.
RatC tx_eval_rational(const TxPtr& e);
bool tx_is_rational(const TxPtr& e);

// exp-argument as c * variable: the coefficient when the argument is a
// homogeneous-linear polynomial, nullopt otherwise.
std::optional<Const> tx_linear_coefficient(const TxPtr& arg);

// R(x) * exp(u(x)) factorizations: products, quotients, integer powers, and
// signs of rational subtrees and exp atoms. Additive mixing with a
// transcendental part fails.
std::optional<Hyperexp> tx_to_hyperexp(const TxPtr& e);

class TxParseError : public std::runtime_error {
  public:
    TxParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                             message),
          pos(position) {}
    std::size_t pos;
};

struct ParsedPotential {
    TxPtr expr;
    std::optional<RatC> rational;  // set when the tree has no transcendental atoms
    std::string var;               // "x" or "z"
};

// Grammar: rational literals (and i, and sqrt(n) for integer n), one variable
// (x or z), + - * / ^ with integer exponents, exp(...) with a rational
// argument, sin/cos/tan/sinh/cosh/tanh/coth with rational-linear arguments,
// sqrt(1 + x^2) as an atom. Throws TxParseError with a position.
ParsedPotential parse_potential(const std::string& src);

// Convenience: parse a constant (e.g. a lambda flag value). Accepts any
// expression that evaluates to a constant rational function.
Const parse_const(const std::string& src);

}  // namespace algspec
