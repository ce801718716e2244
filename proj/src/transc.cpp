#include "algspec/transc.hpp"

#include <cctype>

namespace algspec {

namespace {

std::shared_ptr<TranscExpr> make(TxKind k) {
    auto e = std::make_shared<TranscExpr>();
    e->kind = k;
    return e;
}

}  // namespace

TxPtr tx_num(const Const& c) {
    auto e = make(TxKind::Num);
    e->value = c;
    return e;
}

TxPtr tx_var() { return make(TxKind::Var); }

TxPtr tx_exp(TxPtr arg) {
    auto e = make(TxKind::Exp);
    e->a = std::move(arg);
    return e;
}

TxPtr tx_trig(TxKind k, const Rat& freq) {
    auto e = make(k);
    e->freq = freq;
    return e;
}

TxPtr tx_sqrt1px2() { return make(TxKind::SqrtOnePlusSq); }

TxPtr tx_add(TxPtr a, TxPtr b) {
    auto e = make(TxKind::Add);
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

TxPtr tx_sub(TxPtr a, TxPtr b) {
    auto e = make(TxKind::Sub);
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

TxPtr tx_mul(TxPtr a, TxPtr b) {
    auto e = make(TxKind::Mul);
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

TxPtr tx_div(TxPtr a, TxPtr b) {
    auto e = make(TxKind::DivOp);
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

TxPtr tx_neg(TxPtr a) {
    auto e = make(TxKind::Neg);
    e->a = std::move(a);
    return e;
}

TxPtr tx_pow(TxPtr a, int n) {
    auto e = make(TxKind::Pow);
    e->a = std::move(a);
    e->exponent = n;
    return e;
}

bool tx_equal(const TxPtr& a, const TxPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TxKind::Num: return a->value == b->value;
        case TxKind::Var:
        case TxKind::SqrtOnePlusSq: return true;
        case TxKind::Exp: return tx_equal(a->a, b->a);
        case TxKind::Sin:
        case TxKind::Cos:
        case TxKind::Tan:
        case TxKind::Sinh:
        case TxKind::Cosh:
        case TxKind::Tanh:
        case TxKind::Coth: return a->freq == b->freq;
        case TxKind::Neg: return tx_equal(a->a, b->a);
        case TxKind::Pow: return a->exponent == b->exponent && tx_equal(a->a, b->a);
        case TxKind::Add:
        case TxKind::Sub:
        case TxKind::Mul:
        case TxKind::DivOp: return tx_equal(a->a, b->a) && tx_equal(a->b, b->b);
    }
    return false;
}

namespace {

const char* trig_name(TxKind k) {
    switch (k) {
        case TxKind::Sin: return "sin";
        case TxKind::Cos: return "cos";
        case TxKind::Tan: return "tan";
        case TxKind::Sinh: return "sinh";
        case TxKind::Cosh: return "cosh";
        case TxKind::Tanh: return "tanh";
        case TxKind::Coth: return "coth";
        default: return "?";
    }
}

// Single-token constants print bare; everything else is parenthesized so the
// rendering stays value-correct in any operator context.
bool const_is_atomic_token(const Const& c) {
    if (c.is_rational()) return rat_is_int(c.re) && c.re >= 0;
    if (c.re == 0 && c.rad == 0 && c.rad_im == 0) return c.im == 1;  // "i"
    if (c.re == 0 && c.im == 0 && c.rad_im == 0) return c.rad == 1;  // "sqrt(d)"
    return false;
}

int tx_prec(TxKind k) {
    switch (k) {
        case TxKind::Add:
        case TxKind::Sub: return 1;
        case TxKind::Mul:
        case TxKind::DivOp: return 2;
        case TxKind::Neg: return 3;
        case TxKind::Pow: return 4;
        default: return 9;
    }
}

std::string render(const TxPtr& e, const std::string& var, int ctx);

std::string guard_minus(std::string s) {
    if (!s.empty() && s[0] == '-') return "(" + s + ")";
    return s;
}

std::string render(const TxPtr& e, const std::string& var, int ctx) {
    std::string s;
    switch (e->kind) {
        case TxKind::Num:
            if (const_is_atomic_token(e->value)) return const_to_string(e->value);
            return "(" + const_to_string(e->value) + ")";
        case TxKind::Var: return var;
        case TxKind::Exp: return "exp(" + render(e->a, var, 0) + ")";
        case TxKind::Sin:
        case TxKind::Cos:
        case TxKind::Tan:
        case TxKind::Sinh:
        case TxKind::Cosh:
        case TxKind::Tanh:
        case TxKind::Coth: {
            std::string arg;
            if (e->freq == 1) {
                arg = var;
            } else if (e->freq == -1) {
                arg = "-" + var;
            } else {
                arg = rat_to_string(e->freq) + "*" + var;
            }
            return std::string(trig_name(e->kind)) + "(" + arg + ")";
        }
        case TxKind::SqrtOnePlusSq: return "sqrt(1 + " + var + "^2)";
        case TxKind::Add:
            s = render(e->a, var, 1) + " + " + guard_minus(render(e->b, var, 2));
            break;
        case TxKind::Sub:
            s = render(e->a, var, 1) + " - " + guard_minus(render(e->b, var, 2));
            break;
        case TxKind::Mul:
            s = render(e->a, var, 2) + "*" + guard_minus(render(e->b, var, 3));
            break;
        case TxKind::DivOp:
            s = render(e->a, var, 2) + "/" + guard_minus(render(e->b, var, 3));
            break;
        case TxKind::Neg:
            s = "-" + render(e->a, var, 3);
            break;
        case TxKind::Pow:
            s = render(e->a, var, 5) + "^" + std::to_string(e->exponent);
            break;
    }
    if (tx_prec(e->kind) < ctx) return "(" + s + ")";
    return s;
}

}  // namespace

std::string tx_to_string(const TxPtr& e, const std::string& var) { return render(e, var, 0); }

namespace {

void collect_atoms(const TxPtr& e, TxAtoms& out) {
    if (!e) return;
    switch (e->kind) {
        case TxKind::Var: out.var = true; break;
        case TxKind::Exp: out.exp_atom = true; break;
        case TxKind::Sin: out.sin_a = true; break;
        case TxKind::Cos: out.cos_a = true; break;
        case TxKind::Tan: out.tan_a = true; break;
        case TxKind::Sinh: out.sinh_a = true; break;
        case TxKind::Cosh: out.cosh_a = true; break;
        case TxKind::Tanh: out.tanh_a = true; break;
        case TxKind::Coth: out.coth_a = true; break;
        case TxKind::SqrtOnePlusSq: out.sqrt1px2 = true; break;
        default: break;
    }
    // The exp argument is rational in the variable; its Var does not make the
    // tree transcendental on its own, so it still counts under var.
    collect_atoms(e->a, out);
    collect_atoms(e->b, out);
}

void collect_exp_args(const TxPtr& e, std::vector<TxPtr>& out) {
    if (!e) return;
    if (e->kind == TxKind::Exp) out.push_back(e->a);
    collect_exp_args(e->a, out);
    collect_exp_args(e->b, out);
}

}  // namespace

TxAtoms tx_atoms(const TxPtr& e) {
    TxAtoms out;
    collect_atoms(e, out);
    return out;
}

std::vector<TxPtr> tx_exp_args(const TxPtr& e) {
    std::vector<TxPtr> out;
    collect_exp_args(e, out);
    return out;
}

bool tx_is_rational(const TxPtr& e) { return !tx_atoms(e).any_transcendental(); }

RatC tx_eval_rational(const TxPtr& e) {
    switch (e->kind) {
        case TxKind::Num: return RatC(e->value);
        case TxKind::Var: return RatC::x();
        case TxKind::Add: return tx_eval_rational(e->a) + tx_eval_rational(e->b);
        case TxKind::Sub: return tx_eval_rational(e->a) - tx_eval_rational(e->b);
        case TxKind::Mul: return tx_eval_rational(e->a) * tx_eval_rational(e->b);
        case TxKind::DivOp: return tx_eval_rational(e->a) / tx_eval_rational(e->b);
        case TxKind::Neg: return RatC(0) - tx_eval_rational(e->a);
        case TxKind::Pow: {
            RatC base = tx_eval_rational(e->a);
            int n = e->exponent;
            RatC out(1);
            for (int k = 0; k < (n < 0 ? -n : n); ++k) out = out * base;
            if (n < 0) out = RatC(1) / out;
            return out;
        }
        default:
            throw std::logic_error("tx_eval_rational on a transcendental atom");
    }
}

std::optional<Const> tx_linear_coefficient(const TxPtr& arg) {
    if (!tx_is_rational(arg)) return std::nullopt;
    try {
        RatC f = tx_eval_rational(arg);
        if (f.den.degree() != 0) return std::nullopt;
        if (f.num.degree() != 1) return std::nullopt;
        if (!f.num.coeff(0).is_zero()) return std::nullopt;
        return f.num.coeff(1) / f.den.coeff(0);
    } catch (const FieldError&) {
        return std::nullopt;
    }
}

std::optional<Hyperexp> tx_to_hyperexp(const TxPtr& e) {
    if (tx_is_rational(e)) {
        RatC f = tx_eval_rational(e);
        if (f.is_zero()) return std::nullopt;
        return hy_rational(f);
    }
    switch (e->kind) {
        case TxKind::Exp: {
            if (!tx_is_rational(e->a)) return std::nullopt;
            RatC u = tx_eval_rational(e->a);
            return hy_make(RatC(1), ratfunc_derivative(u));
        }
        case TxKind::Mul: {
            auto A = tx_to_hyperexp(e->a);
            auto B = tx_to_hyperexp(e->b);
            if (!A || !B) return std::nullopt;
            return hy_mul(*A, *B);
        }
        case TxKind::DivOp: {
            auto A = tx_to_hyperexp(e->a);
            auto B = tx_to_hyperexp(e->b);
            if (!A || !B) return std::nullopt;
            return hy_div(*A, *B);
        }
        case TxKind::Neg: {
            auto A = tx_to_hyperexp(e->a);
            if (!A) return std::nullopt;
            return hy_scale(*A, Const(-1));
        }
        case TxKind::Pow: {
            auto A = tx_to_hyperexp(e->a);
            if (!A) return std::nullopt;
            int n = e->exponent;
            Hyperexp out = hy_rational(RatC(1));
            for (int k = 0; k < (n < 0 ? -n : n); ++k) out = hy_mul(out, *A);
            if (n < 0) out = hy_div(hy_rational(RatC(1)), out);
            return out;
        }
        case TxKind::Add:
        case TxKind::Sub: {
            auto A = tx_to_hyperexp(e->a);
            auto B = tx_to_hyperexp(e->b);
            if (!A || !B) return std::nullopt;
            if (e->kind == TxKind::Sub) B = hy_scale(*B, Const(-1));
            return hy_add_same_exp(*A, *B);
        }
        default: return std::nullopt;
    }
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::string var;

    explicit Parser(const std::string& src) : s(src) {}

    [[noreturn]] void fail(std::size_t at, const std::string& msg) { throw TxParseError(at, msg); }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!eat(c)) fail(pos, "expected '" + std::string(1, c) + "' " + what);
    }

    TxPtr parse_expr() {
        TxPtr lhs = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                lhs = tx_add(std::move(lhs), parse_term());
            } else if (c == '-') {
                ++pos;
                lhs = tx_sub(std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    TxPtr parse_term() {
        TxPtr lhs = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                lhs = tx_mul(std::move(lhs), parse_factor());
            } else if (c == '/') {
                ++pos;
                lhs = tx_div(std::move(lhs), parse_factor());
            } else {
                return lhs;
            }
        }
    }

    TxPtr parse_factor() {
        if (peek() == '-') {
            ++pos;
            return tx_neg(parse_factor());
        }
        return parse_power();
    }

    TxPtr parse_power() {
        TxPtr base = parse_primary();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            std::size_t at = pos;
            bool neg = false;
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                neg = s[pos] == '-';
                ++pos;
            }
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail(at, "exponent must be an integer");
            long long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                if (v > 1000000) fail(at, "exponent out of range");
                ++pos;
            }
            return tx_pow(std::move(base), static_cast<int>(neg ? -v : v));
        }
        return base;
    }

    TxPtr parse_primary() {
        skip_ws();
        if (pos >= s.size()) fail(pos, "unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            TxPtr inner = parse_expr();
            expect(')', "to close '('");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        fail(pos, std::string("unexpected character '") + c + "'");
    }

    TxPtr parse_number() {
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos];
            ++pos;
        }
        if (pos < s.size() && s[pos] == '.') fail(pos, "decimal literals are not exact; use p/q");
        return tx_num(Const(Rat(Int(digits))));
    }

    TxPtr parse_ident() {
        std::size_t start = pos;
        std::string id;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            id += s[pos];
            ++pos;
        }
        if (id == "i") return tx_num(const_i());
        if (id == "x" || id == "z") {
            if (var.empty()) var = id;
            if (var != id) fail(start, "mixed variables '" + var + "' and '" + id + "'");
            return tx_var();
        }
        if (id == "exp") {
            std::size_t argpos = pos;
            TxPtr arg = parse_call();
            if (!tx_is_rational(arg))
                fail(argpos, "exp argument must be rational in the variable");
            return tx_exp(std::move(arg));
        }
        static const std::pair<const char*, TxKind> table[] = {
            {"sin", TxKind::Sin},   {"cos", TxKind::Cos},   {"tan", TxKind::Tan},
            {"sinh", TxKind::Sinh}, {"cosh", TxKind::Cosh}, {"tanh", TxKind::Tanh},
            {"coth", TxKind::Coth},
        };
        for (const auto& [name, kind] : table) {
            if (id != name) continue;
            std::size_t argpos = pos;
            TxPtr arg = parse_call();
            auto coeff = tx_linear_coefficient(arg);
            if (!coeff || !coeff->is_rational())
                fail(argpos, std::string(name) + " argument must be a rational multiple of the variable");
            return tx_trig(kind, coeff->re);
        }
        if (id == "sqrt") {
            std::size_t argpos = pos;
            TxPtr arg = parse_call();
            TxPtr one_plus = tx_add(tx_num(Const(1)), tx_pow(tx_var(), 2));
            TxPtr plus_one = tx_add(tx_pow(tx_var(), 2), tx_num(Const(1)));
            if (tx_equal(arg, one_plus) || tx_equal(arg, plus_one)) return tx_sqrt1px2();
            if (tx_is_rational(arg)) {
                RatC f;
                try {
                    f = tx_eval_rational(arg);
                } catch (const FieldError& fe) {
                    fail(argpos, fe.what());
                }
                if (f.is_constant()) {
                    if (auto r = const_sqrt(f.constant_value())) return tx_num(*r);
                    fail(argpos, "no square root in the session constant field");
                }
            }
            fail(argpos, "sqrt supports constants and 1 + " + (var.empty() ? std::string("x") : var) +
                             "^2 only");
        }
        fail(start, "unknown symbol '" + id + "'");
    }

    TxPtr parse_call() {
        expect('(', "after function name");
        TxPtr arg = parse_expr();
        expect(')', "to close the argument");
        return arg;
    }
};

}  // namespace

ParsedPotential parse_potential(const std::string& src) {
    Parser p(src);
    if (p.at_end()) p.fail(0, "empty input");
    TxPtr tree = p.parse_expr();
    if (!p.at_end()) p.fail(p.pos, "unexpected trailing input");
    ParsedPotential out;
    out.expr = tree;
    out.var = p.var.empty() ? "x" : p.var;
    if (tx_is_rational(tree)) {
        try {
            out.rational = tx_eval_rational(tree);
        } catch (const FieldError& fe) {
            throw TxParseError(0, fe.what());
        }
    }
    return out;
}

Const parse_const(const std::string& src) {
    ParsedPotential p = parse_potential(src);
    if (!p.rational || !p.rational->is_constant())
        throw TxParseError(0, "expected a constant expression");
    return p.rational->constant_value();
}

}  // namespace algspec
