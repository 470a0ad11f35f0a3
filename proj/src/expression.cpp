#include "qsphere/expression.hpp"

#include <cctype>
#include <sstream>

namespace qsphere {

namespace {

struct Lexer {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(pos, std::string("expected '") + c + "'");
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(start, "expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError(start, "expected an identifier");
        return text.substr(start, pos - start);
    }
};

const char* const kAtoms[] = {"z", "zb", "dz", "dzb", "rhoi", "del", "delb", "Zp",
                              "Zm", "H", "w", "wb", "dw", "dwb", "q", "s", "lambda"};

bool is_atom(const std::string& name) {
    for (const char* a : kAtoms)
        if (name == a) return true;
    return false;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_{text} {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (!lex_.eof()) throw ParseError(lex_.pos, "unexpected trailing input");
        return e;
    }

private:
    Lexer lex_;

    ExprPtr expr() {
        Expr::Sum sum;
        int sign = 1;
        if (lex_.accept('-')) sign = -1;
        sum.terms.emplace_back(sign, term());
        while (true) {
            if (lex_.accept('+')) sum.terms.emplace_back(1, term());
            else if (lex_.accept('-')) sum.terms.emplace_back(-1, term());
            else break;
        }
        if (sum.terms.size() == 1 && sum.terms[0].first == 1) return sum.terms[0].second;
        return std::make_shared<Expr>(Expr{std::move(sum)});
    }

    ExprPtr term() {
        Expr::Product prod;
        prod.factors.emplace_back('*', factor());
        while (true) {
            if (lex_.accept('*')) prod.factors.emplace_back('*', factor());
            else if (lex_.accept('/')) prod.factors.emplace_back('/', factor());
            else break;
        }
        if (prod.factors.size() == 1) return prod.factors[0].second;
        return std::make_shared<Expr>(Expr{std::move(prod)});
    }

    ExprPtr factor() {
        if (lex_.accept('-'))
            return std::make_shared<Expr>(Expr{Expr::Neg{factor()}});
        ExprPtr base;
        if (lex_.accept('(')) {
            base = expr();
            lex_.expect(')');
        } else if (std::isdigit(static_cast<unsigned char>(lex_.peek()))) {
            base = std::make_shared<Expr>(Expr{Expr::Num{Rational(lex_.integer())}});
        } else {
            std::size_t at = lex_.pos;
            std::string name = lex_.ident();
            if (name == "qint" || name == "qintbar") {
                lex_.expect('(');
                long n = lex_.integer();
                lex_.expect(')');
                base = std::make_shared<Expr>(
                    Expr{Expr::QIntCall{static_cast<int>(n), name == "qintbar"}});
            } else if (is_atom(name)) {
                base = std::make_shared<Expr>(Expr{Expr::Atom{name}});
            } else {
                throw ParseError(at, "unknown atom '" + name + "'");
            }
        }
        if (lex_.accept('^')) {
            long e = lex_.integer();
            return std::make_shared<Expr>(Expr{Expr::Pow{base, static_cast<int>(e)}});
        }
        return base;
    }
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print_expr(const ExprPtr& e) {
    struct Printer {
        static std::string go(const ExprPtr& e, int parent_prec) {
            const Expr& x = *e;
            if (auto* n = std::get_if<Expr::Num>(&x.node)) {
                std::ostringstream os;
                os << n->value;
                return os.str();
            }
            if (auto* a = std::get_if<Expr::Atom>(&x.node)) return a->name;
            if (auto* qc = std::get_if<Expr::QIntCall>(&x.node))
                return std::string(qc->bar ? "qintbar(" : "qint(") + std::to_string(qc->n) + ")";
            if (auto* p = std::get_if<Expr::Pow>(&x.node))
                return go(p->base, 3) + "^" + std::to_string(p->exp);
            if (auto* g = std::get_if<Expr::Neg>(&x.node)) {
                std::string inner = "-" + go(g->arg, 2);
                return parent_prec > 1 ? "(" + inner + ")" : inner;
            }
            if (auto* pr = std::get_if<Expr::Product>(&x.node)) {
                std::string out;
                for (std::size_t i = 0; i < pr->factors.size(); ++i) {
                    if (i) out += pr->factors[i].first;
                    out += go(pr->factors[i].second, 2);
                }
                return parent_prec > 2 ? "(" + out + ")" : out;
            }
            const auto& sum = std::get<Expr::Sum>(x.node);
            std::string out;
            for (std::size_t i = 0; i < sum.terms.size(); ++i) {
                if (i) out += sum.terms[i].first > 0 ? " + " : " - ";
                else if (sum.terms[i].first < 0) out += "-";
                out += go(sum.terms[i].second, 1);
            }
            return parent_prec > 0 ? "(" + out + ")" : out;
        }
    };
    return Printer::go(e, 0);
}

namespace {

struct DomainError : EngineError {
    explicit DomainError(const std::string& what) : EngineError("Domain", what) {}
};

int kind_rank(const EvalValue& v) {
    if (std::holds_alternative<Scalar>(v)) return 0;
    if (std::holds_alternative<FormElement>(v)) return 1;
    if (std::holds_alternative<DiffOp>(v)) return 2;
    if (std::holds_alternative<VectorOp>(v)) return 3;
    return 4;  // LocalElement
}

// promote v to the kind of rank r
EvalValue promote(const EvalValue& v, int r) {
    int vr = kind_rank(v);
    if (vr == r) return v;
    if (vr == 0) {
        const Scalar& c = std::get<Scalar>(v);
        switch (r) {
            case 1: return FormElement(c);
            case 2: return DiffOp(FuncElement(c));
            case 3: return VectorOp(FormElement(c));
            case 4: return LocalElement(c);
        }
    }
    if (vr == 1) {
        const FormElement& w = std::get<FormElement>(v);
        if (r == 3) return VectorOp(w);
        if (r == 2) {
            if (w.grade() == 0 || w.is_zero()) return DiffOp(w.coeff(F_ONE));
            throw DomainError("cannot mix differential operators with forms");
        }
        if (r == 4) return embed(w);
    }
    throw DomainError("cannot combine derivative and vector-field generators in one expression");
}

EvalValue add_values(const EvalValue& a, const EvalValue& b) {
    int r = std::max(kind_rank(a), kind_rank(b));
    EvalValue x = promote(a, r), y = promote(b, r);
    switch (r) {
        case 0: return std::get<Scalar>(x) + std::get<Scalar>(y);
        case 1: return std::get<FormElement>(x) + std::get<FormElement>(y);
        case 2: return std::get<DiffOp>(x) + std::get<DiffOp>(y);
        case 3: return std::get<VectorOp>(x) + std::get<VectorOp>(y);
        default: return std::get<LocalElement>(x) + std::get<LocalElement>(y);
    }
}

EvalValue mul_values(const EvalValue& a, const EvalValue& b) {
    int r = std::max(kind_rank(a), kind_rank(b));
    EvalValue x = promote(a, r), y = promote(b, r);
    switch (r) {
        case 0: return std::get<Scalar>(x) * std::get<Scalar>(y);
        case 1: return mul(std::get<FormElement>(x), std::get<FormElement>(y));
        case 2: return mul(std::get<DiffOp>(x), std::get<DiffOp>(y));
        case 3: return mul(std::get<VectorOp>(x), std::get<VectorOp>(y));
        default: return mul(std::get<LocalElement>(x), std::get<LocalElement>(y));
    }
}

EvalValue negate_value(const EvalValue& v) {
    return std::visit([](const auto& x) -> EvalValue { return -x; }, v);
}

EvalValue atom_value(const std::string& name, Patch patch) {
    if (name == "q") return Scalar::q_pow(1);
    if (name == "s") return Scalar::s_pow(1);
    if (name == "lambda") return Scalar::lambda();
    if (patch == Patch::Z) {
        if (name == "z") return FormElement(FuncElement::generator(ZGen::Z));
        if (name == "zb") return FormElement(FuncElement::generator(ZGen::Zbar));
        if (name == "rhoi") return FormElement(FuncElement::generator(ZGen::RhoInv));
        if (name == "dz") return FormElement::dz();
        if (name == "dzb") return FormElement::dzb();
        if (name == "del") return DiffOp::del();
        if (name == "delb") return DiffOp::delbar();
        if (name == "Zp") return VectorOp::generator(VGen::Zp);
        if (name == "Zm") return VectorOp::generator(VGen::Zm);
        if (name == "H") return VectorOp::generator(VGen::H);
        throw DomainError("atom '" + name + "' requires the w-patch (use a patch-aware command)");
    }
    WGenerators g = w_generators();
    if (name == "z") return LocalElement::z_pow(1);
    if (name == "zb") return embed(FuncElement::generator(ZGen::Zbar));
    if (name == "rhoi") return LocalElement(RationalRho::rho_pow(-1));
    if (name == "dz") return LocalElement::form(1, 0);
    if (name == "dzb") return LocalElement::form(0, 1);
    if (name == "w") return g.w;
    if (name == "wb") return g.wb;
    if (name == "dw") return g.dw;
    if (name == "dwb") return g.dwb;
    throw DomainError("atom '" + name + "' is not available in the w-patch");
}

EvalValue pow_value(const EvalValue& base, int e, Patch patch) {
    if (std::holds_alternative<Scalar>(base)) return std::get<Scalar>(base).pow(e);
    if (e < 0) {
        if (patch == Patch::Z) {
            // negative rho-inverse powers expand to plain rho powers
            if (std::holds_alternative<FormElement>(base)) {
                const FormElement& w = std::get<FormElement>(base);
                if (w.grade() == 0 &&
                    w.coeff(F_ONE) == FuncElement::generator(ZGen::RhoInv))
                    return FormElement(FuncElement::rho().pow(-e));
            }
            throw DomainError("negative powers require the w-patch localization");
        }
        const LocalElement& x = as_local(base);
        // invertible atoms in the localization: z^b, wb and rho powers
        if (x == LocalElement::z_pow(1)) return LocalElement::z_pow(e);
        if (x == LocalElement::z_pow(-1)) return LocalElement::z_pow(-e);
        if (x == LocalElement(RationalRho::rho_pow(-1)))
            return LocalElement(RationalRho::rho_pow(-e));
        WGenerators g = w_generators();
        if (x == g.wb) {
            LocalElement inv = embed(FuncElement::generator(ZGen::Zbar));
            LocalElement acc = LocalElement::one();
            for (int i = 0; i < -e; ++i) acc = mul(acc, inv);
            return acc;
        }
        if (x == embed(FuncElement::generator(ZGen::Zbar))) {
            LocalElement acc = LocalElement::one();
            for (int i = 0; i < -e; ++i) acc = mul(acc, g.wb);
            return acc;
        }
        throw DomainError("negative power of a non-invertible expression");
    }
    EvalValue acc = promote(Scalar::one(), kind_rank(base));
    for (int i = 0; i < e; ++i) acc = mul_values(acc, base);
    return acc;
}

}  // namespace

EvalValue evaluate(const ExprPtr& e, Patch patch) {
    const Expr& x = *e;
    if (auto* n = std::get_if<Expr::Num>(&x.node)) return Scalar(n->value);
    if (auto* a = std::get_if<Expr::Atom>(&x.node)) return atom_value(a->name, patch);
    if (auto* qc = std::get_if<Expr::QIntCall>(&x.node))
        return qc->bar ? qint_bar(qc->n) : qint(qc->n);
    if (auto* p = std::get_if<Expr::Pow>(&x.node))
        return pow_value(evaluate(p->base, patch), p->exp, patch);
    if (auto* g = std::get_if<Expr::Neg>(&x.node)) return negate_value(evaluate(g->arg, patch));
    if (auto* pr = std::get_if<Expr::Product>(&x.node)) {
        EvalValue acc = Scalar::one();
        for (const auto& [op, f] : pr->factors) {
            EvalValue v = evaluate(f, patch);
            if (op == '/') {
                if (!std::holds_alternative<Scalar>(v))
                    throw DomainError("division is only defined by scalars");
                v = std::get<Scalar>(v).inverse();
            }
            acc = mul_values(acc, v);
        }
        return acc;
    }
    const auto& sum = std::get<Expr::Sum>(x.node);
    EvalValue acc = Scalar::zero();
    for (const auto& [sign, t] : sum.terms) {
        EvalValue v = evaluate(t, patch);
        acc = add_values(acc, sign > 0 ? v : negate_value(v));
    }
    return acc;
}

EvalValue evaluate(const std::string& text, Patch patch) { return evaluate(parse(text), patch); }

Scalar as_scalar(const EvalValue& v) {
    if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v);
    throw DomainError("expected a scalar expression");
}

FuncElement as_function(const EvalValue& v) {
    if (std::holds_alternative<Scalar>(v)) return FuncElement(std::get<Scalar>(v));
    if (std::holds_alternative<FormElement>(v)) {
        const FormElement& w = std::get<FormElement>(v);
        if (w.is_zero() || w.grade() == 0) return w.coeff(F_ONE);
    }
    throw DomainError("expected a function (grade-zero) expression");
}

FormElement as_form(const EvalValue& v) {
    if (std::holds_alternative<Scalar>(v)) return FormElement(std::get<Scalar>(v));
    if (std::holds_alternative<FormElement>(v)) return std::get<FormElement>(v);
    throw DomainError("expected a form-algebra expression");
}

LocalElement as_local(const EvalValue& v) {
    if (std::holds_alternative<LocalElement>(v)) return std::get<LocalElement>(v);
    if (std::holds_alternative<Scalar>(v)) return LocalElement(std::get<Scalar>(v));
    if (std::holds_alternative<FormElement>(v)) return embed(std::get<FormElement>(v));
    throw DomainError("expected a localization expression");
}

std::string value_to_string(const EvalValue& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

}  // namespace qsphere
