/**
 * @file expression.hpp
 * @brief Surface syntax for the CLI: parser, printer, evaluator.
 *
 * Grammar:
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := atom ['^' int] | '(' expr ')' | '-' factor
 *   atom   := z zb dz dzb rhoi del delb Zp Zm H w wb dw dwb q s lambda
 *             | qint '(' int ')' | integer
 * Division requires a scalar divisor. w-patch atoms are only legal when
 * evaluating in the localization (patch / pb commands).
 */
#pragma once

#include <memory>
#include <variant>

#include "qsphere/poisson.hpp"
#include "qsphere/suq2.hpp"
#include "qsphere/vfields.hpp"

namespace qsphere {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct Num { Rational value; };
    struct Atom { std::string name; };
    struct QIntCall { int n; bool bar; };
    struct Pow { ExprPtr base; int exp; };
    struct Neg { ExprPtr arg; };
    struct Product { std::vector<std::pair<char, ExprPtr>> factors; };  // op '*' or '/'
    struct Sum { std::vector<std::pair<int, ExprPtr>> terms; };         // sign +1 / -1

    std::variant<Num, Atom, QIntCall, Pow, Neg, Product, Sum> node;
};

ExprPtr parse(const std::string& text);
std::string print_expr(const ExprPtr& e);

enum class Patch { Z, W };

// evaluation result: the smallest algebra containing the expression
using EvalValue = std::variant<Scalar, FormElement, DiffOp, VectorOp, LocalElement>;

EvalValue evaluate(const ExprPtr& e, Patch patch);

// convenience: parse + evaluate
EvalValue evaluate(const std::string& text, Patch patch);

// narrowing helpers; throw EngineError("Domain", ...) on kind mismatch
Scalar as_scalar(const EvalValue& v);
FuncElement as_function(const EvalValue& v);
FormElement as_form(const EvalValue& v);
LocalElement as_local(const EvalValue& v);

std::string value_to_string(const EvalValue& v);

}  // namespace qsphere
