// Command-line interface to the quantum-sphere engine.
//
// Exit codes: 0 success, 1 parse error, 2 domain error (NotIntegrable,
// PoleAtLimit, ...), 3 verification failure.

#include <CLI11.hpp>

#include <iostream>

#include "qsphere/integration.hpp"
#include "qsphere/render.hpp"

using namespace qsphere;

namespace {

constexpr const char* kVersion = "1";

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = 20240101;
    int max_degree = 6;
};

void emit(const GlobalOptions& g, const std::string& command, const Json& result) {
    if (g.format == "json") {
        Json top = {{"version", kVersion}, {"command", command}, {"result", result}};
        std::cout << top.dump(2) << "\n";
    } else {
        if (result.is_string()) std::cout << result.get<std::string>() << "\n";
        else std::cout << result.dump(2) << "\n";
    }
}

void emit_value(const GlobalOptions& g, const std::string& command, const EvalValue& v) {
    if (g.format == "json") emit(g, command, to_json(v));
    else std::cout << value_to_string(v) << "\n";
}

int emit_error(const GlobalOptions& g, const std::string& command, const EngineError& e) {
    if (g.format == "json") {
        Json top = {{"version", kVersion},
                    {"command", command},
                    {"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cout << top.dump(2) << "\n";
    } else {
        std::cerr << e.code() << ": " << e.what() << "\n";
    }
    if (e.code() == "ParseError") return 1;
    if (e.code() == "VerificationFailure") return 3;
    return 2;
}

std::string describe_report(const VerifyReport& r) {
    std::string out = "suite " + r.suite + ": " + std::to_string(r.passed) + " passed, " +
                      std::to_string(r.failed) + " failed\n";
    for (const auto& row : r.rows) {
        out += std::string("  [") + (row.passed ? "pass" : "FAIL") + "] " + row.id + "  (" +
               row.anchor + ")";
        if (!row.passed) out += "\n         " + row.counterexample;
        out += "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the standard quantum 2-sphere"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", global.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--max-degree", global.max_degree, "degree bound for identity sweeps")
        ->capture_default_str();

    std::string expr_a, expr_b, patch = "z", variant = "sphere", domain = "sphere",
                suite = "all", to_patch = "w";

    auto* c_norm = app.add_subcommand("normalize", "normalize an expression");
    c_norm->add_option("expr", expr_a)->required();
    c_norm->add_option("--patch", patch)->check(CLI::IsMember({"z", "w"}));

    auto* c_mul = app.add_subcommand("mul", "multiply two expressions");
    c_mul->add_option("lhs", expr_a)->required();
    c_mul->add_option("rhs", expr_b)->required();
    c_mul->add_option("--patch", patch)->check(CLI::IsMember({"z", "w"}));

    auto* c_comm = app.add_subcommand("comm", "commutator lhs*rhs - rhs*lhs");
    c_comm->add_option("lhs", expr_a)->required();
    c_comm->add_option("rhs", expr_b)->required();
    c_comm->add_option("--patch", patch)->check(CLI::IsMember({"z", "w"}));

    auto* c_star = app.add_subcommand("star", "the *-involution");
    c_star->add_option("expr", expr_a)->required();
    c_star->add_option("--variant", variant)->check(CLI::IsMember({"sphere", "plane"}));

    auto* c_d = app.add_subcommand("d", "exterior derivative");
    c_d->add_option("expr", expr_a)->required();

    auto* c_act = app.add_subcommand("act", "apply an operator to a form or function");
    c_act->add_option("op", expr_a)->required();
    c_act->add_option("expr", expr_b)->required();

    auto* c_int = app.add_subcommand("integrate", "invariant integral");
    c_int->add_option("expr", expr_a)->required();
    c_int->add_option("--domain", domain)->check(CLI::IsMember({"sphere", "plane"}));

    auto* c_pb = app.add_subcommand("pb", "Poisson bracket (commutator limit)");
    c_pb->add_option("lhs", expr_a)->required();
    c_pb->add_option("rhs", expr_b)->required();
    c_pb->add_option("--patch", patch)->check(CLI::IsMember({"z", "w"}));

    auto* c_patch = app.add_subcommand("patch", "convert a z-patch expression");
    c_patch->add_option("expr", expr_a)->required();
    c_patch->add_option("--to", to_patch)->check(CLI::IsMember({"w"}));

    auto* c_limit = app.add_subcommand("limit-classical", "classical limit of an expression");
    c_limit->add_option("expr", expr_a)->required();

    auto* c_verify = app.add_subcommand("verify", "run identity suites");
    c_verify->add_option("--suite", suite);

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    try {
        Patch p = patch == "w" ? Patch::W : Patch::Z;
        if (c_norm->parsed()) {
            emit_value(global, command, evaluate(expr_a, p));
        } else if (c_mul->parsed()) {
            EvalValue a = evaluate(expr_a, p), b = evaluate(expr_b, p);
            if (p == Patch::W) emit_value(global, command, mul(as_local(a), as_local(b)));
            else emit_value(global, command, mul(as_form(a), as_form(b)));
        } else if (c_comm->parsed()) {
            EvalValue a = evaluate(expr_a, p), b = evaluate(expr_b, p);
            if (p == Patch::W) {
                LocalElement x = as_local(a), y = as_local(b);
                emit_value(global, command, mul(x, y) - mul(y, x));
            } else {
                FormElement x = as_form(a), y = as_form(b);
                emit_value(global, command, mul(x, y) - mul(y, x));
            }
        } else if (c_star->parsed()) {
            EvalValue a = evaluate(expr_a, Patch::Z);
            StarVariant v = variant == "plane" ? StarVariant::Plane : StarVariant::Sphere;
            if (std::holds_alternative<DiffOp>(a))
                emit_value(global, command, star_diffop(std::get<DiffOp>(a), v));
            else
                emit_value(global, command, star_form(as_form(a)));
        } else if (c_d->parsed()) {
            emit_value(global, command, exterior_d(as_form(evaluate(expr_a, Patch::Z))));
        } else if (c_act->parsed()) {
            EvalValue op = evaluate(expr_a, Patch::Z);
            EvalValue arg = evaluate(expr_b, Patch::Z);
            if (std::holds_alternative<DiffOp>(op))
                emit_value(global, command,
                           FormElement(apply_diffop(std::get<DiffOp>(op), as_function(arg))));
            else if (std::holds_alternative<VectorOp>(op))
                emit_value(global, command, vf_act(std::get<VectorOp>(op), as_form(arg)));
            else
                throw EngineError("Domain", "operator argument must contain del/delb or Zp/Zm/H");
        } else if (c_int->parsed()) {
            FuncElement f = as_function(evaluate(expr_a, Patch::Z));
            Scalar v = domain == "plane" ? integrate_plane(f) : integrate_sphere(f);
            if (global.format == "json")
                emit(global, command, Json{{"value", v.to_string()}, {"status", "finite"}});
            else
                std::cout << v.to_string() << "\n";
        } else if (c_pb->parsed()) {
            if (p == Patch::W) {
                LocalElement x = as_local(evaluate(expr_a, Patch::W));
                LocalElement y = as_local(evaluate(expr_b, Patch::W));
                auto bracket = poisson_bracket_w(x, y);
                if (global.format == "json") emit(global, command, to_json(bracket));
                else std::cout << classical_w_to_string(bracket) << "\n";
            } else {
                FormElement x = as_form(evaluate(expr_a, Patch::Z));
                FormElement y = as_form(evaluate(expr_b, Patch::Z));
                PoissonElement bracket = poisson_bracket(x, y);
                if (global.format == "json") emit(global, command, to_json(bracket));
                else std::cout << bracket.to_string() << "\n";
            }
        } else if (c_patch->parsed()) {
            LocalElement x = embed(as_form(evaluate(expr_a, Patch::Z)));
            if (global.format == "json") emit(global, command, to_json(x));
            else std::cout << x.to_string() << "\n";
        } else if (c_limit->parsed()) {
            PoissonElement x = classical_limit_elem(as_form(evaluate(expr_a, Patch::Z)));
            if (global.format == "json") emit(global, command, to_json(x));
            else std::cout << x.to_string() << "\n";
        } else if (c_verify->parsed()) {
            VerifyOptions opts;
            opts.max_degree = global.max_degree;
            opts.seed = global.seed;
            auto reports = run_suites(suite, opts);
            bool all_ok = true;
            Json arr = Json::array();
            std::string text;
            for (const auto& r : reports) {
                all_ok = all_ok && r.ok();
                arr.push_back(to_json(r));
                text += describe_report(r);
            }
            if (global.format == "json") emit(global, command, arr);
            else std::cout << text;
            if (!all_ok) return 3;
        }
    } catch (const EngineError& e) {
        return emit_error(global, command, e);
    }
    return 0;
}
