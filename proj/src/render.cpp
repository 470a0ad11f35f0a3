#include "qsphere/render.hpp"

#include <sstream>

namespace qsphere {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

Json to_json(const Scalar& c) { return c.to_string(); }

Json to_json(const FuncElement& f) {
    Json terms = Json::array();
    for (const auto& [mono, c] : f.terms())
        terms.push_back({{"coeff", c.to_string()}, {"m", mono.m}, {"a", mono.a}, {"b", mono.b}});
    return {{"kind", "function"}, {"terms", terms}};
}

Json to_json(const FormElement& w) {
    static const int bits[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    Json terms = Json::array();
    for (int idx = 0; idx < 4; ++idx)
        for (const auto& [mono, c] : w.coeff(idx).terms())
            terms.push_back({{"coeff", c.to_string()},
                             {"m", mono.m},
                             {"a", mono.a},
                             {"b", mono.b},
                             {"eps", bits[idx][0]},
                             {"epsbar", bits[idx][1]}});
    int g = w.grade();
    Json grade = g >= 0 ? Json(g) : Json(nullptr);
    return {{"kind", "form"}, {"grade", grade}, {"terms", terms}};
}

Json to_json(const DiffOp& d) {
    Json terms = Json::array();
    for (const auto& [k, c] : d.terms())
        terms.push_back({{"coeff", c.to_string()},
                         {"m", k.mono.m},
                         {"a", k.mono.a},
                         {"b", k.mono.b},
                         {"del", k.dc},
                         {"delb", k.dd}});
    return {{"kind", "diffop"}, {"terms", terms}};
}

Json to_json(const VectorOp& v) {
    Json terms = Json::array();
    for (const auto& [k, w] : v.terms())
        terms.push_back({{"Zp", k.i}, {"H", k.j}, {"Zm", k.k}, {"coeff", to_json(w)}});
    return {{"kind", "vectorop"}, {"terms", terms}};
}

Json to_json(const LocalElement& x) {
    Json terms = Json::array();
    for (const auto& [k, f] : x.terms())
        terms.push_back({{"polepart", f.to_string()},
                         {"b", k.b},
                         {"eps", k.eps},
                         {"epsbar", k.epsbar}});
    return {{"kind", "local"}, {"terms", terms}};
}

Json to_json(const PoissonElement& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({{"coeff", rational_str(c)},
                         {"m", k.m},
                         {"a", k.a},
                         {"b", k.b},
                         {"eps", k.eps},
                         {"epsbar", k.epsbar}});
    return {{"kind", "poisson"}, {"terms", terms}};
}

Json to_json(const std::vector<ClassicalWTerm>& terms) {
    Json arr = Json::array();
    for (const auto& t : terms)
        arr.push_back({{"coeff_u", t.coeff_u.to_string("u")},
                       {"w", t.t},
                       {"dw", t.dw},
                       {"dwb", t.dwb}});
    return {{"kind", "classical-w"}, {"terms", arr}};
}

Json to_json(const EvalValue& v) {
    return std::visit([](const auto& x) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Scalar>)
            return Json{{"kind", "scalar"}, {"value", x.to_string()}};
        else
            return to_json(x);
    }, v);
}

Json to_json(const VerifyReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r = {{"id", row.id}, {"anchor", row.anchor},
                  {"status", row.passed ? "pass" : "fail"}};
        if (!row.passed) r["counterexample"] = row.counterexample;
        rows.push_back(std::move(r));
    }
    return {{"suite", report.suite},
            {"passed", report.passed},
            {"failed", report.failed},
            {"checks", rows}};
}

Json to_json(const NumericCheck& check) {
    auto cplx = [](const std::complex<double>& z) {
        return Json{{"re", z.real()}, {"im", z.imag()}};
    };
    return {{"check", check.name},
            {"value", cplx(check.value)},
            {"expected", cplx(check.expected)},
            {"abs_err", check.abs_err}};
}

}  // namespace qsphere
