/**
 * @file render.hpp
 * @brief Stable JSON rendering of engine values and verification reports.
 */
#pragma once

#include <json.hpp>

#include "qsphere/expression.hpp"
#include "qsphere/verify.hpp"

namespace qsphere {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& c);
Json to_json(const FuncElement& f);
Json to_json(const FormElement& w);
Json to_json(const DiffOp& d);
Json to_json(const VectorOp& v);
Json to_json(const LocalElement& x);
Json to_json(const PoissonElement& p);
Json to_json(const std::vector<ClassicalWTerm>& terms);
Json to_json(const EvalValue& v);
Json to_json(const VerifyReport& report);
Json to_json(const NumericCheck& check);

}  // namespace qsphere
