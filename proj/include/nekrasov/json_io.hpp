#pragma once
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "nekrasov/conjecture.hpp"
#include "nekrasov/perturbative.hpp"
#include "nekrasov/sworacle.hpp"

namespace nekrasov {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct JsonFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed-width decimal rendering with `digits` significant digits.
std::string real_to_string(const Real& x, int digits = 40);

// Polynomials as [{exp: [...], c: "p/q"}] with one exponent per variable.
Json poly_to_json(const SparsePoly& p, int nvars);
SparsePoly poly_from_json(const Json& j, int nvars);
// {num: monomials, den: [{factor: monomials, power}]}
Json ratfunc_to_json(const RatFunc& f, int nvars);
RatFunc ratfunc_from_json(const Json& j, int nvars);

// {schema, kind: "exact", order, variables, terms: [{lambda_exp, q_exp, coeff}]}
Json series_to_json(const ExactSeries& s, const SymbolTable& tab);
ExactSeries series_from_json(const Json& j);
// Same layout with kind "numeric" and decimal-string coefficients.
Json series_to_json(const NumericSeries& s, const SymbolTable& tab, int digits = 40);

Json surface_to_json(const ToricChain& chain);
Json report_to_json(const ConjectureReport& rep);
Json report_to_json(const PertCheck& chk);
Json report_to_json(const SWComparison& cmp);

// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace nekrasov
