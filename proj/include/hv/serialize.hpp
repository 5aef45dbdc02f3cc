#pragma once

#include "hv/algebra.hpp"
#include "hv/module_action.hpp"
#include "hv/polynomial.hpp"
#include "hv/scalar.hpp"
#include "hv/structure_probe.hpp"
#include "hv/verify.hpp"

#include <json.hpp>

#include <string>

namespace hv {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings (or "p" when integral); every reader
// also accepts a JSON integer.

Json to_json(const Rational& q);
Json to_json(const Polynomial& f);     ///< ["c0", "c1", ...], lowest power first
Json to_json(const AlgebraElement& x); ///< [{"kind","i","m","coeff"}, ...]
Json to_json(const DiffOperator& d);   ///< [{"xexp","texp","coeff"}, ...]
Json to_json(const AlgebraParams& ap); ///< {"a","b","epsilon"}
Json to_json(const ModuleParams& mp);  ///< {"lambda","alpha","beta","gamma","kappa":{"i":"p/q"}}
Json to_json(const ReportEntry& e);
Json to_json(const Report& r);
Json to_json(const SpanBasis& s);

Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
AlgebraElement element_from_json(const Json& j);
AlgebraParams algebra_params_from_json(const Json& j);
ModuleParams module_params_from_json(const Json& j);

/// Plain-text rendering: one line per entry plus a summary line.
std::string render_text(const Report& r);

} // namespace hv
