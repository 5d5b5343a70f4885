#pragma once

#include <json.hpp>

#include "dynwg/dynweyl.hpp"
#include "dynwg/geomsatake.hpp"
#include "dynwg/rep.hpp"

// JSON encodings. Rationals are always strings ("p/q") so nothing is lost.
namespace dynwg {

using json = nlohmann::ordered_json;

/// {"text", "num": [{"coeff", "powers": {var: exp}}], "den": [{"form": {"x": [...], "h"}, "mult"}]}
json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

/// {algebra, hw, mu, word, target, basis_labels: {source, target}, matrix}
json block_to_json(const OperatorBlock& b);

/// {lambda, mu, geometric, dynamical_shifted, equal}
json rank1_report_to_json(const Rank1Report& r);

json levi_report_to_json(const LeviReport& r);

/// Cache format: {version, type, hw, dim, weights: [...], generators: {E, F}}.
json irrep_to_json(const Irrep& v);
Irrep irrep_from_json(const json& j);

}  // namespace dynwg
