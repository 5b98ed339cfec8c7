#pragma once

#include "ggms/crystal.hpp"
#include "ggms/verify.hpp"

#include <json.hpp>

namespace ggms {

using nlohmann::json;

json functional_to_json(const Algebra& alg, const Functional& f);
Functional functional_from_json(const Algebra& alg, const json& j);

json polytope_to_json(const RationalPolytope& p, const std::string& cartan_label);
json rim_to_json(const UpperRim& rim);
json monomials_to_json(const Algebra& alg, const std::vector<OrderedMonomial>& ms,
                       const StabilityParam& theta);
json crystal_to_json(const CrystalGraph& g);
std::string crystal_to_text(const CrystalGraph& g);
json suite_to_json(const SuiteResult& r);

} // namespace ggms
