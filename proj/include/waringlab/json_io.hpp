#pragma once

#include <json.hpp>

#include "waringlab/families.hpp"
#include "waringlab/numsearch.hpp"

namespace waringlab {

/// Insertion-ordered JSON keeps machine-readable output byte-stable.
using Json = nlohmann::ordered_json;

Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json pointset_to_json(const PointSet& a);
PointSet pointset_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json hvector_to_json(const HVector& hv);
Json pair_report_to_json(const PairReport& rep);

Json numdecomp_to_json(const NumDecomp& nd);
Json search_report_to_json(const SearchReport& rep);

}  // namespace waringlab
