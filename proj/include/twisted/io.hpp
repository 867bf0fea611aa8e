#pragma once

// JSON readers and writers for the interchange formats. Readers throw
// InputError whose message starts with the JSON location of the offending
// value, e.g. "f.json:/opens/2: expected an array of integers".

#include <string>

#include <json.hpp>

#include "twisted/aap.hpp"
#include "twisted/fintop.hpp"
#include "twisted/measures.hpp"
#include "twisted/zline.hpp"

namespace twisted::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

// `where` prefixes error messages; pass the file name or a JSON path.
fintop::FiniteTopology topology_from_json(const Json& j, const std::string& where);
fintop::ContinuousFiniteMap map_from_json(const Json& j, const fintop::FiniteTopology& y,
                                          const fintop::FiniteTopology& z,
                                          const std::string& where);

zline::PeriodicSet periodic_set_from_json(const Json& j, const std::string& where);
// {"z": topology, "f": {"m", "residue_values", "exceptions": [[k, v]]}, "labels"?}
// or {"z": null} for ℤ ⊔ ∅.
zline::TwistedZ zline_model_from_json(const Json& j, const std::string& where);
// {"y": PeriodicSet, "z": [int]}
zline::ZSumSet zsumset_from_json(const Json& j, const std::string& where);

aap::FrequencyBasis basis_from_json(const Json& j, const std::string& where);
aap::TrigPolynomial trig_from_json(const Json& ap, const aap::FrequencyBasis& basis,
                                   const std::string& where);
aap::AAPFunction aap_function_from_json(const Json& j, const std::string& where);

// {"intervals": [[lo, hi]], "boxes": [[[start, length], ...]]}
measures::AapSet aap_set_from_json(const Json& j, const std::string& where);

Json to_json(const fintop::FiniteTopology& t);
Json to_json(const fintop::DiagramReport& r);
Json to_json(const fintop::SweepReport& r);
Json to_json(const zline::PeriodicSet& s);
Json to_json(const zline::ZSumSet& s);
Json to_json(const zline::ZBasisElement& e);
Json to_json(const aap::TrigPolynomial& p);
Json to_json(aap::Complex c);

// One line per key: "key  value" with nested objects flattened to a.b.
std::string to_table(const Json& j);

}  // namespace twisted::io
