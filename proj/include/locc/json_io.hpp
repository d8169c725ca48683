#pragma once

#include <json.hpp>

#include "locc/characterize.hpp"
#include "locc/oracle.hpp"

namespace locc {

using json = nlohmann::json;

json to_json(const WParams& p);
json to_json(const GhzParams& p);
json to_json(const State& s);
json to_json(const VolumeDimension& d);
json to_json(const MeasureTuple& t);
json to_json(const VolumeReport& r);
json to_json(const ConvertDecision& d);
json to_json(const InversionResult& r);
json to_json(const VolumeEstimate& e);
json to_json(const VerifyReport& r);

// State objects carry "class": "w" | "ghz".
State state_from_json(const json& j);
MeasureTuple measure_tuple_from_json(const json& j);
WMeasureInput w_measure_input_from_json(const json& j);
SchmidtVector schmidt_from_json(const json& j);

}  // namespace locc
