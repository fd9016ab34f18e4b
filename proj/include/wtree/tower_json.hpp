#pragma once

#include <json.hpp>
#include <string>

#include "wtree/tower.hpp"

namespace wtree {

using Json = nlohmann::ordered_json;

/// {"m", "order", ["generators",] "points": [{"sign", "tree", "puncture"}]}.
/// Point ids are array positions, so a loaded model numbers its points 0..k-1.
Json model_to_json(const TowerModel& model);
TowerModel model_from_json(const Json& j);

/// Raw towers add "disks" and per-point "left", "right", "g", "paired_by".
Json raw_to_json(const RawTower& raw);
RawTower raw_from_json(const Json& j);

/// Accepts either format; raw towers are extracted.
TowerModel tower_from_json(const Json& j);

/// Edge addresses in split and puncture records are edge paths in the
/// point's tree, resolved by replaying the moves from `model`.
Json certificate_to_json(const TowerModel& model, const MoveCertificate& cert);
/// A record that cannot be resolved is kept with an invalid edge, so that
/// verification reports it.
MoveCertificate certificate_from_json(const TowerModel& model, const Json& j);

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wtree
