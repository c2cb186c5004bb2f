#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fwdarc/digraph.hpp"

namespace fwdarc::harness {

struct ClassReport {
  int n = 0;
  std::size_t m = 0;
  std::optional<PartiteStructure> parts;  // set iff SMD
  bool lsd = false;
  bool strong = false;
  bool connected = false;
  std::optional<bool> two_connected;  // n >= 3 only
  std::optional<bool> hc_majority;    // SMD only
  std::optional<bool> hp_majority;

  bool smd() const { return parts.has_value(); }
  // "SMD", "LSD", "both" or "neither".
  std::string name() const;
};

ClassReport classify(const Digraph& d);
nlohmann::json to_json(const ClassReport& r);

}  // namespace fwdarc::harness
