#include "fwdarc/harness/classify.hpp"

#include "fwdarc/smd.hpp"

namespace fwdarc::harness {

std::string ClassReport::name() const {
  if (smd() && lsd) return "both";
  if (smd()) return "SMD";
  if (lsd) return "LSD";
  return "neither";
}

ClassReport classify(const Digraph& d) {
  ClassReport r;
  r.n = d.order();
  r.m = d.size();
  r.parts = recognize_smd(d);
  r.lsd = recognize_lsd(d);
  r.strong = d.order() > 0 && is_strong(d);
  r.connected = d.order() > 0 && underlying_connected(d);
  if (d.order() >= 3) r.two_connected = underlying_is_2connected(d);
  if (r.parts) {
    const auto sizes = r.parts->sizes();
    r.hc_majority = hc_majority(sizes);
    r.hp_majority = hp_majority(sizes);
  }
  return r;
}

nlohmann::json to_json(const ClassReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["class"] = r.name();
  j["smd"] = r.smd();
  j["lsd"] = r.lsd;
  j["strong"] = r.strong;
  j["connected"] = r.connected;
  j["two_connected"] = r.two_connected ? nlohmann::json(*r.two_connected) : nlohmann::json();
  if (r.parts) {
    j["parts"] = r.parts->parts();
    j["part_sizes"] = r.parts->sizes();
    j["hc_majority"] = *r.hc_majority;
    j["hp_majority"] = *r.hp_majority;
  }
  return j;
}

}  // namespace fwdarc::harness
