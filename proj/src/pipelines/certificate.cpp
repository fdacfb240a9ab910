#include "codebounds/pipelines.hpp"

namespace codebounds {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::Inapplicable:
      return "inapplicable";
  }
  return "inapplicable";
}

ordered_json Certificate::to_json() const {
  ordered_json j;
  j["theorem_id"] = theorem_id;
  j["inputs"] = ordered_json::array();
  for (const auto& in : inputs) {
    j["inputs"].push_back({{"name", in.name}, {"value", in.value}, {"provenance", in.provenance}});
  }
  j["steps"] = ordered_json::array();
  for (const auto& s : steps) {
    j["steps"].push_back({{"id", s.id}, {"desc", s.desc}, {"op", s.op}, {"data", s.data}, {"ok", s.ok}});
  }
  j["verdict"] = to_string(verdict);
  j["environment"] = environment;
  return j;
}

std::string Certificate::to_text() const {
  std::string out = "theorem " + theorem_id + "\n";
  for (const auto& in : inputs) out += "input  " + in.name + " = " + in.value.dump() + "  (" + in.provenance + ")\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out += "step " + std::to_string(i + 1) + " [" + (s.ok ? "ok" : "FAIL") + "] " + s.id + ": " + s.desc + "\n";
    out += "       op: " + s.op + "\n";
    for (const auto& [k, v] : s.data.items()) {
      std::string val = v.dump();
      if (val.size() > 160) val = val.substr(0, 157) + "...";
      out += "       " + k + " = " + val + "\n";
    }
  }
  out += "verdict " + std::string(to_string(verdict)) + "\n";
  if (bound) out += "bound " + std::to_string(*bound) + "\n";
  return out;
}

}  // namespace codebounds
