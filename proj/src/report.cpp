#include "ringlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace ringlab {

Json classification_to_json(const Classification& c) {
  Json j;
  j["ring"] = c.ring_name;
  j["size"] = c.size ? Json(*c.size) : Json(nullptr);
  j["probe_bound"] = c.probe_bound ? Json(*c.probe_bound) : Json(nullptr);
  Json classes = Json::object();
  for (const char* name : Classification::class_names()) {
    const Verdict& v = c.at(name);
    Json entry;
    entry["verdict"] = to_string(v.state);
    if (!v.witness.empty()) entry["witness"] = v.witness;
    if (!v.counterexample.empty()) entry["counterexample"] = v.counterexample;
    if (!v.reason.empty()) entry["reason"] = v.reason;
    if (v.bound) entry["bound"] = *v.bound;
    classes[name] = std::move(entry);
  }
  j["classes"] = std::move(classes);
  return j;
}

Classification classification_from_json(const Json& j) {
  Classification c;
  c.ring_name = j.at("ring").get<std::string>();
  if (!j.at("size").is_null()) c.size = j.at("size").get<unsigned long long>();
  if (!j.at("probe_bound").is_null())
    c.probe_bound = j.at("probe_bound").get<long long>();
  for (const char* name : Classification::class_names()) {
    const Json& entry = j.at("classes").at(name);
    Verdict v;
    std::string state = entry.at("verdict").get<std::string>();
    v.state = state == "yes"   ? Verdict::State::yes
              : state == "no"  ? Verdict::State::no
                               : Verdict::State::unknown;
    if (entry.contains("witness")) v.witness = entry["witness"].get<std::string>();
    if (entry.contains("counterexample"))
      v.counterexample = entry["counterexample"].get<std::string>();
    if (entry.contains("reason")) v.reason = entry["reason"].get<std::string>();
    if (entry.contains("bound")) v.bound = entry["bound"].get<long long>();
    c.classes[name] = std::move(v);
  }
  return c;
}

std::string classification_text(const Classification& c) {
  std::ostringstream os;
  os << "ring " << c.ring_name;
  if (c.size)
    os << " (" << *c.size << " elements)";
  else
    os << " (infinite, computable)";
  if (c.probe_bound) os << ", probe bound " << *c.probe_bound;
  os << '\n';
  for (const char* name : Classification::class_names()) {
    const Verdict& v = c.at(name);
    os << "  " << std::left << std::setw(24) << name << ' ' << std::setw(8)
       << to_string(v.state);
    std::string detail;
    if (!v.witness.empty()) detail += "witness " + v.witness;
    if (!v.counterexample.empty()) {
      if (!detail.empty()) detail += "; ";
      detail += "counterexample " + v.counterexample;
    }
    if (v.bound) {
      if (!detail.empty()) detail += "; ";
      detail += "up to bound " + std::to_string(*v.bound);
    }
    if (!v.reason.empty() && v.state == Verdict::State::unknown) {
      if (!detail.empty()) detail += "; ";
      detail += v.reason;
    }
    if (!detail.empty()) os << ' ' << detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace ringlab
