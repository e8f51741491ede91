#include "segal/verdict.hpp"

#include <stdexcept>

namespace segal {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Refuted:
      return "REFUTED";
    case VerdictKind::Consistent:
      return "CONSISTENT";
    case VerdictKind::Certified:
      return "CERTIFIED";
  }
  return "?";
}

VerdictKind verdict_kind_from_string(const std::string& s) {
  if (s == "REFUTED") return VerdictKind::Refuted;
  if (s == "CONSISTENT") return VerdictKind::Consistent;
  if (s == "CERTIFIED") return VerdictKind::Certified;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Verdict Verdict::certified(int truncation, std::string note) {
  return Verdict{VerdictKind::Certified, nullptr, truncation, std::move(note)};
}

Verdict Verdict::consistent(int truncation, std::string note, json witness) {
  return Verdict{VerdictKind::Consistent, std::move(witness), truncation, std::move(note)};
}

Verdict Verdict::refuted(int truncation, std::string note, json witness) {
  return Verdict{VerdictKind::Refuted, std::move(witness), truncation, std::move(note)};
}

Verdict meet(const Verdict& a, const Verdict& b) {
  Verdict out = b.kind < a.kind ? b : a;
  out.truncation = std::min(a.truncation, b.truncation);
  return out;
}

Verdict cap_consistent(Verdict v, const std::string& reason) {
  if (v.kind == VerdictKind::Consistent) {
    if (v.note.empty()) v.note = reason;
    return v;
  }
  json w = v.witness;
  std::string prior = to_string(v.kind);
  v.kind = VerdictKind::Consistent;
  v.witness = json{{"capped_from", prior}, {"reason", reason}};
  if (!w.is_null()) v.witness["evidence"] = w;
  v.note = v.note.empty() ? reason : v.note + "; " + reason;
  return v;
}

json to_json(const Verdict& v) {
  json j{{"verdict", to_string(v.kind)}, {"truncation", v.truncation}};
  if (!v.note.empty()) j["note"] = v.note;
  if (!v.witness.is_null()) j["witness"] = v.witness;
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.kind = verdict_kind_from_string(j.at("verdict").get<std::string>());
  v.truncation = j.at("truncation").get<int>();
  if (j.contains("note")) v.note = j["note"].get<std::string>();
  if (j.contains("witness")) v.witness = j["witness"];
  return v;
}

}  // namespace segal
