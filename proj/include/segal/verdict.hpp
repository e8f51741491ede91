// Tri-state verdicts with witnesses.
#pragma once

#include <string>

#include <json.hpp>

namespace segal {

using json = nlohmann::ordered_json;

enum class VerdictKind { Refuted = 0, Consistent = 1, Certified = 2 };

std::string to_string(VerdictKind k);
VerdictKind verdict_kind_from_string(const std::string& s);

struct Verdict {
  VerdictKind kind = VerdictKind::Certified;
  json witness;         // null unless something failed or was capped
  int truncation = 0;   // dimension the verdict is valid up to
  std::string note;

  static Verdict certified(int truncation, std::string note = {});
  static Verdict consistent(int truncation, std::string note, json witness = nullptr);
  static Verdict refuted(int truncation, std::string note, json witness);

  bool refuted() const { return kind == VerdictKind::Refuted; }
  bool certified() const { return kind == VerdictKind::Certified; }
};

/// The weaker of the two; ties keep a.
Verdict meet(const Verdict& a, const Verdict& b);
/// Lowers v to at most CONSISTENT, recording why.
Verdict cap_consistent(Verdict v, const std::string& reason);

json to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

}  // namespace segal
