#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segal/constructions.hpp"
#include "segal/functor.hpp"
#include "segal/fundamental_group.hpp"
#include "segal/homology.hpp"
#include "segal/io.hpp"
#include "segal/kan.hpp"
#include "segal/segal_checks.hpp"
#include "segal/straightening.hpp"
#include "segal/tower.hpp"

using namespace segal;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kInputError = 3;

struct Params {
  int truncation = 5;
  int up_to = 3;
  int ext_truncation = 3;
  int ex_stage = 1;
  std::size_t budget = 1'000'000;
  int n_max = 2;
  std::string group;
  std::string report;
  std::string object;
  bool timing = false;
  std::vector<std::string> inputs;
};

// What a command hands back: a result body, an optional verdict, an optional object to emit.
struct Outcome {
  json result = json::object();
  std::optional<Verdict> verdict;
  std::optional<json> object;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::string& input(const Params& p, std::size_t i, const char* what) {
  if (p.inputs.size() <= i) throw UsageError(std::string("missing input: ") + what);
  return p.inputs[i];
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

OracleOptions options(const Params& p) {
  OracleOptions o;
  o.ex_stage = p.ex_stage;
  o.budget.max_simplices = p.budget;
  return o;
}

// "z2", "z3", "s3", "cyclic:N", "symmetric:N", "trivial", or a group file.
FiniteGroup named_group(const std::string& spec) {
  if (spec == "z2") return FiniteGroup::cyclic(2);
  if (spec == "z3") return FiniteGroup::cyclic(3);
  if (spec == "s3") return FiniteGroup::symmetric(3);
  if (spec == "trivial") return FiniteGroup::trivial();
  if (spec.rfind("cyclic:", 0) == 0) return FiniteGroup::cyclic(to_int(spec.substr(7), "cyclic order"));
  if (spec.rfind("symmetric:", 0) == 0) return FiniteGroup::symmetric(to_int(spec.substr(10), "symmetric degree"));
  return finite_group_from_json(read_json_file(spec));
}

SimplicialGroup simplicial_group(const std::string& spec, int truncation) {
  if (spec.empty()) throw UsageError("a group is required (--group)");
  if (spec.find(".json") != std::string::npos) return simplicial_group_from_json(read_json_file(spec), truncation);
  return SimplicialGroup::constant(named_group(spec), truncation);
}

template <class T>
T load(const std::string& path) {
  AnyObject o = read_object_file(path);
  if (auto* v = std::get_if<T>(&o)) return *v;
  throw ParseError(path + ": unexpected object kind '" + kind_of(o) + "'");
}

// An action given directly, or as a G-space to unstraighten.
SpaceMap load_action(const std::string& path, const Params& p) {
  AnyObject o = read_object_file(path);
  if (auto* m = std::get_if<SpaceMap>(&o)) return *m;
  if (auto* x = std::get_if<GSpace>(&o)) return bar_action(*x, p.ext_truncation, options(p).budget);
  throw ParseError(path + ": expected a space_map or gspace, found '" + kind_of(o) + "'");
}

json report_json(const SegalReport& r) { return to_json(r); }

Outcome with_report(const SegalReport& r) {
  Outcome out;
  out.result = report_json(r);
  out.verdict = r.overall;
  return out;
}

SimplicialSet basic_set(const std::vector<std::string>& a, int N) {
  const std::string& kind = a[0];
  auto arg = [&](std::size_t i, const char* what) {
    if (a.size() <= i) throw UsageError(std::string("build ") + kind + ": missing " + what);
    return to_int(a[i], what);
  };
  if (kind == "delta") return delta(arg(1, "dimension"), N);
  if (kind == "boundary") return boundary(arg(1, "dimension"), N);
  if (kind == "horn") return horn(arg(1, "dimension"), arg(2, "horn index"), N);
  if (kind == "circle") return circle(N);
  if (kind == "torus") return product(circle(N), circle(N)).set();
  if (kind == "point") return point(N);
  if (kind == "discrete") return discrete(arg(1, "point count"), N);
  throw UsageError("unknown build kind '" + kind + "'");
}

Outcome cmd_build(const Params& p) {
  const std::string& kind = input(p, 0, "kind");
  const OracleOptions o = options(p);
  Outcome out;
  auto group_arg = [&](std::size_t i) { return simplicial_group(p.inputs.size() > i ? p.inputs[i] : p.group, p.truncation); };
  if (kind == "bar") {
    const std::string& what = input(p, 1, "group or G-space");
    if (what.find(".json") != std::string::npos && read_json_file(what).value("kind", "") == "gspace")
      out.object = to_json(bar_action(load<GSpace>(what), p.ext_truncation, o.budget));
    else
      out.object = to_json(bar_group(group_arg(1), p.ext_truncation, p.truncation, o.budget));
  } else if (kind == "w") {
    out.object = to_json(w(group_arg(1), p.truncation));
  } else if (kind == "wbar") {
    out.object = to_json(wbar(group_arg(1), p.truncation));
  } else if (kind == "borel") {
    out.object = to_json(borel(load<GSpace>(input(p, 1, "G-space file")), o.budget).set);
  } else if (kind == "group") {
    out.object = to_json(named_group(input(p, 1, "group")));
  } else if (kind == "gspace") {
    const std::string& which = input(p, 1, "action kind");
    SimplicialGroup g = group_arg(2);
    GSpace x;
    if (which == "point") x = GSpace::point(g, p.truncation);
    else if (which == "translation") x = GSpace::translation(g, p.truncation);
    else if (which == "two-translations") x = GSpace::two_translations(g, p.truncation);
    else if (which.rfind("trivial:", 0) == 0) {
      std::string base = which.substr(8);
      SimplicialSet s = base.find(".json") != std::string::npos ? load<SimplicialSet>(base) : basic_set({base}, p.truncation);
      x = GSpace::trivial(s, g);
    } else {
      throw UsageError("unknown G-space kind '" + which + "'");
    }
    out.object = to_json(x);
  } else {
    out.object = to_json(basic_set(p.inputs, p.truncation));
  }
  return out;
}

Outcome cmd_homology(const Params& p) {
  SimplicialSet x = load<SimplicialSet>(input(p, 0, "simplicial set"));
  Outcome out;
  out.result["generator_counts"] = x.generator_counts();
  HomologySignature h = homology(x, std::min(p.truncation, x.truncation()));
  out.result["homology"] = to_json(h);
  // The top computed degree only sees cycles, so the summary stops below it.
  out.result["signature"] = h.to_string(std::max(0, std::min(p.up_to, std::min(p.truncation, x.truncation()) - 1)));
  return out;
}

Outcome cmd_pi1(const Params& p) {
  SimplicialSet x = load<SimplicialSet>(input(p, 0, "simplicial set"));
  Outcome out;
  if (x.size(0) == 0) throw UsageError("pi1 of the empty set");
  Pi1Presentation pr = pi1_presentation(x, 0);
  out.result["presentation"] = to_json(pr, x);
  out.result["summary"] = to_json(summarize(pr.group));
  return out;
}

Outcome cmd_kan(const Params& p) {
  SimplicialSet x = load<SimplicialSet>(input(p, 0, "simplicial set"));
  Outcome out;
  out.verdict = kan_check(x, std::min(p.up_to, x.truncation()));
  out.result["kan"] = to_json(*out.verdict);
  return out;
}

Outcome cmd_fibration(const Params& p) {
  SimplicialMap f = load<SimplicialMap>(input(p, 0, "simplicial map"));
  Outcome out;
  out.verdict = is_fibration(f, std::min(p.up_to, f.source().truncation()));
  out.result["fibration"] = to_json(*out.verdict);
  return out;
}

Outcome cmd_diagonal(const Params& p) {
  SimplicialSpace b = load<SimplicialSpace>(input(p, 0, "simplicial space"));
  SimplicialSet d = diagonal(b);
  Outcome out;
  out.result["generator_counts"] = d.generator_counts();
  out.result["homology"] = to_json(homology(d, d.truncation()));
  out.object = to_json(d);
  return out;
}

Outcome cmd_dstar(const Params& p) {
  SimplicialSet a = load<SimplicialSet>(input(p, 0, "simplicial set"));
  DStar dd = d_star(a, p.ext_truncation, options(p).budget);
  Outcome out;
  json sizes = json::array();
  for (int n = 0; n <= dd.space.ext_truncation(); ++n) sizes.push_back(dd.space.level(n).generator_counts());
  out.result["level_generator_counts"] = std::move(sizes);
  out.object = to_json(dd.space);
  return out;
}

Outcome cmd_unstraighten(const Params& p) {
  GSpace x = load<GSpace>(input(p, 0, "G-space"));
  Unstraightening u = unstraighten(x, p.ext_truncation, p.up_to, options(p));
  Outcome out = with_report(u.report);
  out.object = to_json(u.bar.map);
  return out;
}

Outcome cmd_straighten(const Params& p) {
  SpaceMap pi = load_action(input(p, 0, "action"), p);
  SimplicialGroup g = simplicial_group(p.group, pi.target().int_truncation());
  GSpace x = straighten(pi, g, options(p).budget);
  Outcome out;
  out.result["underlying_homology"] = to_json(homology(x.space(), x.truncation()));
  out.result["quotient_homology"] = to_json(homology(orbit_quotient(x).set, x.truncation()));
  out.object = to_json(x);
  return out;
}

Outcome cmd_roundtrip(const Params& p) {
  GSpace x = load<GSpace>(input(p, 0, "G-space"));
  RoundTrip r = roundtrip(x, p.up_to, options(p).budget);
  Outcome out;
  out.result = to_json(r);
  out.verdict = r.verdict;
  return out;
}

Outcome cmd_loops(const Params& p) {
  SimplicialSpace b = load<SimplicialSpace>(input(p, 0, "simplicial space"));
  LoopsComparison l = loops_comparison(b, options(p));
  Outcome out;
  out.result["pi0_components"] = l.pi0_names;
  out.result["pi0_table"] = l.pi0_table;
  out.result["comparison"] = to_json(l.verdict);
  out.verdict = l.verdict;
  return out;
}

Outcome cmd_audit(const Params& p, bool truncation_given) {
  EndoFunctor l = EndoFunctor::parse(input(p, 0, "functor"));
  return with_report(functor_audit(l, truncation_given ? p.truncation : 3, options(p)));
}

Outcome cmd_apply(const Params& p) {
  EndoFunctor l = EndoFunctor::parse(input(p, 0, "functor"));
  SpaceMap pi = load_action(input(p, 1, "action"), p);
  LevelwiseApplication a = apply_levelwise(l, pi, p.up_to, options(p));
  Outcome out = with_report(a.report);
  out.object = to_json(a.map);
  return out;
}

Outcome cmd_tower(const Params& p, bool ex_given, bool truncation_given) {
  GSpace x = truncate(load<GSpace>(input(p, 0, "G-space")), truncation_given ? p.truncation : 3);
  TowerDiagram t = build_tower(x, p.n_max, ex_given ? p.ex_stage : 0, p.ext_truncation, options(p));
  Outcome out;
  out.result = to_json(t);
  out.verdict = t.overall;
  return out;
}

// {"x", "y", "z": G-spaces, "f": images X -> Y, "g": images Z -> Y}
Outcome cmd_borel_holim(const Params& p) {
  json j = read_json_file(input(p, 0, "G-cospan"));
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("z") || !j.contains("f") || !j.contains("g"))
    throw ParseError("G-cospan: expected fields x, y, z, f, g");
  GCospan c;
  c.x = gspace_from_json(j["x"]);
  c.y = gspace_from_json(j["y"]);
  c.z = gspace_from_json(j["z"]);
  c.f = map_from_json_images(j["f"], c.x.space(), c.y.space());
  c.g = map_from_json_images(j["g"], c.z.space(), c.y.space());
  BorelHolim r = borel_holim_check(c, p.truncation, options(p));
  Outcome out;
  out.result = to_json(r);
  out.verdict = r.verdict;
  return out;
}

int exit_code(const std::optional<Verdict>& v) {
  if (!v) return 0;
  switch (v->kind) {
    case VerdictKind::Certified: return 0;
    case VerdictKind::Refuted: return 1;
    case VerdictKind::Consistent: return 2;
  }
  return 0;
}

void write_json(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

json job_echo(const std::string& command, const Params& p) {
  return {{"command", command},      {"inputs", p.inputs},          {"truncation", p.truncation},
          {"up_to", p.up_to},        {"ext_truncation", p.ext_truncation}, {"ex_stage", p.ex_stage},
          {"budget", p.budget},      {"n_max", p.n_max},            {"group", p.group}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-truncation bar constructions, Segal group actions and their oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  Params p;
  app.add_option("--truncation", p.truncation, "internal truncation N (audit-functor, tower: 3 unless given)")->check(CLI::Range(0, 16));
  app.add_option("--up-to", p.up_to, "highest level or dimension checked")->check(CLI::Range(0, 16));
  app.add_option("--ext-truncation", p.ext_truncation, "external truncation M")->check(CLI::Range(0, 8));
  auto* ex_opt = app.add_option("--ex-stage", p.ex_stage, "Ex^k stage (tower: 0 unless given)")->check(CLI::Range(0, 4));
  app.add_option("--budget", p.budget, "simplex budget per construction")->check(CLI::PositiveNumber);
  app.add_option("--n-max", p.n_max, "top Postnikov stage of a tower")->check(CLI::Range(0, 8));
  app.add_option("--group", p.group, "z2, z3, s3, cyclic:N, symmetric:N, trivial or a group file");
  app.add_option("--report", p.report, "write the report here instead of stdout");
  app.add_option("--object", p.object, "write the constructed object here");
  app.add_flag("--timing", p.timing, "record wall-clock time in the report");
  auto* trunc_opt = app.get_option("--truncation");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"build", "construct an object: delta N | boundary N | horn N I | circle | torus | point | discrete K | "
                "bar G|gspace.json | w G | wbar G | borel gspace.json | group G | gspace KIND G"},
      {"check-segal-space", "Segal space conditions of a simplicial space"},
      {"check-segal-group", "Segal group conditions of a simplicial space"},
      {"check-action", "Segal group action conditions of a space map (or the bar construction of a G-space)"},
      {"cross-check", "the inverted-square cross-check of an action"},
      {"homology", "integral homology of a simplicial set"},
      {"pi1", "edge-path presentation of the fundamental group"},
      {"kan", "Kan condition through --up-to"},
      {"fibration", "Kan fibration condition of a simplicial map"},
      {"diagonal", "diagonal of a simplicial space"},
      {"dstar", "the right adjoint of the diagonal"},
      {"unstraighten", "Bar(X, G) -> Bar(G) with its action checks"},
      {"straighten", "the G-space of an action over Bar(G)"},
      {"roundtrip", "straighten after unstraighten, compared by homology"},
      {"loops", "pi_0 of level 1 against pi_1 of the diagonal"},
      {"audit-functor", "weakly monoidal audit of identity | ex:K | cosk:N | postnikov:N:K | empty"},
      {"apply-functor", "apply a functor level-wise to an action"},
      {"tower", "Postnikov tower of an unstraightened G-space"},
      {"borel-holim", "Borel construction against homotopy pullback for a G-cospan file"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", p.inputs, "input files and arguments");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (command == "build") out = cmd_build(p);
    else if (command == "check-segal-space")
      out = with_report(is_segal_space(load<SimplicialSpace>(input(p, 0, "simplicial space")), p.up_to, options(p)));
    else if (command == "check-segal-group")
      out = with_report(is_segal_group(load<SimplicialSpace>(input(p, 0, "simplicial space")), p.up_to, options(p)));
    else if (command == "check-action")
      out = with_report(is_segal_group_action(load_action(input(p, 0, "action"), p), p.up_to, options(p)));
    else if (command == "cross-check")
      out = with_report(cross_check_inverted(load_action(input(p, 0, "action"), p), p.up_to, options(p)));
    else if (command == "homology") out = cmd_homology(p);
    else if (command == "pi1") out = cmd_pi1(p);
    else if (command == "kan") out = cmd_kan(p);
    else if (command == "fibration") out = cmd_fibration(p);
    else if (command == "diagonal") out = cmd_diagonal(p);
    else if (command == "dstar") out = cmd_dstar(p);
    else if (command == "unstraighten") out = cmd_unstraighten(p);
    else if (command == "straighten") out = cmd_straighten(p);
    else if (command == "roundtrip") out = cmd_roundtrip(p);
    else if (command == "loops") out = cmd_loops(p);
    else if (command == "audit-functor") out = cmd_audit(p, trunc_opt->count() > 0);
    else if (command == "apply-functor") out = cmd_apply(p);
    else if (command == "tower") out = cmd_tower(p, ex_opt->count() > 0, trunc_opt->count() > 0);
    else if (command == "borel-holim") out = cmd_borel_holim(p);
  } catch (const InvalidObject& e) {
    std::cerr << "segal: invalid object\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "segal: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "segal: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    // Inconclusive rather than wrong: report it as CONSISTENT.
    out = Outcome{};
    out.verdict = Verdict::consistent(p.truncation, std::string("budget exceeded: ") + e.what(),
                                      {{"budget", p.budget}});
  }

  try {
    if (command == "build") {
      json obj = *out.object;
      obj["schema_version"] = kSchemaVersion;
      write_json(obj, p.report);
      return 0;
    }
    if (out.object && !p.object.empty()) {
      json obj = *out.object;
      obj["schema_version"] = kSchemaVersion;
      write_json(obj, p.object);
    }
    json report;
    report["schema_version"] = kSchemaVersion;
    report["tool"] = "segal";
    report["tool_version"] = kToolVersion;
    report["job"] = job_echo(command, p);
    report["result"] = out.result;
    if (out.verdict) report["overall"] = to_json(*out.verdict);
    if (p.timing)
      report["timing_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_json(report, p.report);
    if (!p.report.empty() && out.verdict) std::cout << command << ": " << to_string(out.verdict->kind) << "\n";
  } catch (const UsageError& e) {
    std::cerr << "segal: " << e.what() << "\n";
    return kInputError;
  }
  return exit_code(out.verdict);
}
