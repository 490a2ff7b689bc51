// skeincoeff: coefficient polynomials, Kauffman polynomial and property checks from PD codes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skeincoeff/catalog.hpp"
#include "skeincoeff/coeff_engine.hpp"
#include "skeincoeff/moves.hpp"
#include "skeincoeff/oracle.hpp"
#include "skeincoeff/series.hpp"
#include "skeincoeff/verify.hpp"
#include "skeincoeff/warping.hpp"

using json = nlohmann::ordered_json;
using namespace skein;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EngineOptions engine_options(bool memo) {
  EngineOptions o;
  o.memoize = memo;
  if (const char* env = std::getenv("SKEINCOEFF_BUDGET")) {
    try {
      o.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("SKEINCOEFF_BUDGET is not a number: ") + env);
    }
  }
  return o;
}

// One diagram per non-empty line; '#' starts a comment.
std::vector<Diagram> read_diagrams(const std::string& path, const std::string& pd) {
  if (!path.empty() && !pd.empty()) throw UsageError("give either an input file or --pd, not both");
  if (path.empty() && pd.empty()) throw UsageError("no input: give a PD file or --pd");
  std::string text = pd;
  if (!path.empty()) {
    if (auto e = find_catalog_entry(path); e && !std::ifstream(path)) {
      text = e->pd;
    } else {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open '" + path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
  }
  std::vector<Diagram> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_pd(line));
  }
  if (out.empty()) throw UsageError("input contains no diagram");
  return out;
}

void emit(const std::vector<json>& docs) {
  if (docs.size() == 1)
    std::cout << docs.front().dump(2) << "\n";
  else
    std::cout << json(docs).dump(2) << "\n";
}

json alpha_json(const CoeffTable& t) {
  json a = json::object();
  for (const auto& [n, v] : t.entries()) a[std::to_string(n)] = v.str();
  return a;
}

json orientation_json(const Orientation& o) {
  json a = json::array();
  for (bool rev : o.reversed) a.push_back(rev ? "-" : "+");
  return a;
}

json trace_json(const MoveTrace& t) {
  json a = json::array();
  for (const MoveStep& s : t.steps) a.push_back({{"move", to_string(s.kind)}, {"a", s.a}, {"b", s.b}, {"flag", s.flag}});
  return a;
}

// Port-exact form; PD text renumbers ports, which would invalidate trace darts.
json diagram_json(const Diagram& d) {
  json over = json::array();
  for (Strand s : d.over_strands()) over.push_back(s == Strand::U ? "U" : "V");
  return {{"mates", d.mates()}, {"over", over}, {"free_loops", d.free_loops()}};
}

Diagram diagram_from_json(const json& j) {
  std::vector<Strand> over;
  for (const auto& s : j.at("over")) over.push_back(s.get<std::string>() == "U" ? Strand::U : Strand::V);
  return Diagram(j.at("mates").get<std::vector<int>>(), std::move(over), j.at("free_loops").get<int>());
}

MoveTrace trace_from_json(const json& a) {
  MoveTrace t;
  for (const auto& s : a)
    t.steps.push_back({move_kind_from_string(s.at("move").get<std::string>()), s.at("a").get<int>(), s.at("b").get<int>(),
                       s.value("flag", 0)});
  return t;
}

json checks_json(const DiagramReport& rep) {
  json a = json::array();
  for (const auto& c : rep.checks) a.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return a;
}

// ------------------------------------------------------------------ commands

int cmd_coeffs(const std::string& path, const std::string& pd, bool memo, bool stats) {
  std::vector<json> docs;
  for (const Diagram& d : read_diagrams(path, pd)) {
    CoeffEngine engine(engine_options(memo));
    const BaseSequence a = canonical_base(d);
    json doc;
    doc["alpha"] = alpha_json(engine.alpha_table(d));
    doc["c"] = c_of(d);
    doc["r"] = r_of(d);
    doc["writhe"] = writhe(d, induced_orientation(d, a));
    doc["warping_degree"] = warping_degree(d, a);
    if (stats) {
      const EngineStats& s = engine.stats();
      doc["stats"] = {{"nodes", s.nodes},
                      {"monotone_leaves", s.monotone_leaves},
                      {"split_monotone_leaves", s.split_monotone_leaves},
                      {"cache_hits", s.cache_hits}};
    }
    docs.push_back(doc);
  }
  emit(docs);
  return kOk;
}

int cmd_kauffman(const std::string& path, const std::string& pd, const std::string& orient, bool memo) {
  std::vector<json> docs;
  bool all_agree = true;
  for (const Diagram& d : read_diagrams(path, pd)) {
    Orientation o = Orientation::all_positive(r_of(d));
    if (!orient.empty()) {
      o = Orientation::parse(orient);
      if (static_cast<int>(o.reversed.size()) != r_of(d))
        throw UsageError("--orient has " + std::to_string(o.reversed.size()) + " signs but the diagram has " +
                         std::to_string(r_of(d)) + " components");
    }
    CoeffEngine engine(engine_options(memo));
    KauffmanOracle oracle(engine_options(memo));
    const BivariatePoly L = L_of(d, engine);
    const BivariatePoly L_oracle = oracle.oracle_L(d);
    json doc;
    doc["L"] = L.str();
    doc["F"] = L.shift_y(-writhe(d, o)).str();
    doc["orientation"] = orientation_json(o);
    doc["writhe"] = writhe(d, o);
    doc["L_oracle"] = L_oracle.str();
    doc["agrees_with_coeff_pipeline"] = L == L_oracle;
    all_agree = all_agree && L == L_oracle;
    docs.push_back(doc);
  }
  emit(docs);
  return all_agree ? kOk : kCheckFailed;
}

json criterion_json(const CriterionResult& r) {
  // wall time goes to stderr so that stdout stays reproducible
  std::cerr << "criterion " << r.id << ": " << r.seconds << " s (limit " << r.limit_seconds << " s)\n";
  return {{"criterion", r.id}, {"title", r.title}, {"ok", r.ok}, {"detail", r.detail}, {"limit_seconds", r.limit_seconds}};
}

int cmd_verify(const std::string& path, const std::string& pd, bool whole_catalog, std::size_t max_bases, std::uint64_t seed) {
  bool ok = true;
  json doc;
  if (whole_catalog) {
    if (!path.empty() || !pd.empty()) throw UsageError("--catalog takes no input");
    CoeffEngine engine(engine_options(true));
    json entries = json::array();
    for (const CatalogEntry& e : catalog()) {
      CheckReport tags = check_entry(e, engine);
      DiagramReport rep = verify_diagram(parse_pd(e.pd), engine, max_bases);
      ok = ok && tags.ok && rep.ok();
      entries.push_back({{"name", e.name}, {"ok", tags.ok && rep.ok()}, {"tags", tags.ok ? "ok" : tags.detail}, {"checks", checks_json(rep)}});
    }
    doc["catalog"] = entries;
    SuiteOptions opt;
    opt.seed = seed;
    opt.budget = engine_options(false).budget;
    json suite = json::array();
    for (const CriterionResult& r : run_property_suite(opt)) {
      ok = ok && r.ok;
      suite.push_back(criterion_json(r));
    }
    doc["criteria"] = suite;
    doc["ok"] = ok;
    std::cout << doc.dump(2) << "\n";
    return ok ? kOk : kCheckFailed;
  }
  std::vector<json> docs;
  for (const Diagram& d : read_diagrams(path, pd)) {
    CoeffEngine engine(engine_options(true));
    DiagramReport rep = verify_diagram(d, engine, max_bases);
    ok = ok && rep.ok();
    docs.push_back({{"pd", to_pd(d)}, {"ok", rep.ok()}, {"checks", checks_json(rep)}});
  }
  emit(docs);
  return ok ? kOk : kCheckFailed;
}

int cmd_fuzz(int steps, std::uint64_t seed, int max_c, int walks, const std::string& start_pd, bool memo) {
  if (steps < 0 || walks < 1 || max_c < 1) throw UsageError("--steps >= 0, --walks >= 1, --max-crossings >= 1 required");
  CoeffEngine engine(engine_options(memo));
  bool ok = true;
  json runs = json::array();
  for (int i = 0; i < walks; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    Diagram start = start_pd.empty() ? random_diagram(s, std::max(1, max_c / 2)) : parse_pd(start_pd);
    if (c_of(start) > max_c) throw UsageError("start diagram exceeds --max-crossings");
    WalkResult w = random_move_walk(start, steps, s, max_c);
    Orientation o = Orientation::all_positive(r_of(start));
    Orientation o_end = o;
    Diagram cur = start;
    for (const MoveStep& step : w.trace.steps) {
      MoveOutcome out = apply_move(cur, step);
      o_end = transport_orientation(cur, o_end, out);
      cur = std::move(out.diagram);
    }
    const int k = r1_writhe_change(start, w.trace);
    const bool replay_ok = cur == w.end;
    const bool L_ok = L_of(start, engine).shift_y(k) == L_of(w.end, engine);
    const bool F_ok = F_of(start, o, engine) == F_of(w.end, o_end, engine);
    ok = ok && replay_ok && L_ok && F_ok;
    runs.push_back({{"seed", s},
                    {"start", to_pd(start)},
                    {"end", to_pd(w.end)},
                    {"start_ports", diagram_json(start)},
                    {"end_ports", diagram_json(w.end)},
                    {"trace", trace_json(w.trace)},
                    {"r1_writhe_change", k},
                    {"replay_ok", replay_ok},
                    {"L_scaled", L_ok},
                    {"F_equal", F_ok}});
  }
  json doc;
  doc["walks"] = runs;
  doc["ok"] = ok;
  std::cout << doc.dump(2) << "\n";
  return ok ? kOk : kCheckFailed;
}

// Replays a trace file written by `fuzz` (either one walk object or the whole report).
int cmd_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad trace JSON: ") + e.what());
  }
  json walks = doc.contains("walks") ? doc["walks"] : json::array({doc});
  bool ok = true;
  json out = json::array();
  try {
    for (const auto& w : walks) {
      Diagram start =
          w.contains("start_ports") ? diagram_from_json(w["start_ports"]) : parse_pd(w.at("start").get<std::string>());
      Diagram end = replay(start, trace_from_json(w.at("trace")));
      const bool same = !w.contains("end_ports") || end == diagram_from_json(w["end_ports"]);
      ok = ok && same;
      out.push_back({{"end", to_pd(end)}, {"matches_recorded_end", same}});
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad trace JSON: ") + e.what());
  }
  std::cout << out.dump(2) << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_catalog(const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const CatalogEntry& e : catalog()) {
      std::cout << e.name;
      for (const auto& t : e.tags) std::cout << " " << t;
      std::cout << "\n";
    }
    return kOk;
  }
  if (action == "show") {
    auto e = find_catalog_entry(name);
    if (!e) throw UsageError("no catalog entry named '" + name + "'");
    std::cout << e->pd << "\n";
    return kOk;
  }
  throw UsageError("catalog action must be 'list' or 'show NAME'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient polynomials of link diagrams and the Kauffman polynomial"};
  app.require_subcommand(1);

  std::string path, pd, orient, start_pd, action, name;
  bool memo = false, stats = false, whole_catalog = false;
  std::size_t max_bases = 256;
  std::uint64_t seed = 20240601;
  int steps = 10, max_c = 10, walks = 1;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", path, "PD file (one diagram per line, # comments) or catalog name");
    sub->add_option("--pd", pd, "PD text, e.g. \"X(1,4,2,3) X(3,2,4,1)\"");
  };

  auto* coeffs = app.add_subcommand("coeffs", "alpha_n(D; y) as JSON");
  add_input(coeffs);
  coeffs->add_flag("--memo", memo, "cache sub-diagram tables");
  coeffs->add_flag("--stats", stats, "include recursion statistics");

  auto* kauffman = app.add_subcommand("kauffman", "L, F and the oracle value as JSON");
  add_input(kauffman);
  kauffman->add_option("--orient", orient, "one +/- per component in component order (default all +)");
  kauffman->add_flag("--memo", memo, "cache sub-diagram results");

  auto* verify = app.add_subcommand("verify", "run the property checks on a diagram or the whole catalog");
  add_input(verify);
  verify->add_flag("--catalog", whole_catalog, "verify every catalog entry and run the property suite");
  verify->add_option("--max-bases", max_bases, "base sequences sampled per diagram");
  verify->add_option("--seed", seed, "seed for the random families");

  auto* fuzz = app.add_subcommand("fuzz", "random Reidemeister walks with invariance checks");
  fuzz->add_option("--steps", steps, "move picks per walk");
  fuzz->add_option("--seed", seed, "seed of the first walk");
  fuzz->add_option("--max-crossings", max_c, "crossing cap during the walk");
  fuzz->add_option("--walks", walks, "number of walks");
  fuzz->add_option("--start", start_pd, "start diagram (default: random)");
  fuzz->add_flag("--memo", memo, "cache sub-diagram tables");

  auto* replay_cmd = app.add_subcommand("replay", "replay a trace written by fuzz");
  replay_cmd->add_option("trace", path, "fuzz JSON output")->required();

  auto* cat = app.add_subcommand("catalog", "built-in diagrams");
  cat->add_option("action", action, "list | show")->required();
  cat->add_option("name", name, "entry name for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*coeffs) return cmd_coeffs(path, pd, memo, stats);
    if (*kauffman) return cmd_kauffman(path, pd, orient, memo);
    if (*verify) return cmd_verify(path, pd, whole_catalog, max_bases, seed);
    if (*fuzz) return cmd_fuzz(steps, seed, max_c, walks, start_pd, memo);
    if (*replay_cmd) return cmd_replay(path);
    if (*cat) return cmd_catalog(action, name);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
