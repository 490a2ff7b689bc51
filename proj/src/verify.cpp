#include "skeincoeff/verify.hpp"

#include <chrono>
#include <sstream>

#include "skeincoeff/catalog.hpp"
#include "skeincoeff/moves.hpp"
#include "skeincoeff/oracle.hpp"
#include "skeincoeff/series.hpp"
#include "skeincoeff/warping.hpp"

namespace skein {

bool DiagramReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

bool identity_order(const BaseSequence& a) {
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].component != static_cast<int>(i)) return false;
  return true;
}

std::vector<BaseSequence> sample(std::vector<BaseSequence> all, std::size_t cap) {
  if (cap == 0 || all.size() <= cap) return all;
  std::vector<BaseSequence> out;
  for (std::size_t i = 0; i < cap; ++i) out.push_back(all[i * all.size() / cap]);
  return out;
}

struct BaseAgreement {
  std::size_t same_order = 0, same_order_bad = 0;
  std::size_t permuted = 0, permuted_bad = 0;
  std::string first_failure;
};

void check_bases(const Diagram& d, CoeffEngine& engine, std::size_t cap, BaseAgreement& acc) {
  const CoeffTable reference = engine.alpha_table(d);
  for (const BaseSequence& a : sample(enumerate_bases(d, true), cap)) {
    const bool same = identity_order(a);
    (same ? acc.same_order : acc.permuted) += 1;
    if (engine.alpha_table_with_base(d, a) == reference) continue;
    (same ? acc.same_order_bad : acc.permuted_bad) += 1;
    if (acc.first_failure.empty()) acc.first_failure = to_pd(d);
  }
}

bool within_support(const CoeffTable& t, const Diagram& d) {
  auto b = support_bounds(t);
  return !b || (b->first >= 0 && b->second <= c_of(d) + r_of(d) - 1);
}

NamedCheck mirror_check(const Diagram& d, CoeffEngine& engine) {
  const Orientation o = Orientation::all_positive(r_of(d));
  BivariatePoly lhs = F_of(mirror(d), o, engine);
  BivariatePoly rhs = subst_y_inverse(F_of(d, o, engine));
  if (lhs == rhs) return {"mirror", true, ""};
  return {"mirror", false, "F(mirror) = " + lhs.str() + ", F(y -> 1/y) = " + rhs.str()};
}

std::vector<Diagram> random_family(std::uint64_t seed, int count, int max_c) {
  std::vector<Diagram> out;
  for (int i = 0; i < count; ++i) out.push_back(random_diagram(seed + static_cast<std::uint64_t>(i), max_c));
  return out;
}

std::vector<Diagram> catalog_upto(int max_c) {
  std::vector<Diagram> out;
  for (const auto& e : catalog()) {
    Diagram d = parse_pd(e.pd);
    if (c_of(d) <= max_c) out.push_back(d);
  }
  return out;
}

using Clock = std::chrono::steady_clock;

CheckReport identities_on(const Diagram& d, CoeffEngine& engine) {
  for (int p = 0; p < c_of(d); ++p) {
    CheckReport a = skein_check(d, p, engine);
    if (!a.ok) return {false, to_pd(d) + ": " + a.detail};
    CheckReport b = check_L_skein(d, p, engine);
    if (!b.ok) return {false, to_pd(d) + ": " + b.detail};
  }
  return {};
}

// 1: alpha(O^r) against an independently expanded closed form.
CriterionResult trivial_links(const SuiteOptions& opt) {
  CriterionResult res{1, "trivial-link closed form, 1 <= r <= 8", true, "", 0, 1.0};
  CoeffEngine engine(EngineOptions{opt.budget, false});
  const LaurentPoly s = LaurentPoly::y_plus_inverse();
  for (int r = 1; r <= 8; ++r) {
    std::vector<std::int64_t> row{1};  // Pascal row r-1
    for (int k = 1; k < r; ++k) {
      std::vector<std::int64_t> next(row.size() + 1, 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        next[i] += row[i];
        next[i + 1] += row[i];
      }
      row = next;
    }
    CoeffTable expected;
    for (int n = 0; n < r; ++n) {
      LaurentPoly v = LaurentPoly::constant((n % 2 ? -1 : 1) * row[static_cast<std::size_t>(n)]);
      for (int k = 0; k < r - n - 1; ++k) v = v * s;
      expected.set(n, v);
    }
    if (engine.alpha_table(Diagram::unlink(r)) != expected) {
      res.ok = false;
      res.detail = "mismatch at r = " + std::to_string(r);
      return res;
    }
  }
  res.detail = "r = 1..8 exact";
  return res;
}

// 2: the coefficient skein identity and the series skein relation at every crossing.
CriterionResult identities(const SuiteOptions& opt) {
  CriterionResult res{2, "skein identities (catalog c <= 8, random c <= 6)", true, "", 0, 300.0};
  CoeffEngine engine(EngineOptions{opt.budget, false});
  std::size_t diagrams = 0, crossings = 0;
  auto run = [&](const Diagram& d) {
    ++diagrams;
    crossings += static_cast<std::size_t>(c_of(d));
    CheckReport r = identities_on(d, engine);
    if (!r.ok && res.ok) {
      res.ok = false;
      res.detail = r.detail;
    }
  };
  for (const Diagram& d : catalog_upto(8)) run(d);
  for (const Diagram& d : random_family(opt.seed, opt.random_identity_diagrams, 6)) run(d);
  if (res.ok) res.detail = std::to_string(diagrams) + " diagrams, " + std::to_string(crossings) + " crossings";
  return res;
}

// 3: every base sequence gives the same table; warping-crossing choice is irrelevant.
CriterionResult base_independence(const SuiteOptions& opt) {
  CriterionResult res{3, "base and warping-crossing independence (c <= 5)", true, "", 0, 120.0};
  CoeffEngine engine(EngineOptions{opt.budget, true});
  BaseAgreement acc;
  std::size_t expansions = 0, expansion_bad = 0;
  auto run = [&](const Diagram& d) {
    check_bases(d, engine, 0, acc);
    const CoeffTable reference = engine.alpha_table(d);
    for (const BaseSequence& a : enumerate_bases(d, false)) {
      for (int p : warping_set(d, a)) {
        ++expansions;
        if (engine.expand_at(d, a, p) != reference) ++expansion_bad;
      }
    }
  };
  for (const Diagram& d : catalog_upto(5)) run(d);
  for (const Diagram& d : random_family(opt.seed + 1'000'000, opt.random_base_diagrams, 5)) run(d);
  std::ostringstream os;
  os << "fixed component order: " << acc.same_order - acc.same_order_bad << "/" << acc.same_order
     << " bases agree; permuted component order: " << acc.permuted - acc.permuted_bad << "/" << acc.permuted
     << "; warping-crossing expansions: " << expansions - expansion_bad << "/" << expansions;
  if (!acc.first_failure.empty()) os << "; first failure " << acc.first_failure;
  res.ok = acc.same_order_bad == 0 && acc.permuted_bad == 0 && expansion_bad == 0;
  res.detail = os.str();
  return res;
}

// 4: random Reidemeister walks.
CriterionResult reidemeister(const SuiteOptions& opt) {
  CriterionResult res{4, "Reidemeister walks (L scales by y^k, F identical)", true, "", 0, 300.0};
  CoeffEngine engine(EngineOptions{opt.budget, true});
  std::size_t moves = 0;
  for (int i = 0; i < opt.walks && res.ok; ++i) {
    const std::uint64_t seed = opt.seed + 2'000'000 + static_cast<std::uint64_t>(i);
    Diagram start = random_diagram(seed, 4);
    WalkResult walk = random_move_walk(start, opt.walk_steps, seed, opt.walk_max_c);
    moves += walk.trace.steps.size();
    Orientation o = Orientation::all_positive(r_of(start));
    Orientation o_end = o;
    Diagram cur = start;
    for (const MoveStep& step : walk.trace.steps) {
      MoveOutcome out = apply_move(cur, step);
      o_end = transport_orientation(cur, o_end, out);
      cur = std::move(out.diagram);
    }
    const int k = r1_writhe_change(start, walk.trace);
    if (cur != walk.end) {
      res.ok = false;
      res.detail = "walk " + std::to_string(i) + ": replay differs";
    } else if (L_of(start, engine).shift_y(k) != L_of(walk.end, engine)) {
      res.ok = false;
      res.detail = "walk " + std::to_string(i) + ": L not scaled by y^" + std::to_string(k);
    } else if (F_of(start, o, engine) != F_of(walk.end, o_end, engine)) {
      res.ok = false;
      res.detail = "walk " + std::to_string(i) + ": F changed";
    } else if (!satisfies_euler(walk.end)) {
      res.ok = false;
      res.detail = "walk " + std::to_string(i) + ": end diagram not planar";
    }
  }
  if (res.ok) res.detail = std::to_string(opt.walks) + " walks, " + std::to_string(moves) + " moves";
  return res;
}

// 5: coefficient pipeline against the whole-polynomial oracle.
CriterionResult uniqueness(const SuiteOptions& opt) {
  CriterionResult res{5, "oracle equivalence (catalog c <= 8, random c <= 6)", true, "", 0, 600.0};
  CoeffEngine engine(EngineOptions{opt.budget, false});
  KauffmanOracle oracle(EngineOptions{opt.budget, false});
  std::size_t n = 0;
  auto run = [&](const Diagram& d) {
    ++n;
    CheckReport r = uniqueness_check(d, engine, oracle);
    if (!r.ok && res.ok) {
      res.ok = false;
      res.detail = to_pd(d) + ": " + r.detail;
    }
  };
  for (const Diagram& d : catalog_upto(8)) run(d);
  for (const Diagram& d : random_family(opt.seed + 3'000'000, opt.random_oracle_diagrams, 6)) run(d);
  if (res.ok) res.detail = std::to_string(n) + " diagrams agree";
  return res;
}

// 6: connected sum and disjoint union.
CriterionResult product_laws(const SuiteOptions& opt) {
  CriterionResult res{6, "product laws over {kink+, kink-, hopf, trefoil}", true, "", 0, 120.0};
  CoeffEngine engine(EngineOptions{opt.budget, true});
  const std::vector<std::string> names{"kink+", "kink-", "hopf", "trefoil"};
  std::size_t pairs = 0;
  for (const auto& a : names) {
    for (const auto& b : names) {
      ++pairs;
      CheckReport r = check_product_laws(catalog_diagram(a), catalog_diagram(b), engine);
      if (!r.ok && res.ok) {
        res.ok = false;
        res.detail = a + ", " + b + ": " + r.detail;
      }
    }
  }
  if (res.ok) res.detail = std::to_string(pairs) + " ordered pairs, all summing edges";
  return res;
}

// 7: every table the engine produces, sub-diagrams included, lives in [0, c + r - 1].
CriterionResult vanishing(const SuiteOptions& opt) {
  CriterionResult res{7, "support within [0, c + r - 1]", true, "", 0, 300.0};
  CoeffEngine engine(EngineOptions{opt.budget, false});
  std::size_t top_bad = 0;
  auto run = [&](const Diagram& d) {
    if (!within_support(engine.alpha_table(d), d)) ++top_bad;
  };
  for (const Diagram& d : catalog_upto(8)) run(d);
  for (const Diagram& d : random_family(opt.seed, opt.random_identity_diagrams, 6)) run(d);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = opt.seed + 2'000'000 + static_cast<std::uint64_t>(i);
    run(random_move_walk(random_diagram(seed, 4), opt.walk_steps, seed, opt.walk_max_c).end);
  }
  const EngineStats& st = engine.stats();
  std::ostringstream os;
  os << st.tables << " tables; below 0: " << st.below_zero << "; above c + r - 1: " << st.above_bound;
  res.ok = top_bad == 0 && st.below_zero == 0 && st.above_bound == 0;
  res.detail = os.str();
  return res;
}

// 8: F(mirror D) = F(D)(y -> 1/y).
CriterionResult mirror_property(const SuiteOptions& opt) {
  CriterionResult res{8, "mirror symmetry on the catalog", true, "", 0, 120.0};
  CoeffEngine engine(EngineOptions{opt.budget, true});
  for (const Diagram& d : catalog_upto(8)) {
    NamedCheck c = mirror_check(d, engine);
    if (!c.ok) {
      res.ok = false;
      res.detail = to_pd(d) + ": " + c.detail;
      return res;
    }
  }
  const Diagram fig8 = catalog_diagram("figure8");
  const BivariatePoly F = F_of(fig8, Orientation::all_positive(1), engine);
  if (F != subst_y_inverse(F)) {
    res.ok = false;
    res.detail = "figure-eight F not fixed by y -> 1/y: " + F.str();
    return res;
  }
  res.detail = std::to_string(catalog_upto(8).size()) + " catalog diagrams; figure-eight F is y-symmetric";
  return res;
}

}  // namespace

DiagramReport verify_diagram(const Diagram& d, CoeffEngine& engine, std::size_t max_bases) {
  DiagramReport rep;
  {
    CheckReport r = identities_on(d, engine);
    rep.checks.push_back({"skein", r.ok, r.detail});
  }
  {
    BaseAgreement acc;
    check_bases(d, engine, max_bases, acc);
    std::ostringstream os;
    os << acc.same_order + acc.permuted << " bases, " << acc.same_order_bad << " same-order and " << acc.permuted_bad
       << " permuted-order disagreements";
    rep.checks.push_back({"base_independence", acc.same_order_bad == 0 && acc.permuted_bad == 0, os.str()});
  }
  {
    CoeffTable t = engine.alpha_table(d);
    auto b = support_bounds(t);
    std::string detail = b ? "[" + std::to_string(b->first) + ", " + std::to_string(b->second) + "]" : "empty";
    rep.checks.push_back({"support_bounds", within_support(t, d), detail + " within [0, " + std::to_string(c_of(d) + r_of(d) - 1) + "]"});
  }
  {
    KauffmanOracle oracle(engine.options());
    CheckReport r = uniqueness_check(d, engine, oracle);
    rep.checks.push_back({"oracle", r.ok, r.detail});
  }
  rep.checks.push_back(mirror_check(d, engine));
  for (const char* partner : {"kink+", "hopf"}) {
    CheckReport r = check_product_laws(d, catalog_diagram(partner), engine);
    rep.checks.push_back({std::string("product_laws_") + partner, r.ok, r.detail});
  }
  return rep;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  const auto t0 = Clock::now();
  CriterionResult res;
  switch (id) {
    case 1: res = trivial_links(options); break;
    case 2: res = identities(options); break;
    case 3: res = base_independence(options); break;
    case 4: res = reidemeister(options); break;
    case 5: res = uniqueness(options); break;
    case 6: res = product_laws(options); break;
    case 7: res = vanishing(options); break;
    case 8: res = mirror_property(options); break;
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (res.seconds > res.limit_seconds) {
    res.ok = false;
    res.detail += "; exceeded time limit";
  }
  return res;
}

std::vector<CriterionResult> run_property_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 2; id <= 8; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace skein
