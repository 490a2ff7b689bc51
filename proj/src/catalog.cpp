#include "skeincoeff/catalog.hpp"

#include <stdexcept>

#include "skeincoeff/series.hpp"

namespace skein {

namespace {

std::string sum_pd(const std::string& a, const std::string& b) {
  Diagram da = parse_pd(a);
  Diagram db = parse_pd(b);
  return to_pd(connected_sum(da, db, edge_refs(da).front(), edge_refs(db).front()));
}

std::vector<CatalogEntry> build() {
  const std::string trefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
  const std::string figure8 = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
  const std::string hopf = "X(1,4,2,3) X(3,2,4,1)";
  const std::string knot5_1 = "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)";
  const std::string trefoil_mirror = to_pd(mirror(parse_pd(trefoil)));

  std::vector<CatalogEntry> v{
      {"unknot", "O", {"r=1", "c=0", "knot", "amphichiral", "L=1"}},
      {"unlink2", "O O", {"r=2", "c=0", "split", "L=y^-1*z^-1 + y*z^-1 - 1"}},
      {"unlink3", "O O O", {"r=3", "c=0", "split"}},
      {"kink+", "X(1,1,2,2)", {"r=1", "c=1", "knot", "L=y"}},
      {"kink-", "X(1,2,2,1)", {"r=1", "c=1", "knot", "L=y^-1"}},
      {"hopf", hopf, {"r=2", "c=2", "L=-y^-1*z^-1 - y*z^-1 + 1 + y^-1*z + y*z"}},
      {"trefoil", trefoil,
       {"r=1", "c=3", "knot", "chiral", "F=-y^-4 - 2*y^-2 + y^-5*z + y^-3*z + y^-4*z^2 + y^-2*z^2"}},
      {"figure8", figure8, {"r=1", "c=4", "knot", "amphichiral"}},
      {"5_1", knot5_1, {"r=1", "c=5", "knot", "chiral"}},
      {"5_2", "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)", {"r=1", "c=5", "knot", "chiral"}},
      {"6_1", "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)",
       {"r=1", "c=6", "knot", "chiral"}},
      {"7_1", "X(1,8,2,9) X(3,10,4,11) X(5,12,6,13) X(7,14,8,1) X(9,2,10,3) X(11,4,12,5) X(13,6,14,7)",
       {"r=1", "c=7", "knot", "chiral"}},
      {"whitehead", "X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)", {"r=2", "c=5"}},
      {"borromean", "X(6,1,7,2) X(12,8,9,7) X(4,12,1,11) X(10,5,11,6) X(8,4,5,3) X(2,9,3,10)", {"r=3", "c=6"}},
      {"trefoil#trefoil", sum_pd(trefoil, trefoil), {"r=1", "c=6", "knot", "chiral"}},
      {"square", sum_pd(trefoil, trefoil_mirror), {"r=1", "c=6", "knot", "amphichiral"}},
      {"trefoil#figure8", sum_pd(trefoil, figure8), {"r=1", "c=7", "knot", "chiral"}},
      {"figure8#figure8", sum_pd(figure8, figure8), {"r=1", "c=8", "knot", "amphichiral"}},
      {"trefoil#5_1", sum_pd(trefoil, knot5_1), {"r=1", "c=8", "knot", "chiral"}},
      {"trefoil#hopf", sum_pd(trefoil, hopf), {"r=2", "c=5"}},
      {"hopf+O", hopf + " O", {"r=3", "c=2", "split"}},
  };
  return v;
}

int tag_int(const std::string& tag) { return std::stoi(tag.substr(2)); }

CheckReport fail(std::string detail) { return CheckReport{false, std::move(detail)}; }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

Diagram catalog_diagram(const std::string& name) {
  auto e = find_catalog_entry(name);
  if (!e) throw std::invalid_argument("no catalog entry named '" + name + "'");
  return parse_pd(e->pd);
}

CheckReport check_tag(const Diagram& d, const std::string& tag, CoeffEngine& engine) {
  if (tag.rfind("r=", 0) == 0) {
    if (r_of(d) != tag_int(tag)) return fail(tag + " but r = " + std::to_string(r_of(d)));
    return {};
  }
  if (tag.rfind("c=", 0) == 0) {
    if (c_of(d) != tag_int(tag)) return fail(tag + " but c = " + std::to_string(c_of(d)));
    return {};
  }
  if (tag == "knot") return r_of(d) == 1 ? CheckReport{} : fail("knot but r = " + std::to_string(r_of(d)));
  if (tag == "split") {
    if (pieces(d).size() + static_cast<std::size_t>(d.free_loops()) < 2) return fail("split but only one piece");
    return {};
  }
  if (tag.rfind("L=", 0) == 0) {
    BivariatePoly L = L_of(d, engine);
    if (L != BivariatePoly::parse(tag.substr(2))) return fail("L = " + L.str() + ", expected " + tag.substr(2));
    return {};
  }
  if (tag.rfind("F=", 0) == 0) {
    BivariatePoly F = F_of(d, Orientation::all_positive(r_of(d)), engine);
    if (F != BivariatePoly::parse(tag.substr(2))) return fail("F = " + F.str() + ", expected " + tag.substr(2));
    return {};
  }
  if (tag == "amphichiral" || tag == "chiral") {
    BivariatePoly F = F_of(d, Orientation::all_positive(r_of(d)), engine);
    const bool symmetric = F == subst_y_inverse(F);
    if (symmetric != (tag == "amphichiral")) return fail(tag + " but F = " + F.str());
    return {};
  }
  return fail("unknown tag '" + tag + "'");
}

CheckReport check_entry(const CatalogEntry& e, CoeffEngine& engine) {
  Diagram d;
  try {
    d = parse_pd(e.pd);
  } catch (const ParseError& err) {
    return fail(e.name + ": " + err.what());
  }
  if (!satisfies_euler(d)) return fail(e.name + ": not planar");
  for (const auto& tag : e.tags) {
    CheckReport r = check_tag(d, tag, engine);
    if (!r.ok) return fail(e.name + ": " + r.detail);
  }
  return {};
}

}  // namespace skein
