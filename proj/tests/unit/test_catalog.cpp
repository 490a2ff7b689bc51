#include <set>

#include "doctest.h"
#include "skeincoeff/catalog.hpp"
#include "skeincoeff/verify.hpp"

using namespace skein;

TEST_CASE("every catalog entry passes its tags") {
  CoeffEngine engine;
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    CHECK(names.insert(e.name).second);
    CheckReport r = check_entry(e, engine);
    CHECK_MESSAGE(r.ok, r.detail);
  }
  for (const char* required : {"unknot", "unlink2", "kink+", "kink-", "hopf", "trefoil", "figure8"}) CHECK(names.count(required));
}

TEST_CASE("tags really check something") {
  CoeffEngine engine;
  Diagram trefoil = catalog_diagram("trefoil");
  CHECK_FALSE(check_tag(trefoil, "amphichiral", engine).ok);
  CHECK_FALSE(check_tag(trefoil, "r=2", engine).ok);
  CHECK_FALSE(check_tag(trefoil, "L=1", engine).ok);
  CHECK_FALSE(check_tag(trefoil, "bogus", engine).ok);
  CHECK_FALSE(check_tag(catalog_diagram("figure8"), "chiral", engine).ok);
  CHECK_FALSE(check_entry(CatalogEntry{"bad", "X(1,2,3,4)", {}}, engine).ok);
  CHECK_THROWS(catalog_diagram("no-such-knot"));
  CHECK(find_catalog_entry("hopf")->pd == "X(1,4,2,3) X(3,2,4,1)");
}

TEST_CASE("verify_diagram on small inputs") {
  CoeffEngine engine;
  for (const char* name : {"unknot", "hopf", "trefoil", "whitehead"}) {
    DiagramReport rep = verify_diagram(catalog_diagram(name), engine);
    CHECK_MESSAGE(rep.ok(), name);
    CHECK(rep.checks.size() >= 6);
  }
}
