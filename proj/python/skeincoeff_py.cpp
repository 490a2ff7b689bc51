// Python bindings: PD parsing, coefficient tables, L/F, the oracle, moves and checks.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skeincoeff/catalog.hpp"
#include "skeincoeff/coeff_engine.hpp"
#include "skeincoeff/moves.hpp"
#include "skeincoeff/oracle.hpp"
#include "skeincoeff/series.hpp"
#include "skeincoeff/verify.hpp"
#include "skeincoeff/warping.hpp"

namespace py = pybind11;
using namespace skein;

namespace {

EngineOptions options(std::uint64_t budget, bool memo) { return EngineOptions{budget, memo}; }

std::map<int, std::string> table_dict(const CoeffTable& t) {
  std::map<int, std::string> out;
  for (const auto& [n, v] : t.entries()) out[n] = v.str();
  return out;
}

Orientation orientation_for(const Diagram& d, const std::string& signs) {
  if (signs.empty()) return Orientation::all_positive(r_of(d));
  Orientation o = Orientation::parse(signs);
  if (static_cast<int>(o.reversed.size()) != r_of(d)) throw py::value_error("orientation needs one sign per component");
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coefficient polynomials of link diagrams and the Kauffman polynomial";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init<>())
      .def_static("parse", &LaurentPoly::parse)
      .def("__str__", &LaurentPoly::str)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.str() + "')"; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("coeff", &LaurentPoly::coeff)
      .def("terms", &LaurentPoly::terms);

  py::class_<BivariatePoly>(m, "BivariatePoly")
      .def(py::init<>())
      .def_static("parse", &BivariatePoly::parse)
      .def("__str__", &BivariatePoly::str)
      .def("__repr__", [](const BivariatePoly& p) { return "BivariatePoly('" + p.str() + "')"; })
      .def("__eq__", [](const BivariatePoly& a, const BivariatePoly& b) { return a == b; })
      .def("__add__", [](const BivariatePoly& a, const BivariatePoly& b) { return a + b; })
      .def("__sub__", [](const BivariatePoly& a, const BivariatePoly& b) { return a - b; })
      .def("__mul__", [](const BivariatePoly& a, const BivariatePoly& b) { return a * b; })
      .def("shift_z", &BivariatePoly::shift_z)
      .def("shift_y", &BivariatePoly::shift_y)
      .def("subst_y_inverse", &BivariatePoly::subst_y_inverse)
      .def("z_coeff", &BivariatePoly::z_coeff);

  py::enum_<SpliceKind>(m, "SpliceKind").value("A", SpliceKind::A).value("B", SpliceKind::B);

  py::class_<Diagram>(m, "Diagram")
      .def(py::init<>())
      .def_static("from_pd", [](const std::string& pd) { return parse_pd(pd); })
      .def_static("unlink", &Diagram::unlink)
      .def("to_pd", [](const Diagram& d) { return to_pd(d); })
      .def_property_readonly("c", [](const Diagram& d) { return c_of(d); })
      .def_property_readonly("r", [](const Diagram& d) { return r_of(d); })
      .def_property_readonly("free_loops", &Diagram::free_loops)
      .def("writhe", [](const Diagram& d, const std::string& o) { return writhe(d, orientation_for(d, o)); }, py::arg("orientation") = "")
      .def("delta_p", [](const Diagram& d, int p) { return delta_p(d, p); })
      .def("splice", [](const Diagram& d, int p, SpliceKind k) { return splice(d, p, k); })
      .def("delta_shift", [](const Diagram& d, int p, SpliceKind k) { return delta_shift(d, p, k); })
      .def("crossing_change", [](const Diagram& d, int p) { return crossing_change(d, p); })
      .def("mirror", [](const Diagram& d) { return mirror(d); })
      .def("faces", [](const Diagram& d) { return faces(d); })
      .def("satisfies_euler", [](const Diagram& d) { return satisfies_euler(d); })
      .def("warping_degree", [](const Diagram& d) { return warping_degree(d, canonical_base(d)); })
      .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
      .def("__repr__", [](const Diagram& d) { return "Diagram.from_pd('" + to_pd(d) + "')"; });

  m.def("disjoint_union", &disjoint_union);
  m.def("connected_sum", [](const Diagram& a, const Diagram& b, int ea, int eb) { return connected_sum(a, b, EdgeRef{ea}, EdgeRef{eb}); },
        py::arg("a"), py::arg("b"), py::arg("edge_a") = -1, py::arg("edge_b") = -1,
        "Sum along the darts leaving ports edge_a / edge_b (-1 selects a free loop).");

  m.def("alpha_table", [](const Diagram& d, std::uint64_t budget, bool memo) {
    CoeffEngine engine(options(budget, memo));
    return table_dict(engine.alpha_table(d));
  }, py::arg("diagram"), py::arg("budget") = 100'000'000ULL, py::arg("memoize") = false,
     "alpha_n(D; y) as {n: polynomial text}.");
  m.def("kauffman_L", [](const Diagram& d) { return L_of(d); });
  m.def("kauffman_F", [](const Diagram& d, const std::string& o) { return F_of(d, orientation_for(d, o)); },
        py::arg("diagram"), py::arg("orientation") = "");
  m.def("oracle_L", [](const Diagram& d) { return oracle_L(d); });
  m.def("d_const", &d_const);
  m.def("uniqueness_check", [](const Diagram& d) { return uniqueness_check(d).ok; });
  m.def("skein_check", [](const Diagram& d, int p) { return skein_check(d, p).ok; });

  m.def("r1_add", [](const Diagram& d, int port, int chirality, bool right) {
    return r1_add(d, EdgeRef{port}, chirality, right ? KinkSide::Right : KinkSide::Left);
  }, py::arg("diagram"), py::arg("port"), py::arg("chirality"), py::arg("right") = true);
  m.def("r2_add", &r2_add);
  m.def("r3_sites", &r3_sites);
  m.def("r3_apply", &r3_apply);
  m.def("random_diagram", &random_diagram, py::arg("seed"), py::arg("max_c"));
  m.def("random_move_walk", [](const Diagram& d, int steps, std::uint64_t seed, int max_c) {
    WalkResult w = random_move_walk(d, steps, seed, max_c);
    std::vector<std::tuple<std::string, int, int, int>> trace;
    for (const MoveStep& s : w.trace.steps) trace.emplace_back(to_string(s.kind), s.a, s.b, s.flag);
    return std::make_tuple(w.end, trace, r1_writhe_change(d, w.trace));
  }, py::arg("diagram"), py::arg("steps"), py::arg("seed"), py::arg("max_c"),
     "Returns (end diagram, [(move, a, b, flag)], net R1 writhe change).");

  m.def("catalog", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : catalog()) out.emplace_back(e.name, e.pd);
    return out;
  });
  m.def("catalog_diagram", &catalog_diagram);
  m.def("verify", [](const Diagram& d) {
    CoeffEngine engine(options(100'000'000, true));
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : verify_diagram(d, engine).checks) out.emplace_back(c.name, c.ok, c.detail);
    return out;
  });
}
