#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "klv/closure.hpp"
#include "klv/errors.hpp"
#include "klv/hecke.hpp"
#include "klv/io.hpp"
#include "klv/kl_classical.hpp"
#include "klv/orbit_model.hpp"
#include "klv/poly.hpp"
#include "klv/verify.hpp"
#include "klv/weyl.hpp"

namespace py = pybind11;
using namespace klv;

namespace {

// cpp_int round-trips through its decimal form; python ints are unbounded so
// nothing is lost.
py::object to_py_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

Int to_cpp_int(const py::handle& h) {
  if (!py::isinstance<py::int_>(h))
    throw py::type_error("expected an int coefficient");
  return Int(py::str(h).cast<std::string>());
}

py::list coeff_list(const Poly& p) {
  py::list out;
  for (const Int& c : p.coeffs()) out.append(to_py_int(c));
  return out;
}

Poly poly_from_sequence(const py::sequence& seq) {
  std::vector<Int> c;
  c.reserve(py::len(seq));
  for (const py::handle& h : seq) c.push_back(to_cpp_int(h));
  return Poly(std::move(c));
}

}  // namespace

PYBIND11_MODULE(_klv, m) {
  m.doc() =
      "K-orbit closures and Kazhdan-Lusztig-Vogan polynomials for symmetric "
      "pairs";
#ifdef KLV_VERSION
  m.attr("__version__") = KLV_VERSION;
#endif

  static py::exception<EngineError> engine_error;
  engine_error = py::exception<EngineError>(m, "EngineError",
                                            PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const EngineError& e) {
      std::string msg = e.what();
      if (!e.detail().empty() && e.detail() != "{}")
        msg += "\ndetail: " + e.detail();
      py::set_error(engine_error, msg.c_str());
    }
  });
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);

  py::class_<Poly>(m, "Poly")
      .def(py::init<>())
      .def(py::init(&poly_from_sequence), py::arg("coeffs"),
           "Build from ascending coefficients; trailing zeros are trimmed.")
      .def_static("zero", &Poly::zero)
      .def_static("one", &Poly::one)
      .def_static("q", &Poly::q)
      .def_static("constant",
                  [](const py::int_& c) { return Poly::constant(to_cpp_int(c)); })
      .def_property_readonly("degree", &Poly::degree)
      .def("is_zero", &Poly::is_zero)
      .def("is_one", &Poly::is_one)
      .def("coeffs", &coeff_list)
      .def("coeff",
           [](const Poly& p, std::size_t i) { return to_py_int(p.coeff(i)); },
           py::arg("i"))
      .def("eval_at_one",
           [](const Poly& p) { return to_py_int(p.eval_at_one()); })
      .def("shifted", &Poly::shifted, py::arg("k"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &Poly::str)
      .def("__repr__",
           [](const Poly& p) { return "Poly(" + p.str() + ")"; });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("one_line"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("from_payload", &Permutation::from_payload,
                  py::arg("digits"))
      .def_property_readonly("n", &Permutation::n)
      .def("one_line", &Permutation::one_line)
      .def("length", &Permutation::length)
      .def("left_mult", &Permutation::left_mult, py::arg("s"))
      .def("inverse", &Permutation::inverse)
      .def("payload", &Permutation::payload)
      .def("__call__", &Permutation::operator(), py::arg("i"))
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__repr__", [](const Permutation& w) {
        return "Permutation(" + w.payload() + ")";
      });

  m.def("bruhat_leq", &bruhat_leq, py::arg("x"), py::arg("w"));
  m.def("symmetric_group", &symmetric_group, py::arg("n"),
        py::arg("max_n") = kDefaultWeylCap);

  py::class_<KLTable>(m, "KLTable")
      .def(py::init<int, int>(), py::arg("n"),
           py::arg("max_n") = kDefaultWeylCap)
      .def_property_readonly("n", &KLTable::n)
      .def("group", &KLTable::group)
      .def("index_of", &KLTable::index_of, py::arg("w"))
      .def("poly",
           [](KLTable& t, int x, int w) -> Poly { return t.poly(x, w); },
           py::arg("x"), py::arg("w"))
      .def("poly",
           [](KLTable& t, const Permutation& x, const Permutation& w) -> Poly {
             return t.poly(x, w);
           },
           py::arg("x"), py::arg("w"))
      .def("mu",
           [](KLTable& t, int z, int w) { return to_py_int(t.mu(z, w)); },
           py::arg("z"), py::arg("w"))
      .def("leq", &KLTable::leq, py::arg("x"), py::arg("w"))
      .def("length", &KLTable::length, py::arg("w"))
      .def("poly_via_descent", &KLTable::poly_via_descent, py::arg("x"),
           py::arg("w"), py::arg("s"));

  py::enum_<ModelKind>(m, "ModelKind")
      .value("CLANS", ModelKind::Clans)
      .value("DIAGONAL", ModelKind::Diagonal);

  py::enum_<RootType>(m, "RootType")
      .value("COMPLEX_ASCENT", RootType::ComplexAscent)
      .value("COMPLEX_DESCENT", RootType::ComplexDescent)
      .value("IMAGINARY_COMPACT", RootType::ImaginaryCompact)
      .value("NONCOMPACT_TYPE_I", RootType::NoncompactTypeI)
      .value("REAL_PARITY", RootType::RealParity)
      .value("REAL_NONPARITY", RootType::RealNonparity)
      .value("TYPE_II_UNSUPPORTED", RootType::TypeIIUnsupported);

  m.def("root_type_name",
        [](RootType t) { return std::string(root_type_name(t)); },
        py::arg("t"));
  m.def("backend_tag",
        [](ModelKind k) { return std::string(backend_tag(k)); },
        py::arg("kind"));

  py::class_<OrbitId>(m, "OrbitId")
      .def_readonly("backend", &OrbitId::backend)
      .def_readonly("payload", &OrbitId::payload)
      .def_readonly("d", &OrbitId::d)
      .def(py::self == py::self)
      .def("__repr__", [](const OrbitId& o) {
        return "OrbitId(" + o.payload + ", d=" + std::to_string(o.d) + ")";
      });

  py::class_<OrbitModel>(m, "OrbitModel")
      .def_property_readonly("kind", &OrbitModel::kind)
      .def_property_readonly("name", &OrbitModel::name)
      .def_property_readonly("rank", &OrbitModel::rank)
      .def("size", &OrbitModel::size)
      .def("orbits", &OrbitModel::orbits)
      .def("orbit", &OrbitModel::orbit, py::arg("i"),
           py::return_value_policy::copy)
      .def("d", &OrbitModel::d, py::arg("i"))
      .def("index_of", &OrbitModel::index_of, py::arg("payload"))
      .def("make_orbit", &OrbitModel::make_orbit, py::arg("payload"))
      .def("classify", py::overload_cast<int, int>(&OrbitModel::classify,
                                                   py::const_),
           py::arg("s"), py::arg("i"))
      .def("cross", py::overload_cast<int, int>(&OrbitModel::cross,
                                                py::const_),
           py::arg("s"), py::arg("i"))
      .def("cayley_up", py::overload_cast<int, int>(&OrbitModel::cayley_up,
                                                    py::const_),
           py::arg("s"), py::arg("i"))
      .def("cayley_down_fiber",
           py::overload_cast<int, int>(&OrbitModel::cayley_down_fiber,
                                       py::const_),
           py::arg("s"), py::arg("i"))
      .def("monoid_raise",
           py::overload_cast<int, int>(&OrbitModel::monoid_raise, py::const_),
           py::arg("s"), py::arg("i"))
      .def("string_set", py::overload_cast<int, int>(&OrbitModel::string_set,
                                                     py::const_),
           py::arg("s"), py::arg("i"))
      .def("raising_pair",
           py::overload_cast<int>(&OrbitModel::raising_pair, py::const_),
           py::arg("i"))
      .def("raising_pairs", &OrbitModel::raising_pairs, py::arg("i"))
      .def("__repr__", [](const OrbitModel& m_) {
        return "OrbitModel(" + m_.name() + ")";
      });

  m.def("make_clan_model", &make_clan_model, py::arg("p"), py::arg("q"),
        py::arg("max_size") = kDefaultClanCap);
  m.def("make_diagonal_model", &make_diagonal_model, py::arg("n"),
        py::arg("max_size") = kDefaultDiagonalCap);

  py::class_<ClosurePoset>(m, "ClosurePoset")
      .def("size", &ClosurePoset::size)
      .def("ground", &ClosurePoset::ground)
      .def("leq", py::overload_cast<int, int>(&ClosurePoset::leq, py::const_),
           py::arg("a"), py::arg("b"))
      .def("down_set", &ClosurePoset::down_set, py::arg("b"))
      .def("up_set", &ClosurePoset::up_set, py::arg("a"))
      .def("interval",
           py::overload_cast<int, int>(&ClosurePoset::interval, py::const_),
           py::arg("a"), py::arg("b"))
      .def("covers", &ClosurePoset::covers);

  m.def("build_poset", &build_poset, py::arg("model"));

  py::class_<ModuleElement>(m, "ModuleElement")
      .def(py::init<>())
      .def_static("basis", &ModuleElement::basis, py::arg("i"))
      .def("terms", &ModuleElement::terms)
      .def("coeff", &ModuleElement::coeff, py::arg("i"))
      .def("is_zero", &ModuleElement::is_zero)
      .def("add", &ModuleElement::add, py::arg("i"), py::arg("p"))
      .def("add_scaled", &ModuleElement::add_scaled, py::arg("e"),
           py::arg("factor"))
      .def(py::self == py::self);

  m.def("t_action", &t_action, py::arg("model"), py::arg("s"), py::arg("e"));

  py::class_<KLVTable>(m, "KLVTable")
      .def_static("from_columns", &KLVTable::from_columns, py::arg("name"),
                  py::arg("kind"), py::arg("orbits"), py::arg("cols"))
      .def_property_readonly("model_name", &KLVTable::model_name)
      .def_property_readonly("kind", &KLVTable::kind)
      .def("size", &KLVTable::size)
      .def("orbits", &KLVTable::orbits)
      .def("index_of", &KLVTable::index_of, py::arg("payload"))
      .def("poly",
           [](const KLVTable& t, int lower, int upper) -> Poly {
             return t.poly(lower, upper);
           },
           py::arg("lower"), py::arg("upper"))
      .def("poly",
           [](const KLVTable& t, const OrbitId& lower, const OrbitId& upper) {
             return t.poly(lower, upper);
           },
           py::arg("lower"), py::arg("upper"))
      .def("column", &KLVTable::column, py::arg("upper"));

  py::class_<MuTable>(m, "MuTable")
      .def("size", &MuTable::size)
      .def("mu",
           [](const MuTable& t, int lower, int upper) {
             return to_py_int(t.mu(lower, upper));
           },
           py::arg("lower"), py::arg("upper"))
      .def("row", [](const MuTable& t, int upper) {
        py::dict out;
        for (const auto& [lower, value] : t.row(upper))
          out[py::int_(lower)] = to_py_int(value);
        return out;
      });

  py::class_<KLVResult>(m, "KLVResult")
      .def_readonly("table", &KLVResult::table)
      .def_readonly("mu", &KLVResult::mu);

  m.def("klv_table", &klv_table, py::arg("model"));
  m.def("c_column", &c_column, py::arg("result"), py::arg("upper"));
  m.def("c_basis_via", &c_basis_via, py::arg("model"), py::arg("result"),
        py::arg("upper"), py::arg("s"), py::arg("lower"));

  py::enum_<ViolationKind>(m, "ViolationKind")
      .value("SEMICONTINUITY", ViolationKind::Semicontinuity)
      .value("CONSTANT_TERM", ViolationKind::ConstantTerm)
      .value("DEGREE", ViolationKind::Degree)
      .value("SUPPORT", ViolationKind::Support)
      .value("REACHABILITY", ViolationKind::Reachability)
      .value("ROOT_TYPE", ViolationKind::RootType)
      .value("MISMATCH", ViolationKind::Mismatch);

  m.def("violation_kind_name",
        [](ViolationKind k) { return std::string(violation_kind_name(k)); },
        py::arg("k"));

  py::class_<Violation>(m, "Violation")
      .def_readonly("kind", &Violation::kind)
      .def_readonly("orbits", &Violation::orbits)
      .def_readonly("coeff_index", &Violation::coeff_index)
      .def_readonly("observed", &Violation::observed)
      .def_readonly("detail", &Violation::detail);

  py::class_<ReportCounts>(m, "ReportCounts")
      .def_readonly("orbits", &ReportCounts::orbits)
      .def_readonly("comparable_pairs", &ReportCounts::comparable_pairs)
      .def_readonly("chains", &ReportCounts::chains);

  py::class_<Report>(m, "Report")
      .def_readonly("model", &Report::model)
      .def_readonly("check", &Report::check)
      .def_readonly("counts", &Report::counts)
      .def_readonly("violations", &Report::violations)
      .def_readonly("elapsed_ms", &Report::elapsed_ms)
      .def("ok", &Report::ok);

  m.def("check_semicontinuity", &check_semicontinuity, py::arg("table"),
        py::arg("poset"));
  m.def("check_paper_claims", &check_paper_claims, py::arg("table"),
        py::arg("poset"), py::arg("model"));
  m.def("compare_engines", &compare_engines, py::arg("n"),
        py::arg("max_n") = 4);
  m.def("report_to_json", &report_to_json, py::arg("report"),
        py::arg("include_timing") = false);
  m.def("report_summary", &report_summary, py::arg("report"));

  m.def("orbits_to_json", &orbits_to_json, py::arg("model"));
  m.def("orbits_to_csv", &orbits_to_csv, py::arg("model"));
  m.def("orbits_to_text", &orbits_to_text, py::arg("model"));
  m.def("poset_to_json", &poset_to_json, py::arg("model"), py::arg("poset"));
  m.def("poset_to_csv", &poset_to_csv, py::arg("poset"));
  m.def("poset_to_dot", &poset_to_dot, py::arg("poset"));
  m.def("poset_to_text", &poset_to_text, py::arg("poset"));
  m.def("table_to_json", &table_to_json, py::arg("result"), py::arg("with_mu"));
  m.def("table_to_csv", &table_to_csv, py::arg("result"), py::arg("with_mu"));
  m.def("table_to_text", &table_to_text, py::arg("result"), py::arg("with_mu"));
}
