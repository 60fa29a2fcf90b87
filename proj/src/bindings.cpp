#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seshadri/report.hpp"

namespace py = pybind11;
using namespace seshadri;

namespace {

py::object to_py_int(const Integer& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object to_py_fraction(const Rational& q) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(numerator(q)), to_py_int(denominator(q)));
}

py::object optional_fraction(const ExactScalar& x) {
  if (auto q = x.as_rational()) return to_py_fraction(*q);
  return py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact lower-bound certificates for Seshadri constants on surfaces with "
      "Picard number 1";

  py::register_exception<PrecisionCutoff>(m, "PrecisionCutoff");

  py::enum_<Ordering>(m, "Ordering")
      .value("Less", Ordering::Less)
      .value("Equal", Ordering::Equal)
      .value("Greater", Ordering::Greater);

  py::class_<ExactScalar>(m, "ExactScalar")
      .def(py::init<long long>())
      .def("sign", &ExactScalar::sign)
      .def("is_rational", &ExactScalar::is_rational)
      .def("as_rational", &optional_fraction)
      .def("radical_depth", &ExactScalar::radical_depth)
      .def("decimal", [](const ExactScalar& x, int digits) { return to_decimal(x, digits); },
           py::arg("digits") = 6)
      .def("__str__", &ExactScalar::to_string)
      .def("__repr__",
           [](const ExactScalar& x) { return "ExactScalar(" + x.to_string() + ")"; })
      .def("__float__",
           [](const ExactScalar& x) { return std::stod(to_decimal(x, 17)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  m.def("make_rational", &make_rational, py::arg("num"), py::arg("den"));
  m.def("sqrt", [](const ExactScalar& x) { return sqrt(x); });
  m.def("fourth_root", &fourth_root);
  m.def("compare", [](const ExactScalar& a, const ExactScalar& b) { return compare(a, b); });
  m.def("to_decimal", [](const ExactScalar& x, int digits) { return to_decimal(x, digits); },
        py::arg("x"), py::arg("digits"));

  py::enum_<SurfaceClass>(m, "SurfaceClass")
      .value("ProjectivePlane", SurfaceClass::ProjectivePlane)
      .value("Abelian", SurfaceClass::Abelian)
      .value("K3", SurfaceClass::K3)
      .value("GeneralType", SurfaceClass::GeneralType);

  py::class_<PolarizedSurface>(m, "PolarizedSurface")
      .def(py::init([](SurfaceClass cls, long long l2, long long r,
                       std::optional<long long> pg, std::optional<long long> q) {
             return PolarizedSurface{cls, l2, r, pg, q};
           }),
           py::arg("surface_class"), py::arg("l2"), py::arg("r"),
           py::arg("pg") = py::none(), py::arg("q") = py::none())
      .def_static("projective_plane", &PolarizedSurface::projective_plane)
      .def_static("abelian", &PolarizedSurface::abelian, py::arg("l2"))
      .def_static("k3", &PolarizedSurface::k3, py::arg("l2"))
      .def_static("general_type", &PolarizedSurface::general_type, py::arg("l2"), py::arg("r"),
                  py::arg("pg") = py::none(), py::arg("q") = py::none())
      .def_readonly("surface_class", &PolarizedSurface::surface_class)
      .def_readonly("l2", &PolarizedSurface::l2)
      .def_readonly("r", &PolarizedSurface::r)
      .def_readonly("pg", &PolarizedSurface::pg)
      .def_readonly("q", &PolarizedSurface::q);

  py::class_<Violation>(m, "Violation")
      .def_readonly("id", &Violation::id)
      .def_readonly("message", &Violation::message)
      .def_readonly("source", &Violation::source);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def("ok", &ValidationReport::ok)
      .def_readonly("violations", &ValidationReport::violations);

  m.def("canonical_degree", &canonical_degree);
  m.def("validate", &validate);
  m.def("primitive_canonical_rule", &primitive_canonical_rule);
  m.def("parse_surface_spec", &parse_surface_spec);

  py::class_<CurveClass>(m, "CurveClass")
      .def(py::init([](long long p, long long mult) { return CurveClass{p, mult}; }),
           py::arg("p"), py::arg("m"))
      .def_readonly("p", &CurveClass::p)
      .def_readonly("m", &CurveClass::m)
      .def("__repr__", [](const CurveClass& c) {
        return "CurveClass(p=" + std::to_string(c.p) + ", m=" + std::to_string(c.m) + ")";
      });

  py::enum_<Source>(m, "Source")
      .value("TheoremS", Source::TheoremS)
      .value("TheoremG", Source::TheoremG)
      .value("GenusPerP", Source::GenusPerP)
      .value("GenusOracle", Source::GenusOracle)
      .value("ReiderRule", Source::ReiderRule)
      .value("LemmaLow", Source::LemmaLow)
      .value("PencilK2One", Source::PencilK2One)
      .value("Steffens", Source::Steffens)
      .value("FdBLiteral", Source::FdBLiteral)
      .value("FdBRederived", Source::FdBRederived)
      .value("NaiveScaling", Source::NaiveScaling)
      .value("ChallengeThreshold", Source::ChallengeThreshold);

  py::enum_<Scope>(m, "Scope")
      .value("AllPoints", Scope::AllPoints)
      .value("GeneralPoint", Scope::GeneralPoint)
      .value("Context", Scope::Context);

  py::class_<BoundCertificate>(m, "BoundCertificate")
      .def_readonly("value", &BoundCertificate::value)
      .def_readonly("source", &BoundCertificate::source)
      .def_readonly("scope", &BoundCertificate::scope)
      .def_readonly("sharp", &BoundCertificate::sharp)
      .def_readonly("assumptions", &BoundCertificate::assumptions)
      .def_readonly("witness", &BoundCertificate::witness);

  m.def("arithmetic_genus", &arithmetic_genus, py::arg("p"), py::arg("surface"));
  m.def("max_multiplicity", &max_multiplicity, py::arg("p"), py::arg("surface"));
  m.def("curve_class_admissible", &curve_class_admissible);
  m.def("per_p_bound_integer", &per_p_bound_integer, py::arg("p"), py::arg("surface"));
  m.def("per_p_bound_real", &per_p_bound_real, py::arg("p"), py::arg("surface"));
  m.def("oracle_infimum", &oracle_infimum, py::arg("surface"), py::arg("p_max") = 100);
  m.def("theorem_bound", &theorem_bound);
  m.def("general_type_theorem_value", &general_type_theorem_value);

  py::class_<MonotonicityResult>(m, "MonotonicityResult")
      .def_readonly("nondecreasing", &MonotonicityResult::nondecreasing)
      .def_readonly("first_violation", &MonotonicityResult::first_violation);
  m.def("monotonicity_check", &monotonicity_check, py::arg("surface"), py::arg("p_from"),
        py::arg("p_to"));

  py::enum_<CanonicalCase>(m, "CanonicalCase")
      .value("ReiderK2ge5", CanonicalCase::ReiderK2ge5)
      .value("LemmaLowK2eq2", CanonicalCase::LemmaLowK2eq2)
      .value("LemmaLowK2eq3or4", CanonicalCase::LemmaLowK2eq3or4)
      .value("K2OnePgLow", CanonicalCase::K2OnePgLow)
      .value("K2OnePgTwo", CanonicalCase::K2OnePgTwo);

  py::class_<CanonicalCaseTrace>(m, "CanonicalCaseTrace")
      .def_readonly("case_id", &CanonicalCaseTrace::case_id)
      .def_readonly("bound", &CanonicalCaseTrace::bound)
      .def_readonly("sharp", &CanonicalCaseTrace::sharp)
      .def_readonly("narrative", &CanonicalCaseTrace::narrative);

  m.def("reider_rule", &reider_rule);
  m.def("lemma_low_enumerate", &lemma_low_enumerate, py::arg("k2_max"), py::arg("p_max"));
  m.def("k2_two_bound", &k2_two_bound);
  m.def("k2_one_bound", &k2_one_bound, py::arg("pg"));
  m.def("canonical_seshadri_lower", &canonical_seshadri_lower);
  m.def("epsilon_scaling", &epsilon_scaling, py::arg("canonical_bound"), py::arg("r"));

  m.def("steffens_general_point", &steffens_general_point);
  m.def("matsusaka_threshold", &matsusaka_threshold, py::arg("a"), py::arg("b"));
  m.def("fdb_corollary_literal", &fdb_corollary_literal);
  m.def("fdb_corollary_rederived", &fdb_corollary_rederived);
  m.def("challenge_threshold", &challenge_threshold);
  m.def("intermediate_bound_literal", &intermediate_bound_literal);
  m.def("intermediate_bound_substituted", &intermediate_bound_substituted);

  py::enum_<Chain>(m, "Chain")
      .value("A", Chain::A)
      .value("B", Chain::B)
      .value("C", Chain::C)
      .value("D", Chain::D);

  py::enum_<Verdict>(m, "Verdict")
      .value("Holds", Verdict::Holds)
      .value("Fails", Verdict::Fails)
      .value("Equal", Verdict::Equal);

  py::class_<GridPoint>(m, "GridPoint")
      .def_readonly("k2", &GridPoint::k2)
      .def_readonly("r", &GridPoint::r)
      .def_readonly("l2", &GridPoint::l2)
      .def_readonly("p", &GridPoint::p);

  py::class_<AuditFinding>(m, "AuditFinding")
      .def_readonly("chain", &AuditFinding::chain)
      .def_readonly("at", &AuditFinding::at)
      .def_readonly("lhs", &AuditFinding::lhs)
      .def_readonly("rhs", &AuditFinding::rhs)
      .def_readonly("verdict", &AuditFinding::verdict)
      .def_readonly("note", &AuditFinding::note);

  m.def(
      "audit_chain",
      [](long long k2_max, long long r_max, long long l2_max) {
        return audit_chain({k2_max, r_max, l2_max});
      },
      py::arg("k2_max") = 100, py::arg("r_max") = 10, py::arg("l2_max") = 10);
  m.def("bound_comparison", &bound_comparison, py::arg("surface"), py::arg("p_max") = 100);

  py::class_<WeightedHypersurface>(m, "WeightedHypersurface")
      .def(py::init([](std::array<long long, 4> weights, long long degree) {
             return WeightedHypersurface{weights, degree};
           }),
           py::arg("weights"), py::arg("degree"))
      .def_readonly("weights", &WeightedHypersurface::weights)
      .def_readonly("degree", &WeightedHypersurface::degree);

  py::class_<HypersurfaceInvariants>(m, "HypersurfaceInvariants")
      .def_readonly("canonical_coefficient", &HypersurfaceInvariants::canonical_coefficient)
      .def_property_readonly(
          "k2", [](const HypersurfaceInvariants& h) { return to_py_fraction(h.k2); })
      .def_property_readonly("pg",
                             [](const HypersurfaceInvariants& h) { return to_py_int(h.pg); })
      .def_readonly("integrality_warning", &HypersurfaceInvariants::integrality_warning);

  m.def("count_monomials",
        [](std::array<long long, 4> weights, long long degree) {
          return to_py_int(count_monomials(weights, degree));
        },
        py::arg("weights"), py::arg("degree"));
  m.def("hypersurface_invariants", &hypersurface_invariants);

  py::class_<SteenbrinkResult>(m, "SteenbrinkResult")
      .def_readonly("picard_rank_one", &SteenbrinkResult::picard_rank_one)
      .def_readonly("reasons", &SteenbrinkResult::reasons);
  m.def("steenbrink_check", &steenbrink_check);

  py::class_<SharpnessExample>(m, "SharpnessExample")
      .def_readonly("surface", &SharpnessExample::surface)
      .def_readonly("k2", &SharpnessExample::k2)
      .def_property_readonly("pg", [](const SharpnessExample& e) { return to_py_int(e.pg); })
      .def_readonly("picard_rank_one", &SharpnessExample::picard_rank_one)
      .def_readonly("bound", &SharpnessExample::bound)
      .def_readonly("sharp", &SharpnessExample::sharp)
      .def_readonly("theorem_value", &SharpnessExample::theorem_value)
      .def_readonly("challenge_value", &SharpnessExample::challenge_value);
  m.def("sharpness_example", &sharpness_example);

  // rendered reports, matching the CLI output byte for byte
  m.def(
      "bound_report_json",
      [](const PolarizedSurface& s, long long p_max, int digits) {
        return render_json(build_bound_report(s, p_max, digits));
      },
      py::arg("surface"), py::arg("p_max") = 100, py::arg("digits") = 6);
  m.def(
      "audit_report_json",
      [](long long k2_max, long long r_max, long long l2_max, int digits) {
        return render_json(build_audit_report({k2_max, r_max, l2_max}, digits));
      },
      py::arg("k2_max") = 100, py::arg("r_max") = 10, py::arg("l2_max") = 10,
      py::arg("digits") = 6);
  m.def(
      "wps_report_json",
      [](const WeightedHypersurface& h, int digits) {
        return render_json(build_wps_report(h, digits));
      },
      py::arg("surface"), py::arg("digits") = 6);
  m.def("example_report_json",
        [](int digits) { return render_json(build_example_report(digits)); },
        py::arg("digits") = 6);

  m.attr("__version__") = SESHADRI_VERSION;
}
