#include "lucasbinom/binomials.hpp"
#include "lucasbinom/cli.hpp"
#include "lucasbinom/errors.hpp"
#include "lucasbinom/identities.hpp"
#include "lucasbinom/oracle.hpp"

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lucasbinom;

namespace {

// Python ints may exceed any C++ integer type, so they go through text.
RingElement from_int(const py::int_& v) { return parse_ring(py::str(v).cast<std::string>()); }

std::string repr_of(const char* name, const std::string& text) { return std::string(name) + "('" + text + "')"; }

}  // namespace

PYBIND11_MODULE(_lucasbinom, m) {
  m.doc() = "Exact Lucas sequences, Lucas-type binomial coefficients and identity checks";
  m.attr("__version__") = LUCASBINOM_VERSION;

  // Errors. Subclasses are registered after the base so they are tried first.
  static py::exception<Error> base_error(m, "LucasError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base_error);
  py::register_exception<NotDivisible>(m, "NotDivisible", base_error);
  py::register_exception<DegenerateRecurrence>(m, "DegenerateRecurrence", base_error);
  py::register_exception<InvalidRoots>(m, "InvalidRoots", base_error);
  py::register_exception<ZeroTerm>(m, "ZeroTerm", base_error);
  py::register_exception<DivisionByZero>(m, "DivisionByZero",
                                         py::make_tuple(base_error, py::handle(PyExc_ZeroDivisionError)));
  py::register_exception<lucasbinom::IndexError>(m, "IndexError",
                                                 py::make_tuple(base_error, py::handle(PyExc_IndexError)));

  py::class_<RingElement>(m, "Ring", "Exact integer, rational or polynomial in x over Q.")
      .def(py::init(&from_int), py::arg("value"))
      .def(py::init([](const std::string& text) { return parse_ring(text); }), py::arg("text"))
      .def_property_readonly("kind",
                             [](const RingElement& r) {
                               switch (r.kind()) {
                                 case RingElement::Kind::Integer:
                                   return "integer";
                                 case RingElement::Kind::Rational:
                                   return "rational";
                                 case RingElement::Kind::Polynomial:
                                   break;
                               }
                               return "polynomial";
                             })
      .def("is_zero", &RingElement::is_zero)
      .def("is_integral", &RingElement::is_integral)
      .def("is_polynomial", &RingElement::is_polynomial)
      .def("coefficients",
           [](const RingElement& r) {
             // Low to high, as "p/q" strings.
             const Polynomial poly = r.as_polynomial();
             std::vector<std::string> out;
             for (const auto& c : poly.coefficients()) out.push_back(c.get_str());
             return out;
           })
      .def("__int__",
           [](const RingElement& r) {
             const auto i = r.as_integer();
             if (!i) throw py::type_error("value is not an integer: " + r.to_string());
             return py::int_(py::str(i->get_str()));
           })
      .def("__pow__", [](const RingElement& r, unsigned e) { return r.pow(e); })
      .def("__truediv__", [](const RingElement& a, const RingElement& b) { return exact_div(a, b); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const RingElement& r) { return py::hash(py::str(r.to_string())); })
      .def("__str__", &RingElement::to_string)
      .def("__repr__", [](const RingElement& r) { return repr_of("Ring", r.to_string()); });
  py::implicitly_convertible<py::int_, RingElement>();
  py::implicitly_convertible<py::str, RingElement>();

  py::class_<Quotient>(m, "Quotient", "Reduced fraction of ring elements with a monic denominator.")
      .def(py::init<RingElement>(), py::arg("value"))
      .def(py::init<const RingElement&, const RingElement&>(), py::arg("num"), py::arg("den"))
      .def_property_readonly("numerator", &Quotient::numerator)
      .def_property_readonly("denominator", &Quotient::denominator)
      .def("in_ring", &Quotient::in_ring)
      .def("to_ring", &Quotient::to_ring)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def("__str__", &Quotient::to_string)
      .def("__repr__", [](const Quotient& q) { return repr_of("Quotient", q.to_string()); });
  py::implicitly_convertible<RingElement, Quotient>();
  m.def("parse_quotient", &parse_quotient, py::arg("text"));
  m.def("exact_div", &exact_div, py::arg("a"), py::arg("b"));

  // Sequences.
  py::class_<RecurrenceParams>(m, "RecurrenceParams")
      .def(py::init<RingElement, RingElement, RingElement, RingElement>(), py::arg("s"), py::arg("t"),
           py::arg("a") = RingElement(0), py::arg("b") = RingElement(1))
      .def_static("from_pq", &RecurrenceParams::from_pq, py::arg("P"), py::arg("Q"), py::arg("a") = RingElement(0),
                  py::arg("b") = RingElement(1))
      .def_readwrite("s", &RecurrenceParams::s)
      .def_readwrite("t", &RecurrenceParams::t)
      .def_readwrite("a", &RecurrenceParams::a)
      .def_readwrite("b", &RecurrenceParams::b);

  py::class_<SequenceHandle>(m, "Sequence", "H_0 = a, H_1 = b, H_{n+2} = s*H_{n+1} + t*H_n, memoized.")
      .def(py::init<RecurrenceParams>(), py::arg("params"))
      .def(py::init([](const RingElement& s, const RingElement& t, const RingElement& a, const RingElement& b) {
             return SequenceHandle({s, t, a, b});
           }),
           py::arg("s"), py::arg("t"), py::arg("a"), py::arg("b"))
      .def_property_readonly("params", &SequenceHandle::params)
      .def("term", &SequenceHandle::term, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("terms", &SequenceHandle::terms, py::arg("n"), py::call_guard<py::gil_scoped_release>())
      .def("__getitem__", &SequenceHandle::term);
  m.def("lucas_u", &lucas_u, py::arg("s"), py::arg("t"));
  m.def("lucas_v", &lucas_v, py::arg("s"), py::arg("t"));

  py::class_<BinetParams>(m, "BinetParams")
      .def(py::init<RingElement, RingElement, RingElement, RingElement>(), py::arg("p"), py::arg("q"), py::arg("A"),
           py::arg("B"))
      .def_readwrite("p", &BinetParams::p)
      .def_readwrite("q", &BinetParams::q)
      .def_readwrite("A", &BinetParams::A)
      .def_readwrite("B", &BinetParams::B);
  m.def("binet_term", &binet_term, py::arg("params"), py::arg("n"));
  m.def("discriminant", &discriminant, py::arg("s"), py::arg("t"));
  m.def("has_repeated_root", &has_repeated_root, py::arg("s"), py::arg("t"));

  // Binomials.
  py::class_<BinomialValue>(m, "BinomialValue")
      .def_readonly("value", &BinomialValue::value)
      .def_readonly("integral", &BinomialValue::integral)
      .def("__repr__", [](const BinomialValue& b) {
        return "BinomialValue(" + b.value.to_string() + ", integral=" + (b.integral ? "True" : "False") + ")";
      });
  m.def("gen_factorial", &gen_factorial, py::arg("h"), py::arg("n"));
  m.def("falling_factorial", &falling_factorial, py::arg("h"), py::arg("n"), py::arg("k"));
  m.def("binomial", &binomial, py::arg("h"), py::arg("n"), py::arg("k"));
  m.def("u_binomial", &u_binomial, py::arg("s"), py::arg("t"), py::arg("n"), py::arg("k"));
  m.def("v_binomial", &v_binomial, py::arg("s"), py::arg("t"), py::arg("n"), py::arg("k"));
  m.def("h_binomial", &h_binomial, py::arg("params"), py::arg("n"), py::arg("k"));
  m.def("mixed_binomial", &mixed_binomial, py::arg("s"), py::arg("t"), py::arg("r"), py::arg("sidx"));
  m.def(
      "multinomial", [](const SequenceHandle& h, const std::vector<std::size_t>& parts) { return multinomial(h, parts); },
      py::arg("h"), py::arg("parts"));
  m.def("binomial_quotient", &binomial_quotient, py::arg("h"), py::arg("n"), py::arg("k"));
  m.def("mixed_quotient", &mixed_quotient, py::arg("v"), py::arg("u"), py::arg("r"), py::arg("sidx"));

  // Oracle.
  py::class_<oracle::OracleResult>(m, "OracleResult")
      .def_readonly("numerator", &oracle::OracleResult::numerator)
      .def_readonly("denominator", &oracle::OracleResult::denominator)
      .def_readonly("reduced", &oracle::OracleResult::reduced)
      .def("matches", &oracle::OracleResult::matches, py::arg("value"));
  m.def("oracle_binomial", &oracle::oracle_binomial, py::arg("h"), py::arg("n"), py::arg("k"));
  m.def("oracle_mixed", &oracle::oracle_mixed, py::arg("s"), py::arg("t"), py::arg("r"), py::arg("sidx"));

  // Identities.
  py::enum_<Status>(m, "Status")
      .value("HOLDS", Status::Holds)
      .value("FAILS", Status::Fails)
      .value("SKIPPED_ZERO_TERM", Status::SkippedZeroTerm);
  py::enum_<MixedVariant>(m, "MixedVariant")
      .value("PAPER", MixedVariant::PaperEq14)
      .value("DERIVED", MixedVariant::DerivedVr1);

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("identity", &IdentityReport::identity)
      .def_readonly("params", &IdentityReport::params)
      .def_readonly("r", &IdentityReport::r)
      .def_readonly("s", &IdentityReport::s)
      .def_readonly("lhs", &IdentityReport::lhs)
      .def_readonly("rhs", &IdentityReport::rhs)
      .def_readonly("status", &IdentityReport::status)
      .def("holds", &IdentityReport::holds)
      .def("fails", &IdentityReport::fails)
      .def("__repr__", [](const IdentityReport& r) {
        std::ostringstream os;
        os << "IdentityReport(" << r.identity << ", s=" << r.params.s << ", t=" << r.params.t << ", r=" << r.r
           << ", sidx=" << r.s << ", " << status_name(r.status) << ")";
        return os.str();
      });

  py::class_<DecompositionCoeffs>(m, "DecompositionCoeffs",
                                  "scale * F_{r+s} = g1(r, s) * F_r + g2(r, s) * F_s; g1 and g2 may be Python callables.")
      .def(py::init<std::function<RingElement(std::size_t, std::size_t)>,
                    std::function<RingElement(std::size_t, std::size_t)>, RingElement>(),
           py::arg("g1"), py::arg("g2"), py::arg("scale") = RingElement(1))
      .def_readwrite("g1", &DecompositionCoeffs::g1)
      .def_readwrite("g2", &DecompositionCoeffs::g2)
      .def_readwrite("scale", &DecompositionCoeffs::scale);
  m.def("lucas_decomposition", &lucas_decomposition, py::arg("s"), py::arg("t"));
  m.def("doubled_u_decomposition", &doubled_u_decomposition, py::arg("s"), py::arg("t"));
  m.def("check_sequence_decomposition", &check_sequence_decomposition, py::arg("h"), py::arg("coeffs"), py::arg("r"),
        py::arg("s"));
  m.def("recurrence_triangle", &recurrence_triangle, py::arg("coeffs"), py::arg("maxn"));
  m.def("binomial_by_recurrence", &binomial_by_recurrence, py::arg("coeffs"), py::arg("r"), py::arg("s"));

  py::class_<EquivalenceResult>(m, "EquivalenceResult")
      .def_readonly("decomposition", &EquivalenceResult::decomposition)
      .def_readonly("recurrence", &EquivalenceResult::recurrence)
      .def_readonly("equivalent", &EquivalenceResult::equivalent)
      .def_readonly("first_decomposition_failure", &EquivalenceResult::first_decomposition_failure)
      .def_readonly("first_recurrence_mismatch", &EquivalenceResult::first_recurrence_mismatch);
  m.def("check_theorem1_equivalence", &check_theorem1_equivalence, py::arg("h"), py::arg("coeffs"), py::arg("maxn"));

  m.def("check_lucas_decomposition", &check_lucas_decomposition, py::arg("s"), py::arg("t"), py::arg("maxn"));
  m.def("check_addition_formulas", &check_addition_formulas, py::arg("s"), py::arg("t"), py::arg("maxn"));
  m.def("check_u_binomial_doubled", &check_u_binomial_doubled, py::arg("s"), py::arg("t"), py::arg("maxn"));
  m.def("check_v_u_identity", &check_v_u_identity, py::arg("s"), py::arg("t"), py::arg("maxn"));
  m.def("check_mixed_recurrence", &check_mixed_recurrence, py::arg("s"), py::arg("t"), py::arg("maxn"),
        py::arg("variant"));
  m.def("check_mixed_doubled", &check_mixed_doubled, py::arg("s"), py::arg("t"), py::arg("maxn"));

  py::class_<MixedRecurrenceVerdict>(m, "MixedRecurrenceVerdict")
      .def_readonly("survivor", &MixedRecurrenceVerdict::survivor)
      .def_readonly("clean", &MixedRecurrenceVerdict::clean)
      .def_readonly("paper_failures", &MixedRecurrenceVerdict::paper_failures)
      .def_readonly("derived_failures", &MixedRecurrenceVerdict::derived_failures)
      .def_readonly("counterexample", &MixedRecurrenceVerdict::counterexample);
  m.def("resolve_mixed_recurrence", &resolve_mixed_recurrence, py::arg("paper"), py::arg("derived"));
  m.def("integer_grid", &integer_grid, py::arg("bound") = 3);
  m.def("gaussian_params", &gaussian_params);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
