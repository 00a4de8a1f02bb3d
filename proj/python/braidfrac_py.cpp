#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidfrac/cli.hpp"
#include "braidfrac/errors.hpp"
#include "braidfrac/expression.hpp"
#include "braidfrac/families.hpp"
#include "braidfrac/harness.hpp"

namespace py = pybind11;
using namespace braidfrac;

namespace {

GroupContext make_context(const std::string& family, const std::string& flavor, int degree_cap) {
  auto drs = resolve_family(family);
  GroupContext ctx(drs, drs->base(), parse_flavor(flavor));
  ctx.degree_cap = degree_cap;
  return ctx;
}

OrderMode mode_of(const std::string& mode) {
  if (mode == "left") return OrderMode::Left;
  if (mode == "bi") return OrderMode::Bi;
  throw std::invalid_argument("mode must be 'left' or 'bi'");
}

}  // namespace

PYBIND11_MODULE(_braidfrac, m) {
  m.doc() = "Braided and purely braided fractions of digit rewriting systems";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<FlavorError>(m, "FlavorError", base.ptr());
  py::register_exception<MismatchError>(m, "MismatchError", base.ptr());
  py::register_exception<InvalidSystem>(m, "InvalidSystem", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<GroupContext>(m, "Context")
      .def(py::init(&make_context), py::arg("family"), py::arg("flavor") = "braided",
           py::arg("degree_cap") = kDefaultDegreeCap)
      .def_property_readonly("flavor", [](const GroupContext& c) { return std::string(to_string(c.flavor)); })
      .def_property_readonly("base", [](const GroupContext& c) { return c.drs->format(c.base); })
      .def_property_readonly("system", [](const GroupContext& c) { return c.drs->to_text(); })
      .def("identity", &FractionElement::identity)
      .def("parse", &parse_expression, py::arg("text"))
      .def("random", &random_element, py::arg("budget") = 6, py::arg("seed") = 0)
      .def("bh1", &bh1_element, py::arg("i"), py::arg("x_over") = true)
      .def("bh2",
           [](const GroupContext& c, int i, std::vector<int> word, int strands) {
             return bh2_element(c, i, BraidWord(strands, std::move(word)));
           },
           py::arg("i"), py::arg("word"), py::arg("strands"))
      .def("run_suite",
           [](const GroupContext& c, const std::string& suite, std::size_t trials, std::uint64_t seed) {
             return report_format(run_suite(suite, c, trials, seed));
           },
           py::arg("suite"), py::arg("trials") = 100, py::arg("seed") = 0);

  py::class_<FractionElement>(m, "Element")
      .def_property_readonly("T", [](const FractionElement& e) { return forest_steps(e.T()); })
      .def_property_readonly("S", [](const FractionElement& e) { return forest_steps(e.S()); })
      .def_property_readonly("braid", [](const FractionElement& e) { return e.g().word().letters; })
      .def("__mul__", &multiply)
      .def("inverse", &invert)
      .def("is_identity", &is_identity)
      .def("group_equal", &group_equal)
      .def("normalize", &normalize)
      .def("sign",
           [](const FractionElement& e, const std::string& mode) {
             return std::string(to_string(sign(e, mode_of(mode))));
           },
           py::arg("mode") = "left")
      .def("compare",
           [](const FractionElement& a, const FractionElement& b, const std::string& mode) {
             return std::string(to_string(compare(a, b, mode_of(mode))));
           },
           py::arg("other"), py::arg("mode") = "left")
      .def("project", &psi_project)
      .def("in_kernel", &in_kernel_K)
      .def("realize", [](const FractionElement& e) { return format_plmap(realize_pair(e.T(), e.S())); })
      .def("__eq__", [](const FractionElement& a, const FractionElement& b) { return a == b; })
      .def("__str__", &format_element)
      .def("__repr__", [](const FractionElement& e) { return "<" + format_element(e) + ">"; });

  m.def("suite_names", &suite_names);
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "braidfrac");
        CliResult r = run_cli(args);
        return py::make_tuple(r.code, r.out, r.err);
      },
      py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
}
