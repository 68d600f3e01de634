#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "brisk/analysis.hpp"
#include "brisk/cli.hpp"
#include "brisk/display.hpp"
#include "brisk/presentation.hpp"
#include "brisk/report.hpp"

namespace py = pybind11;
using namespace brisk;
using F = PrimeField;

namespace {

struct Algebra {
  AlgebraPtr<F> ptr;
};

Algebra load(const std::string& path, std::int64_t prime) {
  auto file = load_presentation(path);
  return {share(build_algebra(file, F(prime ? prime : file.field.p)))};
}

Algebra parse(const std::string& text, std::int64_t prime) {
  auto file = parse_presentation(text);
  return {share(build_algebra(file, F(prime ? prime : file.field.p)))};
}

std::vector<std::int64_t> coords(const F& f, const Vec<F>& v) {
  std::vector<std::int64_t> out;
  for (const auto& c : v) out.push_back(f.signed_value(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_brisk, m) {
  m.doc() = "Radical-cube-zero algebra analysis";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NotSpecialError>(m, "NotSpecialError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("name", [](const Algebra& a) { return a.ptr->name(); })
      .def_property_readonly("dim", [](const Algebra& a) { return a.ptr->dim(); })
      .def_property_readonly("labels", [](const Algebra& a) { return a.ptr->labels(); })
      .def_property_readonly("prime", [](const Algebra& a) { return a.ptr->field().spec().p; });

  m.def("load", &load, py::arg("path"), py::arg("prime") = 0,
        "Load a presentation file; prime 0 keeps the file's field.");
  m.def("parse", &parse, py::arg("text"), py::arg("prime") = 0);

  m.def("is_special", [](const Algebra& a) { return special_verdict(a.ptr).is_special; });
  m.def("bristle_types", [](const Algebra& a) {
    auto l = layouts(a.ptr);
    return std::make_pair(to_string(l.left.type), to_string(l.right.type));
  });
  m.def("reflexive_atom", [](const Algebra& a) {
    return coords(a.ptr->field(), reflexive_atom_search(a.ptr).point);
  });
  m.def("report_json", [](const Algebra& a) { return report_json(*a.ptr, full_report(a.ptr)).dump(2); });
  m.def("layout_svg", [](const Algebra& a, const std::string& side) {
    auto l = layouts(a.ptr);
    return layout_svg(*a.ptr, side == "right" ? l.right : l.left, side);
  }, py::arg("algebra"), py::arg("side") = "left");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
  m.def("fixture_dir", &fixture_dir);
}
