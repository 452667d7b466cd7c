#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "focalis/verify.hpp"

namespace py = pybind11;
using namespace focalis;

namespace {

Mode parse_mode(const std::string& m) {
  if (m == "sampled") return Mode::Sampled;
  if (m == "symbolic") return Mode::Symbolic;
  throw UsageError("mode must be 'sampled' or 'symbolic', not '" + m + "'");
}

std::vector<std::vector<std::string>> entries(const PlaneFrame& f) {
  std::vector<std::vector<std::string>> out(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 5; ++c) out[r].push_back(f.A()(r, c).str());
  return out;
}

std::string analyze(const PlaneFrame& f, int samples, std::uint64_t seed, const std::string& mode,
                    std::optional<std::string> gallery, const std::string& label) {
  ClassifyOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.mode = parse_mode(mode);
  if (gallery) opt.construction_sub = gallery_item(*gallery).construction_sub;
  AnalysisReport r = classify(f, opt);
  r.input = label;
  return to_json(r).dump();
}

py::dict item_dict(const GalleryItem& it) {
  py::dict d;
  d["name"] = it.name;
  d["frame"] = it.frame;
  d["expected_class"] = to_string(it.expected_class);
  d["expected_subclass"] = to_string(it.expected_sub);
  d["expected_segre"] = it.expected_segre ? py::cast(to_string(*it.expected_segre)) : py::none();
  d["notes"] = it.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact focal-locus analysis of plane congruences in P4.";

  static py::exception<Error> error(m, "FocalisError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr());
      py::object inst = exc(e.kind(), e.what());
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<PlaneFrame>(m, "Frame")
      .def_static("parse", &parse_congruence, py::arg("text"))
      .def("text", &print_congruence, py::arg("comment") = "")
      .def("entries", &entries)
      .def_property_readonly("is_polynomial", &PlaneFrame::is_polynomial)
      .def_property_readonly("total_degree", &PlaneFrame::total_degree)
      .def("sample_points",
           [](const PlaneFrame& f, int n, std::uint64_t seed) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& p : focal_samples(f, n, seed)) out.emplace_back(p.u.str(), p.v.str());
             return out;
           },
           py::arg("n"), py::arg("seed") = 0)
      .def("focal_form",
           [](const PlaneFrame& f, const std::string& u, const std::string& v) {
             Matrix<Rat> q = focal_form(localize(f, Rat::parse(u), Rat::parse(v)));
             std::vector<std::vector<std::string>> out(3);
             for (int i = 0; i < 3; ++i)
               for (int j = 0; j < 3; ++j) out[i].push_back(q(i, j).str());
             return out;
           },
           py::arg("u"), py::arg("v"))
      .def("__eq__", [](const PlaneFrame& a, const PlaneFrame& b) { return a == b; })
      .def("__str__", [](const PlaneFrame& f) { return print_congruence(f); });

  m.def(
      "analyze_json",
      [](const PlaneFrame& f, int samples, std::uint64_t seed, const std::string& mode,
         std::optional<std::string> gallery, const std::string& label) {
        py::gil_scoped_release release;
        return analyze(f, samples, seed, mode, gallery, label);
      },
      py::arg("frame"), py::arg("samples") = 25, py::arg("seed") = 0, py::arg("mode") = "sampled",
      py::arg("gallery") = py::none(), py::arg("label") = "<python>",
      "Classify a frame and return the report as a JSON string.");

  m.def("gallery_names", [] {
    std::vector<std::string> names;
    for (const auto& it : gallery_items()) names.push_back(it.name);
    return names;
  });
  m.def("gallery_item", [](const std::string& name) { return item_dict(gallery_item(name)); }, py::arg("name"));

  m.def(
      "verify_json",
      [](const std::string& suite, std::uint64_t seed, int samples) {
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, seed, samples);
        }
        return py::make_tuple(r.passed(), suite_table(r), r.evidence.dump());
      },
      py::arg("suite"), py::arg("seed") = 0, py::arg("samples") = 25);

  m.attr("suites") = kSuites;
}
