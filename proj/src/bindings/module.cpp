#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfree/cli.hpp"
#include "mfree/errors.hpp"
#include "mfree/exponents.hpp"
#include "mfree/freebasis.hpp"
#include "mfree/verify.hpp"

namespace py = pybind11;
using namespace mfree;

namespace {

std::vector<std::vector<std::int64_t>> flat_directions(const Arrangement& a) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& x : dim1_flats(a)) out.push_back(x.direction);
  return out;
}

std::vector<std::string> forms(const Arrangement& a) {
  std::vector<std::string> out;
  for (const auto& h : a.hyperplanes()) out.push_back(h.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_mfree, m) {
  m.doc() = "Free bases and m-exponents of central arrangements (exact arithmetic)";

  // Translators registered later are tried first, so the base class goes first.
  // Subclasses also derive from Error so `except mfree.Error` catches everything.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<VerificationError>(m, "VerificationError", error);
  py::register_exception<UserError>(m, "UserError", py::make_tuple(error, py::handle(PyExc_ValueError)));

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init([](const std::string& text, std::optional<std::size_t> dim) { return parse_arrangement(text, dim); }),
           py::arg("text"), py::arg("dim") = py::none())
      .def("__len__", &Arrangement::size)
      .def_property_readonly("dim", &Arrangement::dim)
      .def_property_readonly("forms", &forms)
      .def_property_readonly("normals", &Arrangement::normals)
      .def_property_readonly("rank", [](const Arrangement& a) { return rank_and_kernel(a).rank; })
      .def_property_readonly("is_essential", &is_essential)
      .def_property_readonly("flats", &flat_directions)
      .def("defining_polynomial", [](const Arrangement& a) { return defining_polynomial(a).to_pretty_string(); })
      .def("__repr__", [](const Arrangement& a) { return "Arrangement('" + a.to_forms_string() + "')"; });

  py::class_<FreeBasis>(m, "FreeBasis")
      .def_readonly("degrees", &FreeBasis::degrees)
      .def_property_readonly("exponents", [](const FreeBasis& b) { return b.exponents(0).entries; })
      .def_property_readonly("operators",
                             [](const FreeBasis& b) {
                               std::vector<std::string> out;
                               for (const auto& op : b.operators) out.push_back(op.to_pretty_string());
                               return out;
                             })
      .def_property_readonly("saito_t",
                             [](const FreeBasis& b) { return b.saito ? std::optional<int>(b.saito->t) : std::nullopt; })
      .def_property_readonly("saito_c",
                             [](const FreeBasis& b) {
                               return b.saito ? std::optional<std::string>(to_string(b.saito->c)) : std::nullopt;
                             })
      .def("to_json", [](const FreeBasis& b) { return to_json(b).dump(); })
      .def("__len__", [](const FreeBasis& b) { return b.operators.size(); });

  m.def("exponents", [](const Arrangement& a, int order) { return exponents_for(a, order).entries; }, py::arg("arrangement"),
        py::arg("m"), "Closed-form m-exponents, sorted ascending.");
  m.def("exp_2arr", [](int k, int order) { return exp_2arr(k, order).entries; }, py::arg("k"), py::arg("m"));
  m.def(
      "basis",
      [](const Arrangement& a, int order, const std::string& extension, bool saito) {
        BuildOptions options;
        options.check_saito = saito;
        return basis_for(a, order, parse_extension(extension, a.dim()), options);
      },
      py::arg("arrangement"), py::arg("m"), py::arg("extension") = "auto", py::arg("saito") = true,
      "Explicit free basis of D^(m); membership and Saito checks run unless disabled.");
  m.def("oracle_dim", &oracle_dim, py::arg("arrangement"), py::arg("m"), py::arg("d"));
  m.def(
      "hilbert_check",
      [](const Arrangement& a, int order, std::vector<int> exps, int d_max) {
        const auto report = hilbert_check(a, order, exps, d_max);
        std::vector<std::tuple<int, std::int64_t, std::int64_t>> rows;
        for (const auto& r : report.rows) rows.emplace_back(r.d, r.actual, r.predicted);
        return py::make_tuple(report.consistent, rows);
      },
      py::arg("arrangement"), py::arg("m"), py::arg("exponents"), py::arg("d_max"));
  m.def(
      "run",
      [](const std::string& command, const std::string& input, int order, const std::string& extension,
         std::optional<int> max_degree, const std::string& format) {
        RunConfig config;
        const auto cmd = parse_command(command);
        if (!cmd) throw UserError("unknown command '" + command + "'");
        const auto fmt = parse_format(format);
        if (!fmt) throw UserError("format must be json or text");
        config.command = *cmd;
        config.m = order;
        config.extension = extension;
        config.max_degree = max_degree;
        config.format = *fmt;
        const auto result = mfree::run(config, input);
        return py::make_tuple(result.exit_code, emit_report(result, config.format));
      },
      py::arg("command"), py::arg("input"), py::arg("m") = 0, py::arg("extension") = "auto",
      py::arg("max_degree") = py::none(), py::arg("format") = "json");
}
