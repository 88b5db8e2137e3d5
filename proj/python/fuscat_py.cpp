// Python bindings. Reports cross the boundary as JSON text; the package
// wrapper turns them into dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fuscat/cli.hpp"
#include "fuscat/cyclotomic.hpp"
#include "fuscat/finitegroup.hpp"
#include "fuscat/verlinde.hpp"

namespace py = pybind11;
using namespace fuscat;

namespace {

using OptStr = std::optional<std::string>;

std::string dump(const Report& r) { return report_to_json(r).dump(); }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_fuscat, m) {
  m.doc() = "Exact arithmetic for good and bad primes of fusion categories";

  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");

  m.def("cyc", [](const std::string& expr, std::uint64_t n, std::optional<std::uint64_t> p) {
    return dump(cyc_report(expr, n, p));
  }, py::arg("expression"), py::arg("n"), py::arg("p") = py::none());
  m.def("lemma_norm", [](std::uint64_t nmax) { return dump(lemma_norm_report(nmax)); }, py::arg("nmax") = 200);
  m.def("verlinde_simples", [](const std::string& type, int l, std::uint64_t pmax) {
    return dump(verlinde_simples_report(type, l, pmax));
  }, py::arg("type"), py::arg("l"), py::arg("pmax") = 100);
  m.def("verlinde_classify", [](const std::string& type, int l, std::uint64_t p) {
    return dump(verlinde_classify_report(type, l, p));
  }, py::arg("type"), py::arg("l"), py::arg("p"));
  m.def("verlinde_badprimes", [](const std::string& type, int l, std::uint64_t pmax) {
    return dump(verlinde_badprimes_report(type, l, pmax));
  }, py::arg("type"), py::arg("l"), py::arg("pmax") = 100);
  m.def("group", [](const OptStr& name, const OptStr& gens) {
    return dump(group_report(resolve_group(name, gens)));
  }, py::arg("group") = py::none(), py::arg("gens") = py::none());
  m.def("gtcat", [](const OptStr& name, const OptStr& gens, const std::string& subgroup_gens) {
    return dump(gtcat_report(resolve_group(name, gens), subgroup_gens));
  }, py::arg("group") = py::none(), py::arg("gens") = py::none(), py::arg("subgroup_gens") = "");
  m.def("ito_michler", [](const OptStr& name, const OptStr& gens, std::optional<std::uint64_t> p) {
    return dump(ito_michler_report(resolve_group(name, gens), p));
  }, py::arg("group") = py::none(), py::arg("gens") = py::none(), py::arg("p") = py::none());
  m.def("amplitude_classical", [] { return dump(amplitude_classical_report()); });
  m.def("amplitude_quantum", [](std::uint64_t l, std::uint64_t pmax) {
    return dump(amplitude_quantum_report(l, pmax));
  }, py::arg("l"), py::arg("pmax") = 50);
  m.def("crosscheck", [](const OptStr& name, const OptStr& gens) {
    std::optional<NamedGroup> g;
    if (name || gens) g = resolve_group(name, gens);
    return dump(crosscheck_report(g));
  }, py::arg("group") = py::none(), py::arg("gens") = py::none());

  m.def("norm", [](const std::string& expr, std::uint64_t n) { return to_string(norm(parse_cyc(expr, n))); },
        py::arg("expression"), py::arg("n"), "Norm to Q as a decimal string such as \"-3/4\".");
  m.def("is_p_unit", [](const std::string& expr, std::uint64_t n, std::uint64_t p) {
    return is_p_unit(parse_cyc(expr, n), p);
  }, py::arg("expression"), py::arg("n"), py::arg("p"));
  m.def("qdim", [](const std::string& type, int l, const std::vector<int>& weight) {
    return cyc_to_json(qdim(build_root_system(type), l, Weight{weight})).dump();
  }, py::arg("type"), py::arg("l"), py::arg("weight"));
  m.def("char_degrees", [](const OptStr& name, const OptStr& gens) {
    return char_degrees(resolve_group(name, gens).group).degrees;
  }, py::arg("group") = py::none(), py::arg("gens") = py::none());
}
