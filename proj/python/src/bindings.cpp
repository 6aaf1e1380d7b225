// Reports cross the boundary as canonical JSON text; the Python package
// decodes them and turns rationals into fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dexp/cli/cli.hpp"
#include "dexp/io/json.hpp"

namespace py = pybind11;
using namespace dexp;

namespace {

Params parse_params(const std::string& text) { return io::params_from_json(io::json::parse(text)); }

std::string exponents_report(const std::string& params) {
  const Params p = parse_params(params);
  const SystemGeometry g = build_geometry(p);
  const ExponentTuple traj = trajectory_exponents(g);
  const ExponentTuple table = closed_forms_paper(p);
  DiffReport diff = compare(traj, table);
  diff.criteria = criterion_report(g);
  return io::dump({{"trajectory", io::to_json(traj)},
                   {"paper_table", io::to_json(table)},
                   {"derived", io::to_json(mnuv(p))},
                   {"diff", io::to_json(diff)},
                   {"chains", check_chains(traj)}});
}

std::string certify_report(const std::string& params, const std::string& set_name) {
  const Params p = parse_params(params);
  const FunctionSet set = parse_function_set(set_name);
  return io::dump({{"independence", io::to_json(independence_certificate(p.n, p, set))},
                   {"uniform_block", io::to_json(uniform_block_certificate(p.n, p, set))},
                   {"specialization", io::to_json(specialization_rank_check(p.n, p))}});
}

std::string sample_report(const std::string& params, const std::string& radius, std::size_t count,
                          std::uint64_t seed) {
  const Params p = parse_params(params);
  io::json rows = io::json::array();
  for (const auto& s : sample_neighborhood(p, Rat::parse(radius), count, seed)) {
    rows.push_back({{"index", s.index}, {"params", io::to_json(s.params)}, {"exponents", io::to_json(s.exponents)}});
  }
  return io::dump(rows);
}

std::vector<std::string> eval_at(const std::string& params, const std::string& q) {
  const NSystem s(build_geometry(parse_params(params)));
  std::vector<std::string> out;
  for (const auto& v : eval_system(s, Rat::parse(q))) out.push_back(v.str());
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact exponent spectra of parametric (n+1)-systems";

  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);
  py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", PyExc_ValueError);
  py::register_exception<BranchNotStable>(m, "BranchNotStable", PyExc_RuntimeError);

  m.def("canonical_params", [](int n) { return io::dump(io::to_json(canonical_params(n))); }, py::arg("n"));
  m.def("validate", [](const std::string& p) { return io::dump(io::to_json(validate_params(parse_params(p)))); },
        py::arg("params"));
  m.def("graph", [](const std::string& p) { return io::dump(io::to_json(export_graph(build_geometry(parse_params(p))))); },
        py::arg("params"));
  m.def("eval_system", &eval_at, py::arg("params"), py::arg("q"));
  m.def("exponents", &exponents_report, py::arg("params"));
  m.def("certify", &certify_report, py::arg("params"), py::arg("function_set") = "trajectory");
  m.def("cfcheck",
        [](const std::string& p, bool specialize_c) {
          const Params params = parse_params(p);
          return io::dump({{"numeric", io::to_json(cf_identity_check(params, specialize_c))},
                           {"symbolic", io::to_json(constant_term_check(params.n))}});
        },
        py::arg("params"), py::arg("specialize_c") = true);
  m.def("sample", &sample_report, py::arg("params"), py::arg("radius"), py::arg("count"), py::arg("seed"));
  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
