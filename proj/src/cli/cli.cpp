#include "dexp/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dexp/io/json.hpp"

namespace dexp::cli {

namespace {

using io::json;

struct Config {
  std::optional<int> canonical;
  std::string params_file;
  std::string output;
  std::string format = "csv";
  std::string radius = "1/64";
  std::size_t count = 100;
  std::optional<std::uint64_t> seed;
  std::string set = "trajectory";
  bool no_specialize_c = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Params load_params(const Config& cfg) {
  if (cfg.canonical) return canonical_params(*cfg.canonical);
  std::ifstream in(cfg.params_file);
  if (!in) throw UsageError("cannot open parameter file '" + cfg.params_file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON in '") + cfg.params_file + "': " + e.what());
  }
  try {
    return io::params_from_json(j);
  } catch (const UnsupportedDimension&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad parameter file: ") + e.what());
  }
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + cfg.output + "'");
  f << text;
}

int cmd_validate(const Config& cfg, std::ostream& out) {
  const Params p = load_params(cfg);
  const auto report = validate_params(p);
  emit(cfg, io::dump({{"params", io::to_json(p)}, {"validation", io::to_json(report)}}), out);
  return report.valid() ? ok : failure;
}

int cmd_exponents(const Config& cfg, std::ostream& out) {
  const Params p = load_params(cfg);
  const SystemGeometry g = build_geometry(p);
  const ExponentTuple traj = trajectory_exponents(g);
  const ExponentTuple table = closed_forms_paper(p);
  DiffReport diff = compare(traj, table);
  diff.criteria = criterion_report(g);
  json j = {{"params", io::to_json(p)},
            {"trajectory", io::to_json(traj)},
            {"paper_table", io::to_json(table)},
            {"derived", io::to_json(mnuv(p))},
            {"criterion", io::to_json(diff.criteria)},
            {"diff", io::to_json(diff)},
            {"chains", check_chains(traj)},
            {"attainment", check_attainment(g, traj)},
            {"uniform0_formula", io::to_json(trajectory_uniform0_formula(p))}};
  emit(cfg, io::dump(j), out);
  return ok;
}

int cmd_graph(const Config& cfg, std::ostream& out) {
  const SystemGeometry g = build_geometry(load_params(cfg));
  emit(cfg, io::dump(io::to_json(export_graph(g))), out);
  return ok;
}

int cmd_certify(const Config& cfg, std::ostream& out) {
  const Params p = load_params(cfg);
  const FunctionSet set = parse_function_set(cfg.set);
  const auto full = independence_certificate(p.n, p, set);
  const auto uniform = uniform_block_certificate(p.n, p, set);
  const auto spec = specialization_rank_check(p.n, p);
  const bool pass = full.full_rank() && uniform.full_rank() && spec.full_rank();
  json j = {{"independence", io::to_json(full)},
            {"uniform_block", io::to_json(uniform)},
            {"specialization", io::to_json(spec)},
            {"verdict", pass ? "independent" : "dependent"}};
  emit(cfg, io::dump(j), out);
  return pass ? ok : failure;
}

int cmd_sample(const Config& cfg, std::ostream& out) {
  const Params p = load_params(cfg);
  const auto report = validate_params(p);
  if (!report.valid()) throw InvalidParams(report);
  const Rat radius = Rat::parse(cfg.radius);
  const std::uint64_t seed = *cfg.seed;
  const auto samples = sample_neighborhood(p, radius, cfg.count, seed);
  if (cfg.format == "csv") {
    emit(cfg, samples_csv(p.n, seed, samples), out);
  } else {
    json rows = json::array();
    for (const auto& s : samples) {
      rows.push_back({{"index", s.index}, {"params", io::to_json(s.params)}, {"exponents", io::to_json(s.exponents)}});
    }
    emit(cfg, io::dump({{"n", p.n}, {"seed", seed}, {"samples", std::move(rows)}}), out);
  }
  return ok;
}

int cmd_cfcheck(const Config& cfg, std::ostream& out) {
  const Params p = load_params(cfg);
  const auto report = validate_params(p);
  if (!report.valid()) throw InvalidParams(report);
  const auto numeric = cf_identity_check(p, !cfg.no_specialize_c);
  const auto symbolic = constant_term_check(p.n);
  const bool pass = numeric.pass() && symbolic.pass();
  json j = {{"specialize_c", !cfg.no_specialize_c},
            {"numeric", io::to_json(numeric)},
            {"symbolic", io::to_json(symbolic)},
            {"pass", pass}};
  emit(cfg, io::dump(j), out);
  return pass ? ok : failure;
}

}  // namespace

std::string samples_csv(int n, std::uint64_t seed, const std::vector<Sample>& samples) {
  std::ostringstream s;
  s << "n,seed,index,C";
  for (int k = 2; k <= n; ++k) s << ",A_" << k;
  s << ",D";
  for (int k = 2; k <= n; ++k) s << ",B_" << k;
  for (int d = 0; d < n; ++d) s << ",What_" << d;
  for (int d = 0; d < n; ++d) s << ",W_" << d;
  s << "\n";
  for (const auto& x : samples) {
    const Params& p = x.params;
    s << n << "," << seed << "," << x.index << "," << p.C;
    for (int k = 2; k <= n; ++k) s << "," << p.a(k);
    s << "," << p.D;
    for (int k = 2; k <= n; ++k) s << "," << p.b(k);
    for (const auto& w : x.exponents.uniform) s << "," << w;
    for (const auto& w : x.exponents.ordinary) s << "," << w;
    s << "\n";
  }
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponent spectra of parametric (n+1)-systems", "dexp"};
  app.require_subcommand(1);
  Config cfg;

  auto add_source = [&cfg](CLI::App* sub) {
    auto* canon = sub->add_option("--canonical", cfg.canonical, "use the canonical parameter point of dimension N");
    auto* file = sub->add_option("--params", cfg.params_file, "JSON parameter file");
    canon->excludes(file);
    file->excludes(canon);
    sub->add_option("-o,--output", cfg.output, "write the report to this path");
  };

  auto* validate = app.add_subcommand("validate", "check the parameter inequalities");
  auto* exponents = app.add_subcommand("exponents", "trajectory vs closed-form exponents");
  auto* graph = app.add_subcommand("graph", "plot data of the combined graph");
  auto* certify = app.add_subcommand("certify", "Jacobian-rank independence certificates");
  auto* sample = app.add_subcommand("sample", "sample the exponent spectrum near a point");
  auto* cfcheck = app.add_subcommand("cfcheck", "continued-fraction and constant-term identities");
  for (auto* sub : {validate, exponents, graph, certify, sample, cfcheck}) add_source(sub);

  certify->add_option("--set", cfg.set, "function set: trajectory | paper")
      ->check(CLI::IsMember({"trajectory", "paper", "paper_table"}));
  sample->add_option("--radius", cfg.radius, "box half-width as p/q");
  sample->add_option("--count", cfg.count, "number of valid samples");
  sample->add_option("--seed", cfg.seed, "generator seed")->required();
  sample->add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  cfcheck->add_flag("--no-specialize-c", cfg.no_specialize_c, "keep C unspecialized in the e-terms");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!cfg.canonical && cfg.params_file.empty()) {
      err << "error: one of --canonical or --params is required\n";
      return usage;
    }
    if (sub == validate) return cmd_validate(cfg, out);
    if (sub == exponents) return cmd_exponents(cfg, out);
    if (sub == graph) return cmd_graph(cfg, out);
    if (sub == certify) return cmd_certify(cfg, out);
    if (sub == sample) return cmd_sample(cfg, out);
    if (sub == cfcheck) return cmd_cfcheck(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const UnsupportedDimension& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return usage;
}

}  // namespace dexp::cli
