// orlicz: command-line front end for norms, structural checks and the
// verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error (including
// bad arguments), 3 non-convergence, 4 inconclusive quadrature.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "acceptance.hpp"
#include "orlicz/orlicz.hpp"

namespace {

using nlohmann::ordered_json;
using namespace orlicz;

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw NumericError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

ordered_json num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

ordered_json num(ExtReal v) { return v.is_infinite() ? ordered_json("+inf") : num(v.to_double()); }

struct Config {
  std::string command;
  std::string young, y1, y2;
  std::string function, profile, matrix, weight, weight_matrix, state, f, g, space = "sigma";
  std::string kind = "luxemburg";
  double p = 2.0;
  double rel_tol = 1e-10, abs_tol = 1e-10, quad_rel_tol = 1e-8, trace_scale = 1.0;
  double grid_lo = 1e-6, grid_hi = 1e6;
  int grid_n = 512;
  int max_iterations = 200;
  std::uint64_t seed = 42;
  std::vector<std::string> only;
  int threads = 0;
  std::string format = "json";
  std::string out;

  NormOptions norm_options() const {
    NormOptions o;
    o.rel_tol = rel_tol;
    o.max_iterations = max_iterations;
    o.modular.abs_tol = abs_tol;
    o.modular.rel_tol = quad_rel_tol;
    return o;
  }

  // Everything that influences the result, but not where it is written.
  std::string canonical() const {
    std::ostringstream s;
    s.precision(17);
    s << "command=" << command << "\nyoung=" << young << "\ny1=" << y1 << "\ny2=" << y2 << "\nspace=" << space
      << "\nkind=" << kind << "\np=" << p << "\nrel_tol=" << rel_tol << "\nabs_tol=" << abs_tol
      << "\nquad_rel_tol=" << quad_rel_tol << "\nmax_iterations=" << max_iterations << "\ntrace_scale=" << trace_scale << "\ngrid=" << grid_lo << ","
      << grid_hi << "," << grid_n << "\nseed=" << seed << "\nformat=" << format << "\nonly=";
    for (const auto& o : only) s << o << ",";
    return s.str();
  }
};

// Digest over the named inputs: file contents for paths, the text otherwise.
std::string inputs_digest(const Config& c) {
  std::string blob;
  auto add = [&](const char* label, const std::string& v, bool is_file) {
    if (v.empty()) return;
    blob += label;
    blob += '\0';
    blob += is_file ? io::read_file(v) : v;
    blob += '\0';
  };
  add("young", c.young, false);
  if (!c.young.empty() && std::filesystem::is_regular_file(c.young)) add("young_file", c.young, true);
  add("y1", c.y1, false);
  add("y2", c.y2, false);
  add("function", c.function, true);
  add("profile", c.profile, true);
  add("matrix", c.matrix, true);
  add("weight", c.weight, true);
  add("weight_matrix", c.weight_matrix, true);
  add("state", c.state, true);
  add("f", c.f, true);
  add("g", c.g, true);
  if (c.command == "verify") add("seed", std::to_string(c.seed), false);
  return sha256(blob);
}

MeasureSpaceDesc parse_space(const std::string& s) {
  if (s == "sigma") return MeasureSpaceDesc::sigma_finite();
  if (s == "probability") return MeasureSpaceDesc::probability();
  if (s.rfind("finite:", 0) == 0) return MeasureSpaceDesc::finite(std::stod(s.substr(7)));
  throw DomainError("unknown measure space '" + s + "'");
}

bool is_matrix_file(const std::string& path) {
  const auto j = ordered_json::parse(io::read_file(path), nullptr, false);
  return j.is_object() && j.contains("dim");
}

ordered_json interval_json(const DomainInterval& d) {
  return {{"lo", num(d.lo)}, {"hi", num(d.hi)}, {"lo_closed", d.lo_closed}, {"hi_closed", d.hi_closed}};
}

ordered_json envelope(const Config& c, const std::string& op) {
  ordered_json j;
  j["op"] = op;
  j["inputs_digest"] = inputs_digest(c);
  return j;
}

void seal(ordered_json& j, const Config& c) {
  j["tool_version"] = ORLICZ_VERSION;
  j["config_digest"] = sha256(c.canonical());
}

ordered_json norm_record(const Config& c, const std::string& op, const NormReport& r) {
  if (!r.converged && r.value.is_finite() && r.value.to_double() > 0.0)
    throw NotConverged(op + " did not converge after " + std::to_string(r.iterations) + " iterations");
  ordered_json j = envelope(c, op);
  j["value"] = num(r.value);
  j["witness"] = num(r.witness);
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["tolerance"] = c.rel_tol;
  seal(j, c);
  return j;
}

ordered_json run_norm(const Config& c) {
  if (c.young.empty()) throw DomainError("norm needs --young");
  const YoungFunction y = io::load_young(c.young);
  const NormOptions opts = c.norm_options();
  const bool orl = c.kind == "orlicz";
  if (c.kind != "luxemburg" && !orl) throw DomainError("--kind must be luxemburg or orlicz");
  const TraceFunctional tau = TraceFunctional::scaled(c.trace_scale);

  if (!c.function.empty()) {
    const SimpleFunction f = io::load_simple_function(c.function, parse_space(c.space));
    return norm_record(c, orl ? "orlicz_norm" : "luxemburg_norm",
                       orl ? orlicz_norm(y, f, opts) : luxemburg_norm(y, f, opts));
  }
  if (!c.profile.empty()) {
    const DecreasingProfile p = io::load_profile(c.profile);
    if (!c.weight.empty()) {
      if (orl) throw DomainError("weighted norms are Luxemburg norms");
      const WeightedQuantumSpace space(y, io::load_profile(c.weight));
      return norm_record(c, "weighted_nc_norm", weighted_nc_norm(space, p, opts));
    }
    return norm_record(c, orl ? "orlicz_norm" : "luxemburg_norm",
                       orl ? orlicz_norm(y, p, nullptr, opts) : luxemburg_norm(y, p, nullptr, opts));
  }
  if (!c.matrix.empty()) {
    const MatrixObservable a = io::load_matrix(c.matrix);
    if (!c.weight_matrix.empty() || !c.weight.empty()) {
      if (orl) throw DomainError("weighted norms are Luxemburg norms");
      const WeightedQuantumSpace space =
          c.weight_matrix.empty() ? WeightedQuantumSpace(y, io::load_profile(c.weight))
                                  : WeightedQuantumSpace::from_matrix(y, io::load_matrix(c.weight_matrix), tau);
      return norm_record(c, "weighted_nc_norm", weighted_nc_norm(space, a, tau, opts));
    }
    if (orl) return norm_record(c, "orlicz_norm", orlicz_norm(y, singular_profile(a, tau), nullptr, opts));
    return norm_record(c, "nc_norm", nc_norm(y, a, tau, opts));
  }
  throw DomainError("norm needs one of --function, --profile, --matrix");
}

std::vector<double> grid_of(const Config& c) { return geometric_grid(c.grid_lo, c.grid_hi, static_cast<std::size_t>(c.grid_n)); }

ordered_json check_record(const Config& c, const std::string& op, bool verdict, ordered_json witness) {
  ordered_json j = envelope(c, op);
  j["value"] = verdict;
  j["witness"] = std::move(witness);
  j["converged"] = true;
  j["iterations"] = 0;
  j["tolerance"] = ordered_json();
  seal(j, c);
  return j;
}

ordered_json run_check(const std::string& what, const Config& c) {
  if (what == "delta2") {
    const auto r = delta2_check(io::load_young(c.young), grid_of(c));
    return check_record(c, "delta2_check", r.holds,
                        {{"s0", num(r.s0)}, {"c", num(r.c)}, {"grid_points", r.evidence_grid.size()}});
  }
  if (what == "nabla2") {
    const auto r = nabla2_check(io::load_young(c.young), grid_of(c));
    return check_record(c, "nabla2_check", r.holds,
                        {{"x0", num(r.x0)}, {"l", num(r.l)}, {"grid_points", r.evidence_grid.size()}});
  }
  if (what == "equivalent") {
    if (c.y1.empty() || c.y2.empty()) throw DomainError("equivalent needs --y1 and --y2");
    const auto r = equivalence_check(io::load_young(c.y1), io::load_young(c.y2), grid_of(c));
    return check_record(c, "equivalence_check", r.equivalent,
                        {{"b_forward", num(r.b_forward)}, {"b_backward", num(r.b_backward)}, {"grid_points", r.grid.size()}});
  }
  if (what == "regular") {
    RegularityReport r;
    if (!c.profile.empty()) {
      if (c.weight.empty()) throw DomainError("regular needs --weight with --profile");
      r = classical_regular_check(io::load_profile(c.profile), io::load_profile(c.weight));
    } else if (!c.function.empty()) {
      if (c.state.empty()) throw DomainError("regular needs --state with --function");
      r = classical_regular_check(io::load_simple_function(c.function),
                                  WeightedDensityState(io::load_simple_function(c.state)));
    } else {
      throw DomainError("regular needs --profile or --function");
    }
    return check_record(c, "classical_regular_check", r.regular,
                        {{"domain", interval_json(r.domain)},
                         {"symmetric_domain", interval_json(r.symmetric_domain)},
                         {"cosh_member", r.cosh_member},
                         {"agrees", r.agrees}});
  }
  if (what == "quantum-regular") {
    if (c.weight.empty()) throw DomainError("quantum-regular needs --weight");
    const DecreasingProfile w = io::load_profile(c.weight);
    QuantumRegularityReport r;
    if (!c.profile.empty())
      r = quantum_regular_check(io::load_profile(c.profile), w);
    else if (!c.matrix.empty())
      r = quantum_regular_check(io::load_matrix(c.matrix), w, TraceFunctional::scaled(c.trace_scale));
    else
      throw DomainError("quantum-regular needs --profile or --matrix");
    return check_record(c, "quantum_regular_check", r.regular,
                        {{"domain", interval_json(r.domain)}, {"weighted_member", r.weighted_member}, {"agrees", r.agrees}});
  }
  if (what == "majorization") {
    if (c.f.empty() || c.g.empty()) throw DomainError("majorization needs --f and --g");
    MajorizationReport r;
    if (is_matrix_file(c.f) && is_matrix_file(c.g))
      r = majorization_check(io::load_matrix(c.f), io::load_matrix(c.g));
    else
      r = majorization_check(io::load_profile(c.f), io::load_profile(c.g));
    double worst = kInf;
    for (double m : r.margins) worst = std::min(worst, m);
    return check_record(c, "majorization_check", r.majorized,
                        {{"alphas", r.alphas.size()}, {"min_margin", num(worst)}});
  }
  if (what == "embedding") {
    EmbeddingTable t;
    if (!c.function.empty())
      t = embedding_chain_check(io::load_simple_function(c.function, MeasureSpaceDesc::probability()), c.p);
    else if (!c.profile.empty())
      t = embedding_chain_check(io::load_profile(c.profile), c.p);
    else
      throw DomainError("embedding needs --function or --profile");
    return check_record(c, "embedding_chain_check", t.finiteness_monotone(),
                        {{"sup", num(t.sup_norm)}, {"exp", num(t.exp_norm)}, {"lp", num(t.lp_norm)},
                         {"p", t.p}, {"llogl", num(t.llogl_norm)}, {"l1", num(t.l1_norm)}});
  }
  throw DomainError("unknown check '" + what + "'");
}

ordered_json run_verify(const Config& c, bool& all_passed) {
  acceptance::SuiteOptions opts;
  opts.seed = c.seed;
  opts.only = c.only;
  opts.threads = c.threads;
  const auto results = acceptance::run_suite(opts);
  all_passed = !results.empty();
  ordered_json criteria = ordered_json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"group", r.group},
                        {"passed", r.passed},
                        {"cases", r.cases},
                        {"measured", acceptance::format_double(r.measured)},
                        {"tolerance", acceptance::format_double(r.tolerance)},
                        {"detail", r.detail}});
  }
  ordered_json j = envelope(c, "verify");
  j["value"] = all_passed;
  j["witness"] = std::move(criteria);
  j["converged"] = true;
  j["iterations"] = results.size();
  j["tolerance"] = ordered_json();
  j["seed"] = c.seed;
  seal(j, c);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const ordered_json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

// Flat projection: one row per report, or one row per criterion for verify.
std::string to_csv(const ordered_json& j) {
  std::ostringstream s;
  auto emit = [&](const std::vector<std::pair<std::string, std::string>>& cols, bool header) {
    for (std::size_t i = 0; i < cols.size(); ++i) s << (i ? "," : "") << csv_field(header ? cols[i].first : cols[i].second);
    s << "\n";
  };
  if (j.at("op") == "verify") {
    bool first = true;
    for (const auto& crit : j.at("witness")) {
      std::vector<std::pair<std::string, std::string>> cols;
      ordered_json row = j;
      row.erase("witness");
      row["criterion"] = crit;
      flatten(row, "", cols);
      if (first) emit(cols, true);
      emit(cols, false);
      first = false;
    }
    return s.str();
  }
  std::vector<std::pair<std::string, std::string>> cols;
  flatten(j, "", cols);
  emit(cols, true);
  emit(cols, false);
  return s.str();
}

void write_output(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(c.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw DomainError("cannot write '" + tmp.string() + "'");
    o << text;
    o.flush();
    if (!o) {
      o.close();
      std::filesystem::remove(tmp);
      throw DomainError("write to '" + tmp.string() + "' failed");
    }
  }
  std::filesystem::rename(tmp, target);
}

void add_common(CLI::App* cmd, Config& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "Write the report here (atomically) instead of stdout");
}

void add_inputs(CLI::App* cmd, Config& c) {
  cmd->add_option("--young", c.young, "Young function: catalog name or tabulated density file");
  cmd->add_option("--function", c.function, "Simple function file (value weight per line)");
  cmd->add_option("--space", c.space, "Measure space: sigma, probability or finite:<mass>");
  cmd->add_option("--profile", c.profile, "Decreasing profile JSON");
  cmd->add_option("--matrix", c.matrix, "Matrix JSON");
  cmd->add_option("--weight", c.weight, "Weight profile JSON");
  cmd->add_option("--trace-scale", c.trace_scale, "Trace functional tau = c Tr");
  cmd->add_option("--rel-tol", c.rel_tol, "Relative tolerance of the norm root-find");
  cmd->add_option("--max-iterations", c.max_iterations, "Iteration cap of the norm root-find");
  cmd->add_option("--abs-tol", c.abs_tol, "Absolute quadrature tolerance");
  cmd->add_option("--quad-rel-tol", c.quad_rel_tol, "Relative quadrature tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for classical and noncommutative Orlicz spaces"};
  app.set_version_flag("--version", std::string(ORLICZ_VERSION));
  app.require_subcommand(1);
  Config c;

  auto* norm = app.add_subcommand("norm", "Luxemburg, Orlicz, noncommutative or weighted norm");
  add_inputs(norm, c);
  add_common(norm, c);
  norm->add_option("--kind", c.kind, "luxemburg or orlicz");
  norm->add_option("--weight-matrix", c.weight_matrix, "Matrix whose singular values weight the measure");

  auto* check = app.add_subcommand("check", "Structural checks");
  std::string what;
  check->add_option("what", what, "delta2, nabla2, equivalent, regular, quantum-regular, majorization, embedding")
      ->required()
      ->check(CLI::IsMember({"delta2", "nabla2", "equivalent", "regular", "quantum-regular", "majorization", "embedding"}));
  add_inputs(check, c);
  add_common(check, c);
  check->add_option("--y1", c.y1, "First Young function");
  check->add_option("--y2", c.y2, "Second Young function");
  check->add_option("--state", c.state, "Density of the reference state (simple function file)");
  check->add_option("--f", c.f, "Majorizing side (profile or matrix JSON)");
  check->add_option("--g", c.g, "Majorized side (profile or matrix JSON)");
  check->add_option("--p", c.p, "Exponent for the L^p slot of the embedding chain");
  check->add_option("--grid-lo", c.grid_lo, "Smallest grid point");
  check->add_option("--grid-hi", c.grid_hi, "Largest grid point");
  check->add_option("--grid-n", c.grid_n, "Number of grid points");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  add_common(verify, c);
  verify->add_option("--seed", c.seed, "Seed for the randomized criteria");
  verify->add_option("--only", c.only, "Groups (young, classical, quantum, maps, determinism) or criterion ids")
      ->delimiter(',');
  verify->add_option("--threads", c.threads, "Worker threads (default: ORLICZ_KIT_THREADS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ordered_json report;
    int code = 0;
    if (norm->parsed()) {
      c.command = "norm";
      report = run_norm(c);
    } else if (check->parsed()) {
      c.command = "check " + what;
      report = run_check(what, c);
    } else {
      c.command = "verify";
      bool ok = false;
      report = run_verify(c, ok);
      code = ok ? 0 : 1;
    }
    write_output(c, c.format == "csv" ? to_csv(report) : report.dump(2) + "\n");
    return code;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 4;
  } catch (const NotConverged& e) {
    std::cerr << "not converged: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
