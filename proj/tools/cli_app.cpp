#include "cli_app.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "expnev/algebra.hpp"
#include "expnev/discriminant.hpp"
#include "expnev/expr.hpp"
#include "expnev/numeric/checks.hpp"
#include "expnev/roots.hpp"
#include "expnev/serialize.hpp"

#ifndef EXPNEV_VERSION
#define EXPNEV_VERSION "unknown"
#endif

namespace expnev::cli {

using nlohmann::json;
namespace num = expnev::numeric;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Artifact {
  std::string body;
  int status = kExitPass;
};

std::string format_or(const RunConfig& c, const std::string& fallback, std::initializer_list<const char*> allowed) {
  const std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not available for " + c.command);
}

void need_inputs(const RunConfig& c, std::size_t n) {
  if (c.inputs.size() != n)
    throw UsageError(c.command + " expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                     std::to_string(c.inputs.size()));
}

std::vector<double> grid_of(const RunConfig& c) {
  if (!c.grid) throw UsageError(c.command + " needs --r-grid A:B:N");
  return num::make_grid(c.grid->start, c.grid->stop, c.grid->count, c.grid->geometric);
}

// A constant of Q(i), written in the expression grammar.
GR parse_constant(const std::string& text) {
  const auto l = expr::lower_to_symbolic(expr::parse_expression(text));
  if (!l.poly.is_constant()) throw UsageError("'" + text + "' is not a constant");
  const RatFunc c = l.poly.constant_term();
  if (c.num().degree() > 0 || c.den().degree() > 0) throw UsageError("'" + text + "' depends on z");
  return c.evaluate(GR(0));
}

json integer_json(const mpz_class& v) { return v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()); }

std::string basis_text(const UnitBasis& b) {
  std::string out;
  for (std::size_t j = 0; j < b.size(); ++j) out += (j ? "; " : "") + std::string("exp[") + zpoly::render(b.frequency(j)) + "]";
  return out.empty() ? "(empty)" : out;
}

Artifact report_artifact(const RunConfig& c, const num::CheckReport& rep, std::ostream& err) {
  const std::string f = format_or(c, "csv", {"csv", "json"});
  for (const auto& d : rep.diagnostics)
    err << json{{"level", rep.preconditions_ok ? "warning" : "error"}, {"kind", "precondition"}, {"check", rep.name},
                {"message", d}}
               .dump()
        << "\n";
  Artifact a;
  a.body = f == "json" ? report_to_json(rep).dump(2) + "\n" : num::report_to_csv(rep);
  a.status = !rep.preconditions_ok ? kExitDiagnostic : rep.pass ? kExitPass : kExitFail;
  return a;
}

Artifact cmd_indep(const RunConfig& c) {
  need_inputs(c, 1);
  const UnitBasis b = expr::parse_basis_list(c.inputs[0]);
  const auto& ind = b.independence();
  Artifact a;
  a.status = ind.independent ? kExitPass : kExitFail;
  if (format_or(c, "text", {"text", "json"}) == "json") {
    json dep = json::array();
    for (const auto& v : ind.dependence) dep.push_back(integer_json(v));
    a.body = json{{"independent", ind.independent}, {"dependence", dep}, {"basis", basis_to_json(b)}}.dump() + "\n";
  } else if (ind.independent) {
    a.body = "independent\n";
  } else {
    std::string v;
    for (const auto& x : ind.dependence) v += (v.empty() ? "" : ", ") + x.get_str();
    a.body = "dependent (" + v + ")\n";
  }
  return a;
}

Artifact cmd_disc(const RunConfig& c) {
  need_inputs(c, 1);
  const auto ly = expr::lower_ypoly(expr::parse_expression(c.inputs[0]));
  const LaurentPoly d = discriminant(ly.poly);
  Artifact a;
  if (format_or(c, "text", {"text", "json"}) == "json")
    a.body = json{{"basis", basis_to_json(ly.basis)},
                  {"discriminant", expr::render_laurent(d, ly.basis)},
                  {"terms", laurent_to_json(d)}}
                 .dump() +
             "\n";
  else
    a.body = "basis: " + basis_text(ly.basis) + "\n" + expr::render_laurent(d, ly.basis) + "\n";
  return a;
}

Artifact cmd_squarefree(const RunConfig& c) {
  need_inputs(c, 1);
  const auto l = expr::lower_to_symbolic(expr::parse_expression(c.inputs[0]));
  const auto dec = squarefree_decompose(l.poly);
  const bool sf = is_squarefree(l.poly);
  Artifact a;
  if (format_or(c, "text", {"text", "json"}) == "json") {
    json factors = json::array();
    for (const auto& [f, k] : dec.factors) factors.push_back({{"factor", expr::render_laurent(f, l.basis)}, {"multiplicity", k}});
    a.body = json{{"basis", basis_to_json(l.basis)},
                  {"squarefree", sf},
                  {"unit", expr::render_laurent(dec.unit, l.basis)},
                  {"factors", factors}}
                 .dump() +
             "\n";
  } else {
    std::ostringstream o;
    o << "basis: " << basis_text(l.basis) << "\n";
    o << "squarefree: " << (sf ? "true" : "false") << "\n";
    o << "unit: " << expr::render_laurent(dec.unit, l.basis) << "\n";
    for (const auto& [f, k] : dec.factors) o << "factor^" << k << ": " << expr::render_laurent(f, l.basis) << "\n";
    a.body = o.str();
  }
  return a;
}

Artifact cmd_du(const RunConfig& c) {
  need_inputs(c, 1);
  const auto l = expr::lower_to_symbolic(expr::parse_expression(c.inputs[0]));
  const LaurentPoly d = derivation_Du(l.poly, l.basis);
  Artifact a;
  if (format_or(c, "text", {"text", "json"}) == "json")
    a.body = json{{"basis", basis_to_json(l.basis)}, {"du", expr::render_laurent(d, l.basis)}, {"terms", laurent_to_json(d)}}
                 .dump() +
             "\n";
  else
    a.body = expr::render_laurent(d, l.basis) + "\n";
  return a;
}

Artifact cmd_separate(const RunConfig& c) {
  need_inputs(c, 1);
  const auto ly = expr::lower_ypoly(expr::parse_expression(c.inputs[0]));
  if (c.var < 0) throw UsageError("separate needs --var J");
  if (static_cast<std::size_t>(c.var) >= ly.basis.size())
    throw PreconditionError("--var " + std::to_string(c.var) + " is out of range for basis " + basis_text(ly.basis));
  const auto res = separate_variable(ly.poly, ly.basis, static_cast<std::size_t>(c.var));
  const std::string A = expr::render_laurent(res.shift, res.refined_basis);
  const std::string P = expr::render_ypoly(res.reduced, res.reduced_basis, "W");
  Artifact a;
  if (format_or(c, "text", {"text", "json"}) == "json") {
    a.body = json{{"var", c.var},
                  {"s", res.s.get_str()},
                  {"t", res.t.get_str()},
                  {"k", res.k},
                  {"shift", A},
                  {"reduced", P},
                  {"refined_basis", basis_to_json(res.refined_basis)},
                  {"reduced_basis", basis_to_json(res.reduced_basis)}}
                 .dump() +
             "\n";
  } else {
    std::ostringstream o;
    o << "basis: " << basis_text(ly.basis) << "\n";
    o << "s = " << res.s.get_str() << ", t = " << res.t.get_str() << ", k = " << res.k << "\n";
    o << "refined basis: " << basis_text(res.refined_basis) << "\n";
    o << "A = " << A << "\n";
    o << "P(W) = " << P << "\n";
    a.body = o.str();
  }
  return a;
}

Artifact cmd_extract(const RunConfig& c) {
  need_inputs(c, 1);
  const auto ly = expr::lower_ypoly(expr::parse_expression(c.inputs[0]));
  const auto roots = extract_exp_poly_roots(ly.poly, ly.basis);
  bool verified = true;
  for (const auto& r : roots) verified = verified && r.verified;
  Artifact a;
  a.status = verified ? kExitPass : kExitFail;
  if (format_or(c, "text", {"text", "json"}) == "json") {
    json list = json::array();
    for (const auto& r : roots)
      list.push_back({{"root", expr::render_laurent(r.root, r.basis)},
                      {"basis", basis_to_json(r.basis)},
                      {"refinement", r.refinement},
                      {"verified", r.verified}});
    a.body = json{{"roots", list}, {"verified", verified}}.dump() + "\n";
  } else {
    std::ostringstream o;
    for (const auto& r : roots) o << expr::render_laurent(r.root, r.basis) << "\n";
    o << "verified=" << (verified ? "true" : "false") << "\n";
    a.body = o.str();
  }
  return a;
}

Artifact cmd_zeros(const RunConfig& c) {
  need_inputs(c, 1);
  if (!(c.r > 0)) throw UsageError("zeros needs --r R with R > 0");
  const auto l = expr::lower_to_symbolic(expr::parse_expression(c.inputs[0]));
  num::ZeroOptions o;
  o.tol = c.tol;
  const auto zs = num::find_zeros(num::ExpPolyFunction(l.poly, l.basis), c.r, o);
  Artifact a;
  a.body = format_or(c, "csv", {"csv", "json"}) == "json" ? num::zeros_to_json(zs).dump(2) + "\n" : num::zeros_to_csv(zs);
  return a;
}

Artifact cmd_analyze(const RunConfig& c) {
  need_inputs(c, 1);
  const auto l = expr::lower_to_symbolic(expr::parse_expression(c.inputs[0]));
  num::SampleOptions o;
  o.tol = c.tol;
  o.levels = c.trunc;
  const auto s = num::characteristic(num::ExpPolyFunction(l.poly, l.basis), grid_of(c), o);
  Artifact a;
  a.body = format_or(c, "csv", {"csv", "json"}) == "json" ? num::samples_to_json(s).dump(2) + "\n" : num::samples_to_csv(s);
  return a;
}

Artifact cmd_gcd_count(const RunConfig& c) {
  need_inputs(c, 2);
  const auto lm = expr::lower_jointly({expr::parse_expression(c.inputs[0]), expr::parse_expression(c.inputs[1])});
  const num::ExpPolyFunction f(lm.polys[0], lm.basis), g(lm.polys[1], lm.basis);
  const auto grid = grid_of(c);
  const std::string fmt = format_or(c, "csv", {"csv", "json"});
  json rows = json::array();
  std::ostringstream csv;
  csv << "r,r_used,N_gcd,common_zeros\n";
  for (double r : grid) {
    const auto gc = num::gcd_counting(f, g, r, c.tol);
    int count = 0;
    for (const auto& z : gc.common) count += z.multiplicity;
    csv << num::format12(r) << "," << num::format12(gc.r_used) << "," << num::format12(gc.value) << "," << count << "\n";
    rows.push_back({{"r", num::round12(r)}, {"r_used", num::round12(gc.r_used)}, {"N_gcd", num::round12(gc.value)},
                    {"common_zeros", count}});
  }
  Artifact a;
  a.body = fmt == "json" ? rows.dump(2) + "\n" : csv.str();
  return a;
}

num::CheckOptions check_options(const RunConfig& c) {
  num::CheckOptions o;
  o.eps = c.eps;
  o.zero_tol = c.tol;
  return o;
}

Artifact cmd_smt(const RunConfig& c, std::ostream& err) {
  need_inputs(c, 2);
  const UnitBasis b = expr::parse_basis_list(c.inputs[1]);
  const LaurentPoly G = expr::lower_xpoly(expr::parse_expression(c.inputs[0]), b.size());
  return report_artifact(c, num::smt_moving_check(G, b, grid_of(c), check_options(c)), err);
}

Artifact cmd_check(const RunConfig& c, const std::string& which, std::ostream& err) {
  const auto opts = check_options(c);
  if (which == "first-main") {
    need_inputs(c, 1);
    const auto l = expr::lower_to_symbolic(expr::parse_expression(c.inputs[0]));
    return report_artifact(c, num::first_main_check(l.poly, l.basis, parse_constant(c.a), grid_of(c), opts), err);
  }
  if (which == "logderiv") {
    need_inputs(c, 1);
    const auto l = expr::lower_to_symbolic(expr::parse_expression(c.inputs[0]));
    return report_artifact(c, num::logderiv_check(l.poly, l.basis, grid_of(c), opts), err);
  }
  if (which == "borel") {
    need_inputs(c, 1);
    std::vector<expr::Node> asts;
    for (const auto& s : expr::split_list(c.inputs[0])) asts.push_back(expr::parse_expression(s));
    const auto lm = expr::lower_jointly(asts);
    return report_artifact(c, num::trunborel_check(lm.polys, lm.basis, grid_of(c), opts), err);
  }
  if (which == "gcd-small") {
    need_inputs(c, 3);
    const UnitBasis b = expr::parse_basis_list(c.inputs[2]);
    const LaurentPoly F = expr::lower_xpoly(expr::parse_expression(c.inputs[0]), b.size());
    const LaurentPoly G = expr::lower_xpoly(expr::parse_expression(c.inputs[1]), b.size());
    return report_artifact(c, num::gcd_smallness_check(F, G, b, grid_of(c), opts), err);
  }
  if (which == "dpower") {
    need_inputs(c, 2);
    const UnitBasis b = expr::parse_basis_list(c.inputs[1]);
    const LaurentPoly F = expr::lower_xpoly(expr::parse_expression(c.inputs[0]), b.size());
    return report_artifact(c, num::dpower_obstruction_check(F, b, grid_of(c), c.d, opts), err);
  }
  if (which == "transversal") {
    need_inputs(c, 1);
    const auto items = expr::split_list(c.inputs[0]);
    std::vector<expr::Node> asts;
    for (const auto& s : items) asts.push_back(expr::parse_expression(s));
    // Forms share the variables x0..xn with n + 1 = (number of forms) + 1.
    std::vector<LaurentPoly> forms;
    for (const auto& n : asts) forms.push_back(expr::lower_xpoly(n, items.size() + 1));
    const GR z0 = parse_constant(c.z0);
    return report_artifact(c, num::transversality_check(forms, z0.to_complex(), opts), err);
  }
  throw UsageError("unknown check '" + which + "'");
}

Artifact dispatch(const RunConfig& c, std::ostream& err) {
  const std::string& cmd = c.command;
  if (cmd == "indep") return cmd_indep(c);
  if (cmd == "disc") return cmd_disc(c);
  if (cmd == "squarefree") return cmd_squarefree(c);
  if (cmd == "du") return cmd_du(c);
  if (cmd == "separate") return cmd_separate(c);
  if (cmd == "extract-root") return cmd_extract(c);
  if (cmd == "zeros") return cmd_zeros(c);
  if (cmd == "analyze") return cmd_analyze(c);
  if (cmd == "gcd-count") return cmd_gcd_count(c);
  if (cmd == "smt-check") return cmd_smt(c, err);
  if (cmd.rfind("check ", 0) == 0) return cmd_check(c, cmd.substr(6), err);
  throw UsageError("unknown command '" + cmd + "'");
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["inputs"] = c.inputs;
  if (c.grid)
    j["r_grid"] = {{"start", c.grid->start}, {"stop", c.grid->stop}, {"count", c.grid->count}, {"log", c.grid->geometric}};
  else
    j["r_grid"] = nullptr;
  j["r"] = c.r;
  j["tol"] = c.tol;
  j["trunc"] = c.trunc;
  j["eps"] = c.eps;
  j["out"] = c.out;
  j["format"] = c.format;
  j["var"] = c.var;
  j["a"] = c.a;
  j["d"] = c.d;
  j["z0"] = c.z0;
  return j;
}

void write_atomically(const std::filesystem::path& path, const std::string& body) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << body;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

void diagnostic(std::ostream& err, const std::string& kind, const std::string& message, json extra = json::object()) {
  json j = {{"level", "error"}, {"kind", kind}, {"message", message}};
  j.update(extra);
  err << j.dump() << "\n";
}

}  // namespace

Grid parse_grid(const std::string& text, bool geometric) {
  Grid g;
  g.geometric = geometric;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof())
    throw std::invalid_argument("r-grid must look like A:B:N, got '" + text + "'");
  if (!(g.start < g.stop)) throw std::invalid_argument("r-grid needs start < stop");
  if (g.count < 2) throw std::invalid_argument("r-grid needs at least 2 points");
  if (!(g.start > 0)) throw std::invalid_argument("r-grid radii must be positive");
  return g;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  Artifact art;
  try {
    if (!(config.tol > 0)) throw UsageError("--tol must be positive");
    if (!(config.eps > 0)) throw UsageError("--eps must be positive");
    for (int q : config.trunc)
      if (q < 1) throw UsageError("--trunc levels must be positive");
    art = dispatch(config, err);
  } catch (const UsageError& e) {
    diagnostic(err, "usage", e.what());
    return kExitUsage;
  } catch (const SyntaxError& e) {
    diagnostic(err, "syntax", e.what(), {{"offset", e.offset()}, {"expected", e.expected()}});
    return kExitUsage;
  } catch (const LoweringError& e) {
    diagnostic(err, "lowering", e.what());
    return kExitDiagnostic;
  } catch (const SeparationError& e) {
    json rejected = json::array();
    for (const auto& t : e.rejected()) rejected.push_back(t.get_str());
    diagnostic(err, "separation", e.what(), {{"rejected_t", rejected}});
    return kExitDiagnostic;
  } catch (const ExtractionError& e) {
    diagnostic(err, "extraction", e.what());
    return kExitDiagnostic;
  } catch (const PreconditionError& e) {
    diagnostic(err, "precondition", e.what());
    return kExitDiagnostic;
  } catch (const NumericError& e) {
    diagnostic(err, "numeric", e.what());
    return kExitDiagnostic;
  } catch (const std::exception& e) {
    diagnostic(err, "internal", e.what());
    return kExitDiagnostic;
  }

  if (config.out.empty()) {
    out << art.body;
    return art.status;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  try {
    write_atomically(config.out, art.body);
    const json manifest = {{"tool", "expnev"},       {"version", EXPNEV_VERSION}, {"config", config_json(config)},
                           {"artifact", config.out}, {"exit_code", art.status},   {"wall_time_seconds", wall}};
    write_atomically(config.out + ".manifest.json", manifest.dump(2) + "\n");
  } catch (const std::exception& e) {
    diagnostic(err, "io", e.what());
    return kExitDiagnostic;
  }
  return art.status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential polynomials: exact algebra and Nevanlinna diagnostics", "expnev"};
  app.set_version_flag("--version", EXPNEV_VERSION);
  app.set_config("--config", "", "INI file; [section] per subcommand, flags override")->check(CLI::ExistingFile);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string grid_text;
  bool log_grid = false;

  auto common = [&](CLI::App* s, bool numeric) {
    s->configurable();
    s->add_option("--format", cfg.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--out", cfg.out, "write the artifact (and a manifest) here");
    if (numeric) {
      s->add_option("--tol", cfg.tol, "zero-search tolerance");
      s->add_option("--r-grid", grid_text, "radii A:B:N");
      s->add_flag("--log", log_grid, "geometric grid spacing");
      s->add_option("--trunc", cfg.trunc, "truncation levels")->delimiter(',');
      s->add_option("--eps", cfg.eps, "relative threshold");
    }
  };
  auto positional = [&](CLI::App* s, const std::string& what, int n) {
    s->add_option("inputs", cfg.inputs, what)->required()->expected(n);
  };

  struct Entry {
    const char* name;
    const char* help;
    const char* args;
    int count;
    bool numeric;
  };
  const std::vector<Entry> entries = {
      {"indep", "independence of units", "BASIS", 1, false},
      {"disc", "discriminant of a monic polynomial in Y", "FY", 1, false},
      {"squarefree", "square-free decomposition", "EXPR", 1, false},
      {"du", "the derivation D_u", "EXPR", 1, false},
      {"separate", "separate one unit from F(Y)", "FY", 1, false},
      {"extract-root", "roots of F(Y) in the ring", "FY", 1, false},
      {"zeros", "zeros in a disk", "EXPR", 1, true},
      {"analyze", "Nevanlinna functions over a grid", "EXPR", 1, true},
      {"gcd-count", "common-zero counting function", "EXPR EXPR", 2, true},
      {"smt-check", "moving-target check for G(u)", "G BASIS", 2, true},
  };
  std::vector<std::pair<CLI::App*, std::string>> subs;
  for (const auto& e : entries) {
    CLI::App* s = app.add_subcommand(e.name, e.help);
    common(s, e.numeric);
    positional(s, e.args, e.count);
    subs.emplace_back(s, e.name);
  }
  app.get_subcommand("separate")->add_option("--var", cfg.var, "index of the unit to separate")->required();
  app.get_subcommand("zeros")->add_option("--r", cfg.r, "disk radius")->required();

  CLI::App* check = app.add_subcommand("check", "inequality checks");
  check->configurable();
  check->require_subcommand(1);
  const std::vector<Entry> checks = {
      {"first-main", "m(a) + N(a) - T bounded", "EXPR", 1, true},
      {"logderiv", "proximity of f'/f", "EXPR", 1, true},
      {"borel", "truncated Borel inequality", "F0; F1; ...", 1, true},
      {"gcd-small", "N_gcd(F(u), G(u)) small", "F G BASIS", 3, true},
      {"dpower", "d-th power obstruction", "F BASIS", 2, true},
      {"transversal", "Jacobian at intersection points", "F1; ...", 1, false},
  };
  for (const auto& e : checks) {
    CLI::App* s = check->add_subcommand(e.name, e.help);
    common(s, e.numeric);
    positional(s, e.args, e.count);
    subs.emplace_back(s, std::string("check ") + e.name);
  }
  check->get_subcommand("first-main")->add_option("--a", cfg.a, "target value");
  check->get_subcommand("dpower")->add_option("--d", cfg.d, "power d");
  check->get_subcommand("transversal")->add_option("--z0", cfg.z0, "specialization point");
  check->get_subcommand("transversal")->add_option("--tol", cfg.tol, "tolerance");
  check->get_subcommand("transversal")->add_option("--eps", cfg.eps, "unused; accepted for uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << EXPNEV_VERSION << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    diagnostic(err, "usage", e.what());
    return kExitUsage;
  }
  for (const auto& [s, name] : subs)
    if (s->parsed()) cfg.command = name;
  if (!grid_text.empty()) {
    try {
      cfg.grid = parse_grid(grid_text, log_grid);
    } catch (const std::invalid_argument& e) {
      diagnostic(err, "usage", e.what());
      return kExitUsage;
    }
  }
  return run(cfg, out, err);
}

}  // namespace expnev::cli
