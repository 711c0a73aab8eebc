#include "phaselab/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "phaselab/catalog.hpp"
#include "phaselab/lab.hpp"
#include "phaselab/sym/calculus.hpp"
#include "phaselab/sym/parse.hpp"
#include "phaselab/tolerances.hpp"

namespace phaselab::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace sym;

/// Destination for stdout text and for files under --out.
class Sink {
 public:
  Sink(const RunConfig& c, std::ostream& out, bool json_default)
      : m_config(c), m_out(out), m_json(c.format ? *c.format == "json" : json_default) {}

  bool json_stdout() const { return m_json; }
  std::ostream& out() { return m_out; }
  bool has_dir() const { return m_config.out.has_value(); }
  fs::path path(const std::string& name) const { return fs::path(*m_config.out) / name; }

  void write(const std::string& name, const std::string& content) {
    if (!has_dir()) return;
    fs::create_directories(*m_config.out);
    std::ofstream os(path(name));
    if (!os) throw UsageError("cannot write " + path(name).string());
    os << content;
  }

  void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

 private:
  const RunConfig& m_config;
  std::ostream& m_out;
  bool m_json;
};

std::vector<EquationSpec> polar_parts(const EquationSpec& eq) {
  const PolarSplit split = polar_split(eq);
  return {split.real, split.imag};
}

bool is_complex(const EquationSpec& eq) { return eq.fields.contains(Field::Psi) || eq.fields.contains(Field::PsiC); }

bool is_catalog_key(std::string_view key) {
  for (auto k : catalog_keys())
    if (k == key) return true;
  return false;
}

// ---------------------------------------------------------------------------------------
// derive

struct DerivedCheck {
  std::string label;
  EquationSpec derived;
  std::optional<CofactorLink> link;
  bool pass = true;
};

LagrangianSpec resolve_lagrangian(const std::string& name) {
  if (name == "staruszkiewicz-term") return staruszkiewicz_term();
  static const std::map<std::string, std::string> aliases{
      {"staruszkiewicz", "lagrangian_staruszkiewicz"},
      {"se-polar", "lagrangian_se_polar"},
      {"polar", "lagrangian_se_polar"},
      {"se-complex", "lagrangian_se_complex"},
      {"complex", "lagrangian_se_complex"},
  };
  const auto it = aliases.find(name);
  const std::string key = it != aliases.end() ? it->second : name;
  try {
    return build_lagrangian(key);
  } catch (const UnknownKeyError&) {
    throw UsageError("unknown Lagrangian '" + name + "'");
  }
}

int cmd_derive(const RunConfig& c, Sink& sink) {
  std::vector<DerivedCheck> checks;
  auto add_split = [&](const PolarSplit& split) {
    checks.push_back({"imaginary part", split.imag, split.imag_link});
    checks.push_back({"real part", split.real, split.real_link});
  };
  if (c.action == "madelung") {
    add_split(polar_split(build_equation("se")));
  } else if (c.action == "pg-split") {
    add_split(polar_split(pure_gauge(build_equation("minimal_coupling_se"))));
  } else {
    if (!c.lagrangian || !c.field) throw UsageError("derive euler-lagrange needs --lagrangian and --field");
    const LagrangianSpec l = resolve_lagrangian(*c.lagrangian);
    const auto f = field_from_name(*c.field);
    if (!f) throw UsageError("unknown field '" + *c.field + "'");
    checks.push_back({"variation in " + *c.field, euler_lagrange(l, *f), euler_lagrange_link(l.name, *f)});
  }

  json results = json::array();
  bool all = true;
  for (auto& ch : checks) {
    json r{{"label", ch.label}, {"derived", print_canonical(ch.derived.residual)}};
    if (ch.link) {
      ch.pass = equals_modulo_cofactor(ch.derived.residual, build_equation(ch.link->target).residual, ch.link->cofactor);
      r["target"] = ch.link->target;
      r["cofactor"] = print_canonical(ch.link->cofactor);
      r["expected"] = print_canonical(build_equation(ch.link->target).residual);
      r["pass"] = ch.pass;
      all = all && ch.pass;
    } else {
      r["target"] = nullptr;
    }
    results.push_back(r);
  }
  json doc{{"command", "derive"}, {"derivation", c.action}, {"catalog_version", kCatalogVersion},
           {"results", results}, {"pass", all}};
  sink.write_json("derive_" + c.action + ".json", doc);

  if (sink.json_stdout()) {
    sink.out() << doc.dump(2) << "\n";
  } else {
    for (const auto& ch : checks) {
      if (ch.link)
        sink.out() << (ch.pass ? "PASS " : "FAIL ") << ch.link->target << " (" << ch.label << ", cofactor "
                   << print_canonical(ch.link->cofactor) << ")\n";
      else
        sink.out() << "DERIVED " << ch.derived.name << " (no catalog target)\n";
      sink.out() << "  " << print_canonical(ch.derived.residual) << "\n";
    }
  }
  return all ? kSuccess : kDerivationMismatch;
}

// ---------------------------------------------------------------------------------------
// check

BoostSpec parse_velocity(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("--velocity needs three comma-separated components");
  BoostSpec b;
  for (std::size_t i = 0; i < 3; ++i) {
    const Expr e = parse(parts[i]);
    const CanonicalForm cf = normalize(e);
    for (const auto& [m, coeff] : cf.terms())
      if (!m.fields.empty() || !m.coords.empty() || m.imaginary)
        throw UsageError("velocity component '" + parts[i] + "' must be built from rationals and parameters");
    b.velocity[i] = e;
  }
  return b;
}

Report boost_report(const RunConfig& c) {
  if (!c.system) throw UsageError("check boost needs --system");
  const BoostSpec b = c.velocity ? parse_velocity(*c.velocity) : BoostSpec::symbolic();
  const std::string& s = *c.system;
  if (s == "pure-gauge") return check_pure_gauge_boost(b);
  if (s == "se") return check_boost_covariance(polar_parts(build_equation("se")), b, s);
  if (s == "cubic") return check_boost_covariance(polar_parts(build_equation("cubic_nls")), b, s);
  if (s == "madelung") {
    const std::vector<EquationSpec> sys{build_equation("madelung_continuity"), build_equation("madelung_hj")};
    return check_boost_covariance(sys, b, s);
  }
  if (s == "minimal-coupling")
    return check_boost_covariance(polar_parts(build_equation("minimal_coupling_se")), b, s, PotentialLaw::galilean);
  if (is_catalog_key(s) && std::holds_alternative<EquationSpec>(build(s))) {
    const EquationSpec eq = build_equation(s);
    const std::vector<EquationSpec> sys = is_complex(eq) ? polar_parts(eq) : std::vector<EquationSpec>{eq};
    return check_boost_covariance(sys, b, s);
  }
  throw UsageError("unknown boost system '" + s + "'");
}

Report gauge_report(const RunConfig& c) {
  if (!c.target) throw UsageError("check gauge needs --target");
  const GaugeSpec g = c.global ? GaugeSpec::global() : GaugeSpec::local();
  const std::string& t = *c.target;
  if (t == "minimal-coupling")
    return check_gauge_invariance(polar_parts(build_equation("minimal_coupling_se")), g, t);
  if (is_catalog_key(t) && std::holds_alternative<EquationSpec>(build(t))) {
    const EquationSpec eq = build_equation(t);
    if (is_complex(eq)) return check_gauge_invariance(polar_parts(eq), g, t);
    return check_gauge_invariance(eq, g);
  }
  const LagrangianSpec l = resolve_lagrangian(t);
  if (std::find(l.varied.begin(), l.varied.end(), Field::Psi) != l.varied.end())
    throw UsageError("gauge checks act on real variables; '" + t + "' is written in Psi");
  Report r = check_gauge_invariance(l, g);
  r.system = t;
  return r;
}

int cmd_check(const RunConfig& c, Sink& sink) {
  const bool boost = c.action == "boost";
  const Report r = boost ? boost_report(c) : gauge_report(c);
  const std::string expect = c.expect.value_or("covariant");
  const bool want_covariant = expect == "covariant" || expect == "invariant";
  const std::string verdict = boost ? (r.covariant() ? "covariant" : "non-covariant")
                                    : (r.covariant() ? "invariant" : "non-invariant");
  const bool ok = r.covariant() == want_covariant;

  const json doc = report_to_json(r);
  sink.write_json("check_" + c.action + "_" + r.system + ".json", doc);
  if (sink.json_stdout()) {
    sink.out() << doc.dump(2) << "\n";
  } else {
    sink.out() << r.system << ": " << verdict << (ok ? " (as expected)" : " (expected " + expect + ")") << "\n";
    for (const auto& ch : r.channels)
      sink.out() << "  " << ch.name << ": " << (ch.residual.is_zero() ? "0" : print_canonical(ch.residual)) << "\n";
  }
  return ok ? kSuccess : kUnexpectedVerdict;
}

// ---------------------------------------------------------------------------------------
// simulate

using lab::Gridd;
using lab::Metric;

json metric_or_null(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int cmd_simulate(const RunConfig& c, Sink& sink) {
  Tolerances tol;
  for (const auto& entry : c.tolerances) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + entry + "'");
    double value = 0;
    try {
      value = std::stod(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad tolerance value in '" + entry + "'");
    }
    if (!tol.set(entry.substr(0, eq), value)) throw UsageError("unknown tolerance '" + entry.substr(0, eq) + "'");
  }
  if (c.snapshots && !sink.has_dir()) throw UsageError("--snapshots needs --out");

  const std::string scheme_name = c.scheme.value_or("linear");
  const double g = c.g.value_or(scheme_name == "cubic" ? 1.0 : 0.0);
  if (c.g && scheme_name != "cubic") throw UsageError("--g applies to the cubic scheme only");
  const lab::Scheme<double> scheme = scheme_name == "cubic"        ? lab::Scheme<double>::cubic(g)
                                     : scheme_name == "pure-gauge" ? lab::Scheme<double>::pure_gauge()
                                                                   : lab::Scheme<double>::linear();
  const bool nonlinear = scheme.kind == lab::Scheme<double>::Cubic && g != 0;

  lab::ExperimentOptions<double> opts =
      c.action == "separability" ? lab::separability_defaults<double>() : lab::ExperimentOptions<double>{};
  if (c.dt) opts.dt = *c.dt;
  if (c.mass) opts.mass = *c.mass;
  if (c.samples) opts.samples = *c.samples;
  if (c.snapshots)
    opts.on_sample = [&](long index, const lab::WaveFieldd& w) { lab::write_snapshot_csv(sink.path(lab::snapshot_name(index)), w); };

  json params{{"scheme", scheme_name}, {"g", g}, {"dt", opts.dt}, {"mass", opts.mass}, {"samples", opts.samples}};
  json metrics;
  std::string criterion;
  bool pass = false;
  lab::Diagnostics<double> diagnostics;

  if (c.action == "boost") {
    const long n = c.n.value_or(256), index = c.v_index.value_or(8);
    const double length = c.length.value_or(40), duration = c.duration.value_or(1);
    params.update(json{{"n", n}, {"L", length}, {"T", duration}, {"v_index", index}});
    diagnostics = lab::run_boost_experiment<double>(Gridd::line(n, length), {index, 0}, duration, scheme, opts);
    const double worst = *diagnostics.max(Metric::BoostMismatch), last = *diagnostics.last(Metric::BoostMismatch);
    metrics = {{"max_boost_mismatch", worst}, {"final_boost_mismatch", last},
               {"velocity", lab::commensurate_velocity(Gridd::line(n, length), opts.mass, {index, 0})[0]}};
    if (scheme.kind == lab::Scheme<double>::PureGauge && index != 0) {
      pass = last > tol.pure_gauge_mismatch;
      criterion = "final boost_mismatch > " + json(tol.pure_gauge_mismatch).dump();
    } else {
      pass = worst < tol.boost_mismatch;
      criterion = "max boost_mismatch < " + json(tol.boost_mismatch).dump();
    }
  } else if (c.action == "separability") {
    const long n = c.n.value_or(128);
    const double length = c.length.value_or(20), duration = c.duration.value_or(2);
    if (n > 256) throw UsageError("separability grids are capped at 256 points per axis");
    params.update(json{{"n", n}, {"L", length}, {"T", duration}});
    diagnostics = lab::run_separability_experiment<double>(Gridd::square(n, length), scheme, duration, opts);
    const double worst = *diagnostics.max(Metric::SchmidtDefect), last = *diagnostics.last(Metric::SchmidtDefect);
    metrics = {{"max_schmidt_defect", worst}, {"final_schmidt_defect", last}};
    if (nonlinear) {
      pass = last > tol.schmidt_cubic;
      criterion = "final schmidt_defect > " + json(tol.schmidt_cubic).dump();
    } else {
      pass = worst < tol.schmidt_linear;
      criterion = "max schmidt_defect < " + json(tol.schmidt_linear).dump();
    }
  } else {
    if (scheme.kind != lab::Scheme<double>::Linear) throw UsageError("the dispersion experiment uses the linear scheme");
    const long n = c.n.value_or(256);
    const double length = c.length.value_or(40), duration = c.duration.value_or(2);
    params.update(json{{"n", n}, {"L", length}, {"T", duration}});
    const auto run = lab::run_dispersion_experiment<double>(Gridd::line(n, length), duration, opts);
    diagnostics = run.diagnostics;
    metrics = {{"max_width_error", run.max_width_error},
               {"max_continuity_residual", metric_or_null(diagnostics.max(Metric::ContinuityResidual))}};
    pass = run.max_width_error < tol.dispersion;
    criterion = "max |width^2 - analytic| < " + json(tol.dispersion).dump();
    std::ostringstream widths;
    widths.precision(17);
    widths << "t,width_sq,analytic,error\n";
    for (const auto& w : run.widths) widths << w.t << ',' << w.measured << ',' << w.analytic << ',' << w.measured - w.analytic << '\n';
    sink.write("widths.csv", widths.str());
  }
  metrics["norm_drift"] = metric_or_null(diagnostics.drift(Metric::Norm));
  metrics["energy_drift"] = metric_or_null(diagnostics.drift(Metric::Energy));

  if (sink.has_dir()) lab::write_diagnostics_csv(sink.path("diagnostics.csv"), diagnostics);
  json tolerances;
  for (const auto& [name, member] : Tolerances::fields()) tolerances[name] = tol.*member;
  const json doc{{"experiment", c.action}, {"catalog_version", kCatalogVersion}, {"params", params},
                 {"metrics", metrics},     {"criterion", criterion},           {"pass", pass},
                 {"tolerances", tolerances}};
  sink.write_json("summary.json", doc);
  if (sink.json_stdout()) {
    sink.out() << doc.dump(2) << "\n";
  } else {
    sink.out() << (pass ? "PASS " : "FAIL ") << c.action << " (" << scheme_name << "): " << criterion << "\n";
    for (const auto& [k, v] : metrics.items()) sink.out() << "  " << k << " = " << v.dump() << "\n";
  }
  return pass ? kSuccess : kUnexpectedVerdict;
}

// ---------------------------------------------------------------------------------------
// list

int cmd_list(Sink& sink) {
  json entries = json::array();
  for (std::string_view key : catalog_keys()) {
    const CatalogEntry e = build(key);
    const bool eq = std::holds_alternative<EquationSpec>(e);
    const Expr& body = eq ? std::get<EquationSpec>(e).residual : std::get<LagrangianSpec>(e).density;
    entries.push_back({{"key", key},
                       {"kind", eq ? "equation" : "lagrangian"},
                       {"description", catalog_description(key)},
                       {"canonical", print_canonical(body)}});
  }
  const json doc{{"catalog_version", kCatalogVersion}, {"entries", entries}};
  sink.write_json("catalog.json", doc);
  if (sink.json_stdout()) {
    sink.out() << doc.dump(2) << "\n";
  } else {
    sink.out() << kCatalogVersion << "\n";
    for (const auto& e : entries)
      sink.out() << "  " << e["key"].get<std::string>() << " [" << e["kind"].get<std::string>() << "] "
                 << e["description"].get<std::string>() << "\n";
  }
  return kSuccess;
}

}  // namespace

nlohmann::ordered_json report_to_json(const Report& r) {
  json witnesses = json::array();
  for (const Channel* c : r.violations()) witnesses.push_back(print_canonical(c->residual));
  json channels = json::array();
  for (const auto& c : r.channels)
    channels.push_back({{"name", c.name},
                        {"transformed", print_canonical(c.transformed)},
                        {"expected", print_canonical(c.expected)},
                        {"residual", print_canonical(c.residual)}});
  return {{"system", r.system},
          {"transform", {{"kind", r.kind == TransformKind::boost ? "boost" : "gauge"}, {"params", r.params}}},
          {"covariant", r.covariant()},
          {"residual", r.residual_string()},
          {"witnesses", witnesses},
          {"catalog_version", kCatalogVersion},
          {"channels", channels},
          {"witness_terms", r.witness_terms()}};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "derive") {
      Sink sink(config, out, false);
      return cmd_derive(config, sink);
    }
    if (config.command == "check") {
      Sink sink(config, out, true);
      return cmd_check(config, sink);
    }
    if (config.command == "simulate") {
      Sink sink(config, out, true);
      return cmd_simulate(config, sink);
    }
    if (config.command == "list") {
      Sink sink(config, out, false);
      return cmd_list(sink);
    }
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const lab::NumericalAbort& e) {
    err << "numerical abort: " << e.what() << "\n";
    return kNumericalAbort;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const lab::LabError& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const SymbolicError& e) {
    err << "invalid expression: " << e.what() << "\n";
    return kUsage;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kSuccess;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace phaselab::cli
