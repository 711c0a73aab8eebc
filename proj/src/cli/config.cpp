#include "phaselab/cli/config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>

namespace phaselab::cli {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void build(CLI::App& app, RunConfig& c) {
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* derive = app.add_subcommand("derive", "derive equations and compare with the catalog");
  derive->add_option("what", c.action, "madelung | euler-lagrange | pg-split")
      ->required()
      ->check(CLI::IsMember({"madelung", "euler-lagrange", "pg-split"}));
  derive->add_option("--lagrangian", c.lagrangian, "Lagrangian key for euler-lagrange");
  derive->add_option("--field", c.field, "varied field for euler-lagrange");
  add_common(derive);

  CLI::App* check = app.add_subcommand("check", "boost covariance or gauge invariance");
  check->add_option("transform", c.action, "boost | gauge")->required()->check(CLI::IsMember({"boost", "gauge"}));
  check->add_option("--system", c.system, "system for boost checks");
  check->add_option("--velocity", c.velocity, "boost velocity as three comma-separated expressions");
  check->add_option("--target", c.target, "target for gauge checks");
  check->add_flag("--global", c.global, "constant gauge function");
  check->add_option("--expect", c.expect, "expected verdict")
      ->check(CLI::IsMember({"covariant", "non-covariant", "invariant", "non-invariant"}));
  add_common(check);

  CLI::App* simulate = app.add_subcommand("simulate", "numerical experiments");
  simulate->add_option("experiment", c.action, "boost | separability | dispersion")
      ->required()
      ->check(CLI::IsMember({"boost", "separability", "dispersion"}));
  simulate->add_option("--scheme", c.scheme, "linear | cubic | pure-gauge")
      ->check(CLI::IsMember({"linear", "cubic", "pure-gauge"}));
  simulate->add_option("--g", c.g, "cubic coupling");
  simulate->add_option("--n", c.n, "grid points per axis");
  simulate->add_option("--v-index", c.v_index, "boost velocity index, v = 2 pi index / (m L)");
  simulate->add_option("--T", c.duration, "final time");
  simulate->add_option("--dt", c.dt, "time step");
  simulate->add_option("--L", c.length, "box length");
  simulate->add_option("--mass", c.mass, "particle mass");
  simulate->add_option("--samples", c.samples, "number of diagnostics rows after t = 0");
  simulate->add_flag("--snapshots", c.snapshots, "write a snapshot CSV per sample");
  simulate->add_option("--tol", c.tolerances, "tolerance override name=value (repeatable)")
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_common(simulate);

  CLI::App* list = app.add_subcommand("list", "catalog inventory");
  add_common(list);
}

}  // namespace

std::vector<std::string> RunConfig::to_args() const {
  std::vector<std::string> a{command};
  if (!action.empty()) a.push_back(action);
  auto put = [&](const char* flag, const auto& value) {
    if (!value) return;
    a.emplace_back(flag);
    if constexpr (std::is_same_v<std::decay_t<decltype(*value)>, std::string>)
      a.push_back(*value);
    else if constexpr (std::is_same_v<std::decay_t<decltype(*value)>, double>)
      a.push_back(format_double(*value));
    else
      a.push_back(std::to_string(*value));
  };
  put("--lagrangian", lagrangian);
  put("--field", field);
  put("--system", system);
  put("--velocity", velocity);
  put("--target", target);
  if (global) a.emplace_back("--global");
  put("--expect", expect);
  put("--scheme", scheme);
  put("--g", g);
  put("--n", n);
  put("--v-index", v_index);
  put("--T", duration);
  put("--dt", dt);
  put("--L", length);
  put("--mass", mass);
  put("--samples", samples);
  if (snapshots) a.emplace_back("--snapshots");
  for (const auto& t : tolerances) {
    a.emplace_back("--tol");
    a.push_back(t);
  }
  put("--out", out);
  put("--format", format);
  return a;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app("Symbolic and numerical checks of phase, gauge and Galilean structure", "phaselab");
  build(app, c);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.command = app.get_subcommands().front()->get_name();
  return c;
}

}  // namespace phaselab::cli
