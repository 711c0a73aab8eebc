#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace phaselab::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDerivationMismatch = 2,
  kUnexpectedVerdict = 3,
  kNumericalAbort = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; the message is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed command line. Absent flags stay empty so that `to_args` reproduces exactly the
/// flags that were given.
struct RunConfig {
  std::string command;  // derive | check | simulate | list
  std::string action;   // derive: madelung | euler-lagrange | pg-split; check: boost | gauge;
                        // simulate: boost | separability | dispersion

  // derive euler-lagrange
  std::optional<std::string> lagrangian;
  std::optional<std::string> field;

  // check
  std::optional<std::string> system;    // boost
  std::optional<std::string> velocity;  // boost, "vx,vy,vz" of rationals or parameter names
  std::optional<std::string> target;    // gauge
  bool global = false;                  // gauge with constant chi
  std::optional<std::string> expect;

  // simulate
  std::optional<std::string> scheme;
  std::optional<double> g;
  std::optional<long> n;
  std::optional<long> v_index;
  std::optional<double> duration;  // --T
  std::optional<double> dt;
  std::optional<double> length;  // --L
  std::optional<double> mass;
  std::optional<long> samples;
  bool snapshots = false;
  std::vector<std::string> tolerances;  // --tol name=value, repeatable

  std::optional<std::string> out;
  std::optional<std::string> format;  // text | json

  bool operator==(const RunConfig&) const = default;

  /// Flags that parse back to this configuration.
  std::vector<std::string> to_args() const;
};

/// Parses arguments without the program name. Throws UsageError (unknown flags, bad values,
/// missing command) or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

}  // namespace phaselab::cli
