#pragma once

#include <iosfwd>
#include <json.hpp>

#include "phaselab/cli/config.hpp"
#include "phaselab/invariance.hpp"

namespace phaselab::cli {

/// Report in the fixed JSON schema, plus the catalog version, per-channel detail and the
/// witness monomials.
nlohmann::ordered_json report_to_json(const Report& r);

/// Runs one command; human-readable output goes to `out`, diagnostics to `err`.
/// Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping parse failures to usage errors.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phaselab::cli
