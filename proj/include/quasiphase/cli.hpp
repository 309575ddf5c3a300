#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasiphase {

/// Runs `quasiphase <command> [--format json|text|svg] [--out PATH] [--vars a,b] "<system>"`.
/// `args` excludes the program name. Returns 0 on success, 2 on parse and
/// domain errors, 1 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quasiphase
