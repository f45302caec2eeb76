#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfgd::cli {

/// Runs one command; args excludes the program name. Returns 0 on success,
/// 1 when a verification fails and 2 for usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hopfgd::cli
