#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zc::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// human-readable usage text to `err`. Returns 0 on success, 1 on a domain
/// error or a failed check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zc::cli
