#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphpatch::cli {

// Parses and runs one command. Normal output goes to `out` only on success
// (exit 0); config errors (exit 2) leave `out` untouched and describe the
// problem on `err`; numerical failures (exit 3) emit a machine-readable
// diagnostic record on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphpatch::cli
