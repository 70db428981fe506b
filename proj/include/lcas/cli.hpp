#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcas {

// Command-line front end. `args` excludes the program name. The report goes
// to `out` (or to the --out path when given), diagnostics go to `err`.
// Returns the exit code: 0 on success, 1 when a check's verdict is negative,
// 2 on usage, parse, domain, or budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Same, bound to std::cout / std::cerr.
int run(const std::vector<std::string>& args);

} // namespace lcas
