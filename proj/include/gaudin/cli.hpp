#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gaudin::cli {

enum ExitCode { ok = 0, domain_error = 2, verification_failed = 3, usage = 64, schema = 65, internal = 70 };

// runs one command line; machine output goes to out, diagnostics to err
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace gaudin::cli
