#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indpoly {

// Runs the command-line tool on pre-split arguments (program name excluded);
// all output goes to the supplied streams, so tests can drive the full CLI
// in-process. Exit codes: 0 success, 1 finished but some records produced
// error entries, 2 usage or parse failure.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indpoly
