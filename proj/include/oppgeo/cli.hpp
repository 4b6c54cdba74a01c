#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oppgeo {

// Runs the oppgeo command-line interface on the given arguments (program
// name excluded), writing to the supplied streams. Returns the process exit
// code: 0 on success, 1 when a check reported findings, 2 on usage, parse,
// or schema errors (with a one-line diagnostic on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oppgeo
