/**
 * @file cli.hpp
 * @brief Batch command-line front end: gen / check / transform / lemma.
 *
 * Exit codes: 0 success (all checks pass), 1 a check failed, 2 input or
 * usage error. Primary output (structure file or JSON report) goes to
 * --output or standard output; diagnostics go to the error stream.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbcoalg {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbcoalg
