#pragma once

// Command-line front end. run() is what the crepant binary calls; tests call
// it directly with captured streams.

#include "crepant/cyclotomic.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace crepant::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_or_pole = 2 };

/// Parses "e:j/k,e:j/k,..." into exp(2 pi i j/k) values, lifted to
/// lcm(4(n+1), all k). Throws std::invalid_argument on malformed input.
std::vector<Cyclotomic> parse_q_spec(const std::string& text, int n);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crepant::cli
