#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stokes/cyclotomic.hpp"

namespace stokes::cli {

inline constexpr const char* kSchema = "stokes-lab/1";

enum ExitCode : int {
    kOk = 0,
    kBadArguments = 1,
    kUnsolved = 2,
};

/// Runs one invocation. args excludes the program name. The document goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"order":m,"coeffs":[["num","den"],...]} with rational values demoted to order 1.
std::string cyclotomic_json(const Cyclotomic& c);

}  // namespace stokes::cli
