#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "trefoil/quandle.hpp"

namespace trefoil::cli {

/// Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 selftest
/// failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitSelftestFailed = 3;

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a finite quandle from a spec such as dihedral:7, alexander:3:t+1,
/// conj:symmetric:3, core:dihedral:4, aut:cyclic:7:3, symplectic:5:0,1;-1,0
/// or file:table.json. Throws ParseError or DomainError.
FiniteQuandle quandle_from_spec(const std::string& spec);

}  // namespace trefoil::cli
