#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "confbound/geometry.hpp"

namespace confbound {

/// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitComputationError = 3;
inline constexpr int kExitNoValidBound = 4;

enum class ExampleFamily { Exp, Sin };

/// Tabulated example domains, parameterized by d > 0:
///   Exp: exp on (0, d) x (0, pi), a half annulus with inradius (e^d - 1) / 2.
///   Sin: sin on (-pi/2, pi/2) x (-d, d), inradius taken as d, the tabulated
///        convention.
DomainSpec example_spec(ExampleFamily family, double d);

/// Evaluates a scalar expression: numbers, pi, e, + - * /, parentheses and
/// ln / log / sqrt / exp calls, e.g. "ln(sqrt(2))" or "1/3". Throws SpecError.
double parse_scalar_expression(std::string_view text);

/// Comma-separated list of scalar expressions. Throws SpecError when empty.
std::vector<double> parse_value_list(std::string_view text);

/// Runs the command line (args exclude the program name). Reports go to
/// `out`, diagnostics to `err`; returns one of the exit codes above.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confbound
