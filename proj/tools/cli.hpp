#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hardykit/measure.hpp"
#include "hardykit/survival.hpp"

namespace hardykit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// bernoulli:q | uniform:a..b:n | point:c | grid:uniform01:n | grid:exp:rate:n |
/// grid:pareto:shape:n | file:path.json
FiniteDist parse_dist(std::string_view spec);
/// {"atoms":[...],"probs":[...]} or {"family":"uniform01","n":1024,...}
FiniteDist dist_from_json_text(const std::string& text);

/// Comma-separated values, or e1 (first atom 1, rest 0), one, atoms.
SupportFunction parse_psi(std::string_view spec, const FiniteDist& d);

/// time,status[,side] with a header row.
CensoredSample read_censored_csv(std::istream& in, CensorSide default_side);
void write_censored_csv(std::ostream& out, const CensoredSample& s);

/// Full command line (argv[0] is the program name). Reports go to out,
/// diagnostics and violating instances to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardykit::cli
