#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rumor {

// Bad flags / invalid parameter combinations; the CLI maps this to exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model = "mt";  // mt | dk | sir
  int n = 2;
  std::string mode;          // standard | modified; empty = per-command default
  double beta = 0.0;
  double mu = 0.0;
  std::string method = "dp";  // dp | enum | mc | evolve
  double t = 1.0;
  std::int64_t reps = 100000;
  std::uint64_t seed = 0;
  double threshold = 0.0;    // output mass cutoff; never renormalizes
  std::string output = "-";  // "-" = stdout
  bool raw_curve = false;    // curve: emit the unit-square curve instead of the
                             // lattice-rescaled one
  int enum_guard = 12;
};

// CSV content builders. Byte-stable for a fixed config: floats are printed
// with 17 significant digits and a lowercase exponent.
std::string solve_csv(const RunConfig& cfg);
std::string redist_csv(const RunConfig& cfg);
std::string curve_csv(const RunConfig& cfg);

struct VerifyReport {
  std::string text;
  bool ok = false;
};

// Cross-method consistency suite at the configured n: DP vs path enumeration,
// Yaglom limits, killing rate, boundary closed forms, path counts.
VerifyReport verify_report(const RunConfig& cfg);

std::string format_sig17(double v);

// Temp file + rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace rumor
