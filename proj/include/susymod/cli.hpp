#pragma once

// Command front end: verify, spectrum and concurrence subcommands. Everything
// here writes to caller-supplied streams so the CLI can be driven in-process.

#include "susymod/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace susymod {

struct RunConfig {
  int na_cut = 16;
  int nb_cut = 16;
  double beta = 1.0;
  double omega = 1.0;
  double g = 0.1;
  double omega_d = 1.0;
  int margin = 2;
  double tolerance = 1e-10;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::Json;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;

/// suite ∈ {superalgebra, modular, nonlinear-susy, jc-mapping, all}.
[[nodiscard]] VerificationReport run_suite(const RunConfig& config, const std::string& suite);

int cmd_verify(const RunConfig& config, const std::string& suite, std::ostream& out,
               std::ostream& err);

/// model ∈ {landau-a, landau-b, dirac, jc, ajc}.
int cmd_spectrum(const RunConfig& config, const std::string& model, int levels, std::ostream& out,
                 std::ostream& err);

int cmd_concurrence(const RunConfig& config, int k, double alpha_re, double alpha_im,
                    double beta_re, double beta_im, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace susymod
