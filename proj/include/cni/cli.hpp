#pragma once

#include <iosfwd>
#include <string>

#include "cni/geometry.hpp"
#include "cni/proof_emitter.hpp"

namespace cni {

struct CliConfig {
  /// Path of the program, or "-" for standard input.
  std::string input = "-";
  FixMode fix = FixMode::ZeroOne;
  /// Seconds per elimination; must be positive.
  unsigned timeout = 20;
  Format format = Format::Text;
  bool show_ideal = false;
};

/// Exit codes of run_cli.
inline constexpr int kExitProved = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Reads and proves one program. The proof document goes to out,
/// diagnostics ("file:line:column: error: ...") to err. `in` is read when
/// the input is "-".
int run_cli(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cni
