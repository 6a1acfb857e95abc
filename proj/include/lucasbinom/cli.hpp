#pragma once

#include "lucasbinom/sequences.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lucasbinom::cli {

enum ExitCode : int {
  kOk = 0,
  kOtherError = 1,
  kParseError = 2,
  kDegenerate = 3,
  kOracleMismatch = 4,
  kIdentityFailure = 5,
};

enum class Command { Seq, Table, Verify };
enum class Family { U, V, H, Mixed, Multinomial };
enum class Format { Csv, Json, Tex };
enum class Grid { Single, Integer, Gaussian };

struct CliConfig {
  Command command = Command::Seq;
  Family family = Family::U;
  RecurrenceParams params{RingElement(1), RingElement(1), RingElement(0), RingElement(1)};
  std::size_t maxn = 10;
  /// Identity labels for verify; empty means all.
  std::vector<std::string> identities;
  Format format = Format::Csv;
  bool oracle = false;
  Grid grid = Grid::Single;
  /// Parts for the multinomial family.
  std::vector<std::size_t> parts;
};

/// All identity labels in report order.
const std::vector<std::string>& identity_labels();

/// H_0..H_maxn, one canonical value per line (csv).
int run_seq(const CliConfig& cfg, std::ostream& out, std::ostream& err);
/// Coefficient triangle 0 <= k <= n <= maxn; with cfg.oracle every cell is
/// recomputed by the oracle and a mismatch exits with kOracleMismatch.
int run_table(const CliConfig& cfg, std::ostream& out, std::ostream& err);
/// Identity reports; kIdentityFailure if any non-skipped cell fails.
int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucasbinom::cli
