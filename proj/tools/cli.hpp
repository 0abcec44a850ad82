#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wreathhom::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kBadInput = 3,
  kCapExceeded = 4,
  kUnknownBuiltin = 5,
  kVerificationFailed = 6,
  kIntegrality = 7,
};

struct JobConfig {
  std::string command;
  std::string group = "C2";
  std::vector<std::uint64_t> a_factors{2};
  std::optional<std::filesystem::path> a_file;
  std::optional<std::size_t> n;
  std::optional<std::string> n_range;  // "lo:hi", inclusive
  std::uint64_t seed = 1;
  std::size_t samples = 1;
  std::optional<std::filesystem::path> out;
  std::string format = "jsonl";
  std::optional<std::size_t> cap;
  std::size_t oracle_n_max = 4;
  bool group_given = false;
  bool a_given = false;
};

/// Runs one job. `args` is the full command line including the program name.
int execute(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace wreathhom::cli
