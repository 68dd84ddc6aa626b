#pragma once

#include <iosfwd>
#include <string>

namespace tklv {

inline constexpr int kSchemaVersion = 1;

enum class Command { Validate, HeckeCheck, Compute, WGraph, OracleCompare };

struct RunConfig {
  Command command = Command::Validate;
  std::string input;
  std::string output;  // empty: write to the given stream
  bool json = false;
  bool verify = false;
  bool braid = false;
  bool u_form = false;
  bool strict = false;
};

// exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitRelation = 2;
inline constexpr int kExitUnresolved = 3;
inline constexpr int kExitOracle = 4;

// Runs one command.  Output goes to cfg.output when set, otherwise to out.
// Diagnostics that are not part of the result go to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace tklv
