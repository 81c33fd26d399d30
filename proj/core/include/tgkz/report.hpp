#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgkz/error.hpp"
#include "tgkz/semigroup_modules.hpp"

namespace tgkz {

struct SpecBounds {
  std::optional<Integer> h_degree;
  std::optional<std::size_t> binomial_degree;
  std::size_t truncation = 10;
};

/// A validated problem specification.
struct ProblemSpec {
  AbelianGroup group;
  std::vector<GroupElement> columns;
  std::vector<Cyclotomic> beta;
  ModuleKind module_kind = ModuleKind::K;
  std::vector<GroupElement> module_generators;  // Explicit only
  SpecBounds bounds;
  std::uint64_t hash = 0;  // FNV-1a of the input text

  PointConfig config() const;
  SemigroupModule module() const;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// Parses JSON spec text; errors carry the offending field path.
ProblemSpec parse_spec(std::string_view text);

enum class Command { Check, Ideals, Primes, Module, System, Rank, Dual, Report };

std::optional<Command> parse_command(std::string_view name);
const char* command_name(Command c);
const std::vector<std::string>& command_names();

struct RunOptions {
  unsigned threads = 1;
  std::optional<std::size_t> bound;  // overrides bounds.binomial_degree
};

struct RunResult {
  std::string json;  // pretty-printed, sorted keys, trailing newline
  int exit_code = 0;
};

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitHypothesis = 2, kExitParse = 3, kExitBudget = 4 };

int exit_code_for(const Error& e);

RunResult run(const ProblemSpec& spec, Command command, const RunOptions& options = {});

}  // namespace tgkz
