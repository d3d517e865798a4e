#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scarfrel/spec_file.hpp"

namespace scarfrel {

struct RunOptions {
  bool json = false;
  /// 0 keeps the spec file's value, or r + 1 when it has none.
  std::size_t deformation_v = 0;
  /// Overrides the spec file's tie order when set.
  std::optional<TieBreak> tie_break;
  /// Empty selects every depth up to the Scarf complex dimension + 1.
  std::vector<std::size_t> depths;
  std::uint64_t seed = 1;
  std::size_t selftest_cases = 200;
};

/// Text formatting used for every probability: 12 significant digits.
std::string FormatProbability(double p);

std::string RenderScarf(const SystemSpec& spec, const RunOptions& opts);
std::string RenderReliability(const SystemSpec& spec, const RunOptions& opts);
std::string RenderBounds(const SystemSpec& spec, const RunOptions& opts);
std::string RenderOracle(const SystemSpec& spec, const RunOptions& opts);
std::string RenderCompare(const SystemSpec& spec, const RunOptions& opts);

struct SelfTestResult {
  std::string text;
  bool passed = false;
};

/// Randomized identity/oracle/bounds check over `opts.selftest_cases`
/// systems drawn from `opts.seed`.
SelfTestResult RunSelfTest(const RunOptions& opts);

}  // namespace scarfrel
