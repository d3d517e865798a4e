#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "scarfrel/monomial.hpp"
#include "scarfrel/resolution.hpp"
#include "scarfrel/system.hpp"

namespace scarfrel {

/// A system description file: component distributions plus either explicit
/// minimal nonfailure points or a profit cutoff.
struct SystemSpec {
  enum class Source { kPoints, kProfit };

  CoherentSystem system;
  MonomialIdeal ideal;
  Source source;
  std::optional<ProfitSpec> profit;
  std::optional<std::size_t> deformation_v;
  TieBreak deformation_ties = TieBreak::kAscendingIndex;
};

/// Parses JSON text. Every failure is reported as ErrorCode::kInvalidSpec with
/// a "line N" or field-path prefix.
SystemSpec ParseSystemSpec(std::string_view json_text);
SystemSpec LoadSystemSpec(const std::string& path);

}  // namespace scarfrel
