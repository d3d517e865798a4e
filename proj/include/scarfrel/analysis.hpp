#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scarfrel/resolution.hpp"
#include "scarfrel/system.hpp"

namespace scarfrel {

enum class BoundKind { kUpper, kLower, kExact };

const char* ToString(BoundKind kind);

struct Bound {
  std::size_t depth;
  double value;
  BoundKind kind;
};

struct ReliabilityReport {
  double identity_value = 0.0;
  std::size_t term_count = 0;
  SignedTermList terms;  // nonempty faces only
  std::vector<Bound> bounds;
  unsigned long long baseline_term_count = 0;  // 2^r − 1
  std::optional<double> oracle_value;
};

inline constexpr unsigned long long kDefaultStateCap = 10'000'000ull;

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double x);
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Σ over nonempty faces of (−1)^{|I|+1} Prob(Q_{label(I)}).
double ReliabilityIdentity(const LabeledComplex& complex,
                           const OrthantProbability& orthant_prob);
double ReliabilityIdentity(const CoherentSystem& system,
                           const LabeledComplex& complex);

/// Truncation of the identity to faces with |I| ≤ depth. Odd depths give
/// upper bounds, even depths lower bounds, the full depth the exact value.
Bound TubeBound(const LabeledComplex& complex,
                const OrthantProbability& orthant_prob, std::size_t depth);
Bound TubeBound(const CoherentSystem& system, const LabeledComplex& complex,
                std::size_t depth);

/// Classical Bonferroni truncation, realized on a Taylor complex.
Bound BonferroniBound(const CoherentSystem& system, const LabeledComplex& taylor,
                      std::size_t depth);

/// State-space enumeration Σ_ω 1[ω ∈ M]·Prob(ω).
double BruteForceReliability(const CoherentSystem& system,
                             const MonomialIdeal& ideal,
                             unsigned long long state_cap = kDefaultStateCap);

/// Product of the level counts, saturating at ULLONG_MAX.
unsigned long long StateSpaceSize(const CoherentSystem& system);

/// Identity, all tube bounds, baseline count and (when the grid is under the
/// cap) the enumeration oracle.
ReliabilityReport BuildReport(const CoherentSystem& system,
                              const LabeledComplex& complex,
                              unsigned long long state_cap = kDefaultStateCap);

}  // namespace scarfrel
