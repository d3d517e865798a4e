#include "scarfrel/analysis.hpp"

#include <cmath>
#include <limits>

#include "scarfrel/error.hpp"

namespace scarfrel {

namespace {

void RequireMatchingDimension(const CoherentSystem& system,
                              const MonomialIdeal& ideal) {
  if (system.dimension() != ideal.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "system has " + std::to_string(system.dimension()) +
                    " components but the ideal lives in dimension " +
                    std::to_string(ideal.dimension()));
  }
}

OrthantProbability OrthantOf(const CoherentSystem& system) {
  return [&system](const ExponentVector& a) { return system.OrthantProb(a); };
}

double TruncatedSum(const LabeledComplex& complex,
                    const OrthantProbability& orthant_prob, std::size_t depth) {
  CompensatedSum sum;
  for (const auto& f : complex.faces()) {
    if (f.cardinality() > depth) break;
    const double p = orthant_prob(f.label);
    sum.Add(f.cardinality() % 2 == 1 ? p : -p);
  }
  return sum.value();
}

BoundKind KindFor(std::size_t depth, std::size_t full) {
  if (depth == full) return BoundKind::kExact;
  return depth % 2 == 1 ? BoundKind::kUpper : BoundKind::kLower;
}

void RequireDepth(std::size_t depth, std::size_t full) {
  if (depth < 1 || depth > full) {
    throw Error(ErrorCode::kInvalidArgument,
                "depth " + std::to_string(depth) + " outside 1.." +
                    std::to_string(full));
  }
}

}  // namespace

const char* ToString(BoundKind kind) {
  switch (kind) {
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kExact:
      return "exact";
  }
  return "unknown";
}

void CompensatedSum::Add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double ReliabilityIdentity(const LabeledComplex& complex,
                           const OrthantProbability& orthant_prob) {
  return TruncatedSum(complex, orthant_prob, complex.max_cardinality());
}

double ReliabilityIdentity(const CoherentSystem& system,
                           const LabeledComplex& complex) {
  RequireMatchingDimension(system, complex.ideal());
  return ReliabilityIdentity(complex, OrthantOf(system));
}

Bound TubeBound(const LabeledComplex& complex,
                const OrthantProbability& orthant_prob, std::size_t depth) {
  const std::size_t full = complex.max_cardinality();
  RequireDepth(depth, full);
  return {depth, TruncatedSum(complex, orthant_prob, depth),
          KindFor(depth, full)};
}

Bound TubeBound(const CoherentSystem& system, const LabeledComplex& complex,
                std::size_t depth) {
  RequireMatchingDimension(system, complex.ideal());
  return TubeBound(complex, OrthantOf(system), depth);
}

Bound BonferroniBound(const CoherentSystem& system, const LabeledComplex& taylor,
                      std::size_t depth) {
  if (taylor.kind() != ComplexKind::kTaylor) {
    throw Error(ErrorCode::kInvalidArgument,
                "Bonferroni bounds need a Taylor complex");
  }
  return TubeBound(system, taylor, depth);
}

unsigned long long StateSpaceSize(const CoherentSystem& system) {
  unsigned long long n = 1;
  for (const auto& c : system.components()) {
    if (n > std::numeric_limits<unsigned long long>::max() / c.levels) {
      return std::numeric_limits<unsigned long long>::max();
    }
    n *= c.levels;
  }
  return n;
}

double BruteForceReliability(const CoherentSystem& system,
                             const MonomialIdeal& ideal,
                             unsigned long long state_cap) {
  RequireMatchingDimension(system, ideal);
  const unsigned long long states = StateSpaceSize(system);
  if (states > state_cap) {
    throw Error(ErrorCode::kTooLarge,
                "state space of " + std::to_string(states) +
                    " points exceeds the enumeration cap of " +
                    std::to_string(state_cap));
  }
  const auto levels = system.Levels();
  const std::size_t d = system.dimension();
  CompensatedSum sum;
  ExponentVector omega(d);
  while (true) {
    if (ideal.Contains(omega)) sum.Add(system.StateProb(omega));
    std::size_t k = 0;
    while (k < d && ++omega[k] == levels[k]) omega[k++] = 0;
    if (k == d) break;
  }
  return sum.value();
}

ReliabilityReport BuildReport(const CoherentSystem& system,
                              const LabeledComplex& complex,
                              unsigned long long state_cap) {
  RequireMatchingDimension(system, complex.ideal());
  ReliabilityReport report;
  report.identity_value = ReliabilityIdentity(system, complex);
  report.term_count = complex.size();
  auto terms = HilbertNumerator(complex);
  report.terms.assign(terms.begin() + 1, terms.end());
  for (std::size_t m = 1; m <= complex.max_cardinality(); ++m) {
    report.bounds.push_back(TubeBound(system, complex, m));
  }
  const std::size_t r = complex.ideal().size();
  report.baseline_term_count =
      r >= 64 ? std::numeric_limits<unsigned long long>::max()
              : (1ull << r) - 1;
  if (StateSpaceSize(system) <= state_cap) {
    report.oracle_value =
        BruteForceReliability(system, complex.ideal(), state_cap);
  }
  return report;
}

}  // namespace scarfrel
