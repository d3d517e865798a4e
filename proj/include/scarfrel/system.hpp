#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "scarfrel/monomial.hpp"

namespace scarfrel {

inline constexpr double kProbabilityTolerance = 1e-9;

struct Component {
  std::string name;
  std::size_t levels = 2;
  std::vector<double> probs;  // probs[j] = Prob(X = j)
};

/// Multistate system of independent components with levels 0..levels-1.
/// Construction validates every distribution.
class CoherentSystem {
 public:
  explicit CoherentSystem(std::vector<Component> components);

  /// Binary system: component i works (state 1) with probability p[i].
  static CoherentSystem Binary(std::span<const double> p);

  std::size_t dimension() const noexcept { return components_.size(); }
  const std::vector<Component>& components() const noexcept {
    return components_;
  }
  std::vector<std::size_t> Levels() const;

  /// Prob(X_i >= j); 1 at j = 0 and 0 beyond the top level.
  double Survival(std::size_t component, std::size_t level) const;

  /// Prob(X ⪰ alpha) under independence.
  double OrthantProb(const ExponentVector& alpha) const;

  /// Prob(X = state).
  double StateProb(const ExponentVector& state) const;

 private:
  std::vector<Component> components_;
  std::vector<std::vector<double>> tails_;
};

/// Ψ(α) = Σ linear_i α_i + Σ coeff·α_i·α_j with nonnegative coefficients.
struct ProfitSpec {
  struct Interaction {
    std::size_t i;  // 0-based
    std::size_t j;
    double coeff;
  };
  std::vector<double> linear;
  std::vector<Interaction> interactions;
  double cutoff = 0.0;

  void Validate() const;
  double Evaluate(const ExponentVector& alpha) const;
};

/// Minimal points of {α ∈ ∏{0..levels_k−1} : Ψ(α) ≥ cutoff}, listed in
/// colexicographic order (last coordinate most significant). Throws
/// kUnreachableCutoff when the upper set is empty.
MonomialIdeal MinimalPointsFromProfit(const ProfitSpec& spec,
                                      std::span<const std::size_t> levels);

using SurvivalFunction = std::function<double(std::span<const double>)>;
using OrthantProbability = std::function<double(const ExponentVector&)>;

/// Critical points z^(1..m) of a continuous system plus its joint survival
/// function Prob(Z > z).
struct ContinuousSpec {
  std::vector<std::vector<double>> critical_points;
  SurvivalFunction survival;
};

struct QuantizedSystem {
  /// Minimal rank vectors, 0-based per coordinate.
  MonomialIdeal ideal;
  /// sorted_values[k][rank] is the real critical value with that rank.
  std::vector<std::vector<double>> sorted_values;
  /// Orthant probability of a rank-space label via the real survival function.
  OrthantProbability orthant_prob;

  std::vector<double> ToReal(const ExponentVector& ranks) const;
};

/// Replaces every critical point by its per-coordinate ranks. Throws
/// kInvalidArgument when two points share a value in some coordinate.
QuantizedSystem Quantize(const ContinuousSpec& spec);

}  // namespace scarfrel
