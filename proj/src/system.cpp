#include "scarfrel/system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scarfrel/error.hpp"

namespace scarfrel {

CoherentSystem::CoherentSystem(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "system has no components");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    auto& c = components_[i];
    if (c.name.empty()) c.name = "c" + std::to_string(i + 1);
    const std::string where = "component " + c.name;
    if (c.levels < 2) {
      throw Error(ErrorCode::kInvalidArgument,
                  where + ": levels must be at least 2");
    }
    if (c.probs.size() != c.levels) {
      throw Error(ErrorCode::kInvalidArgument,
                  where + ": expected " + std::to_string(c.levels) +
                      " probabilities, got " + std::to_string(c.probs.size()));
    }
    double sum = 0.0;
    for (double p : c.probs) {
      if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    where + ": probability " + std::to_string(p) +
                        " outside [0,1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      throw Error(ErrorCode::kInvalidArgument,
                  where + ": probabilities sum to " + std::to_string(sum));
    }
    std::vector<double> tail(c.levels + 1, 0.0);
    for (std::size_t j = c.levels; j-- > 0;) tail[j] = tail[j + 1] + c.probs[j];
    tail[0] = 1.0;
    tails_.push_back(std::move(tail));
  }
}

CoherentSystem CoherentSystem::Binary(std::span<const double> p) {
  std::vector<Component> comps;
  for (std::size_t i = 0; i < p.size(); ++i) {
    comps.push_back({"c" + std::to_string(i + 1), 2, {1.0 - p[i], p[i]}});
  }
  return CoherentSystem(std::move(comps));
}

std::vector<std::size_t> CoherentSystem::Levels() const {
  std::vector<std::size_t> out;
  for (const auto& c : components_) out.push_back(c.levels);
  return out;
}

double CoherentSystem::Survival(std::size_t component, std::size_t level) const {
  if (component >= components_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "component index " + std::to_string(component) +
                    " out of range");
  }
  const auto& tail = tails_[component];
  return level < tail.size() ? tail[level] : 0.0;
}

double CoherentSystem::OrthantProb(const ExponentVector& alpha) const {
  if (alpha.dimension() != dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "orthant corner " + alpha.ToString() + " does not match " +
                    std::to_string(dimension()) + " components");
  }
  double p = 1.0;
  for (std::size_t i = 0; i < dimension(); ++i) p *= Survival(i, alpha[i]);
  return p;
}

double CoherentSystem::StateProb(const ExponentVector& state) const {
  if (state.dimension() != dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state " + state.ToString() + " does not match the system");
  }
  double p = 1.0;
  for (std::size_t i = 0; i < dimension(); ++i) {
    const auto& probs = components_[i].probs;
    p *= state[i] < probs.size() ? probs[state[i]] : 0.0;
  }
  return p;
}

void ProfitSpec::Validate() const {
  if (linear.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "profit has no linear terms");
  }
  for (std::size_t i = 0; i < linear.size(); ++i) {
    if (!(linear[i] >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "linear coefficient " + std::to_string(i + 1) +
                      " must be nonnegative");
    }
  }
  for (const auto& t : interactions) {
    if (t.i >= linear.size() || t.j >= linear.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "interaction refers to a missing component");
    }
    if (t.i == t.j) {
      throw Error(ErrorCode::kInvalidArgument,
                  "interaction must couple two distinct components");
    }
    if (!(t.coeff >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "interaction coefficient must be nonnegative");
    }
  }
  if (!std::isfinite(cutoff)) {
    throw Error(ErrorCode::kInvalidArgument, "cutoff must be finite");
  }
}

double ProfitSpec::Evaluate(const ExponentVector& alpha) const {
  if (alpha.dimension() != linear.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profit evaluated at " + alpha.ToString());
  }
  double psi = 0.0;
  for (std::size_t i = 0; i < linear.size(); ++i) psi += linear[i] * alpha[i];
  for (const auto& t : interactions) {
    psi += t.coeff * alpha[t.i] * alpha[t.j];
  }
  return psi;
}

MonomialIdeal MinimalPointsFromProfit(const ProfitSpec& spec,
                                      std::span<const std::size_t> levels) {
  spec.Validate();
  const std::size_t d = spec.linear.size();
  if (levels.size() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "profit has " + std::to_string(d) + " coefficients but " +
                    std::to_string(levels.size()) + " level counts given");
  }
  for (std::size_t n : levels) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "empty level range");
  }

  // Odometer with coordinate 0 fastest, so points come out in colex order.
  std::vector<ExponentVector> minimal;
  ExponentVector alpha(d);
  while (true) {
    if (spec.Evaluate(alpha) >= spec.cutoff) {
      bool is_min = true;
      for (std::size_t i = 0; i < d && is_min; ++i) {
        if (alpha[i] == 0) continue;
        ExponentVector lower = alpha;
        --lower[i];
        is_min = spec.Evaluate(lower) < spec.cutoff;
      }
      if (is_min) minimal.push_back(alpha);
    }
    std::size_t k = 0;
    while (k < d && ++alpha[k] == levels[k]) alpha[k++] = 0;
    if (k == d) break;
  }
  if (minimal.empty()) {
    throw Error(ErrorCode::kUnreachableCutoff,
                "cutoff " + std::to_string(spec.cutoff) +
                    " is not reached anywhere on the grid");
  }
  return MonomialIdeal::FromMinimal(std::move(minimal));
}

std::vector<double> QuantizedSystem::ToReal(const ExponentVector& ranks) const {
  std::vector<double> z(ranks.dimension());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = sorted_values[k][ranks[k]];
  return z;
}

QuantizedSystem Quantize(const ContinuousSpec& spec) {
  const auto& pts = spec.critical_points;
  if (pts.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no critical points");
  }
  if (!spec.survival) {
    throw Error(ErrorCode::kInvalidArgument, "no survival function supplied");
  }
  const std::size_t d = pts.front().size();
  const std::size_t m = pts.size();
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "zero-dimensional point");
  for (const auto& z : pts) {
    if (z.size() != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "critical points have different dimensions");
    }
  }

  std::vector<std::vector<double>> sorted(d);
  std::vector<ExponentVector> ranks(m, ExponentVector(d));
  std::vector<std::size_t> order(m);
  for (std::size_t k = 0; k < d; ++k) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pts[a][k] < pts[b][k];
    });
    for (std::size_t t = 0; t + 1 < m; ++t) {
      if (!(pts[order[t]][k] < pts[order[t + 1]][k])) {
        const auto a = std::min(order[t], order[t + 1]) + 1;
        const auto b = std::max(order[t], order[t + 1]) + 1;
        throw Error(ErrorCode::kInvalidArgument,
                    "critical points " + std::to_string(a) + " and " +
                        std::to_string(b) + " share the value " +
                        std::to_string(pts[order[t]][k]) + " in coordinate " +
                        std::to_string(k + 1));
      }
    }
    for (std::size_t t = 0; t < m; ++t) {
      ranks[order[t]][k] = static_cast<Exponent>(t);
      sorted[k].push_back(pts[order[t]][k]);
    }
  }

  QuantizedSystem q{MonomialIdeal::Minimalize(ranks), std::move(sorted), {}};
  auto values = q.sorted_values;
  auto survival = spec.survival;
  q.orthant_prob = [values = std::move(values),
                    survival = std::move(survival)](const ExponentVector& label) {
    std::vector<double> z(label.dimension());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = values[k][label[k]];
    return survival(z);
  };
  return q;
}

}  // namespace scarfrel
