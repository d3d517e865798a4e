#include "scarfrel/random.hpp"

#include <algorithm>
#include <numeric>

namespace scarfrel::random {

namespace {

std::size_t Uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

CoherentSystem System(std::mt19937_64& rng, std::size_t dimension,
                      std::size_t max_levels) {
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::vector<Component> comps;
  for (std::size_t i = 0; i < dimension; ++i) {
    Component c;
    c.name = "c" + std::to_string(i + 1);
    c.levels = Uniform(rng, 2, std::max<std::size_t>(2, max_levels));
    std::vector<double> w(c.levels);
    for (auto& x : w) x = Uniform(rng, 0, 9) == 0 ? 0.0 : weight(rng);
    if (std::all_of(w.begin(), w.end(), [](double x) { return x == 0.0; })) {
      w[Uniform(rng, 0, c.levels - 1)] = 1.0;
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    c.probs = std::move(w);
    comps.push_back(std::move(c));
  }
  return CoherentSystem(std::move(comps));
}

MonomialIdeal IdealOnGrid(std::mt19937_64& rng, const CoherentSystem& system,
                          std::size_t max_generators) {
  const std::size_t r = Uniform(rng, 1, std::max<std::size_t>(1, max_generators));
  std::vector<ExponentVector> pts;
  for (std::size_t t = 0; t < r; ++t) {
    ExponentVector p(system.dimension());
    for (std::size_t k = 0; k < p.dimension(); ++k) {
      p[k] = static_cast<Exponent>(
          Uniform(rng, 0, system.components()[k].levels - 1));
    }
    pts.push_back(std::move(p));
  }
  return MonomialIdeal::Minimalize(pts);
}

MonomialIdeal GenericIdeal(std::mt19937_64& rng, std::size_t dimension,
                           std::size_t generators) {
  std::vector<ExponentVector> pts(generators, ExponentVector(dimension));
  for (std::size_t k = 0; k < dimension; ++k) {
    std::vector<Exponent> values(generators + 2);
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    for (std::size_t i = 0; i < generators; ++i) {
      pts[i][k] = Uniform(rng, 0, 3) == 0 ? 0 : values[i];
    }
  }
  return MonomialIdeal::Minimalize(pts);
}

MonomialIdeal AnyIdeal(std::mt19937_64& rng, std::size_t dimension,
                       std::size_t generators, Exponent max_exponent) {
  std::vector<ExponentVector> pts(generators, ExponentVector(dimension));
  for (auto& p : pts) {
    for (std::size_t k = 0; k < dimension; ++k) {
      p[k] = static_cast<Exponent>(Uniform(rng, 0, max_exponent));
    }
  }
  return MonomialIdeal::Minimalize(pts);
}

}  // namespace scarfrel::random
