#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "scarfrel/monomial.hpp"
#include "scarfrel/system.hpp"

namespace scarfrel::random {

struct CorpusLimits {
  std::size_t max_dimension = 5;
  std::size_t max_levels = 4;
  std::size_t max_generators = 8;
};

/// Independent components with random distributions; some levels get zero
/// mass so that degenerate tables are exercised too.
CoherentSystem System(std::mt19937_64& rng, std::size_t dimension,
                      std::size_t max_levels);

/// Up to `max_generators` random grid points of `system`, minimalized.
MonomialIdeal IdealOnGrid(std::mt19937_64& rng, const CoherentSystem& system,
                          std::size_t max_generators);

/// A generic ideal: in each coordinate the nonzero exponents are distinct.
MonomialIdeal GenericIdeal(std::mt19937_64& rng, std::size_t dimension,
                           std::size_t generators);

/// An arbitrary (usually non-generic) ideal with small exponents.
MonomialIdeal AnyIdeal(std::mt19937_64& rng, std::size_t dimension,
                       std::size_t generators, Exponent max_exponent);

}  // namespace scarfrel::random
