#pragma once

// Worked examples used across the unit and acceptance suites.

#include <cstddef>
#include <set>
#include <vector>

#include "scarfrel/monomial.hpp"

namespace scarfrel::fixtures {

using MemberSets = std::vector<std::vector<std::size_t>>;

// ⟨x³, x²y², y³⟩
inline std::vector<ExponentVector> StaircaseGenerators() {
  return {{3, 0}, {2, 2}, {0, 3}};
}

// Eight-component binary network, nine minimal path vectors.
inline std::vector<ExponentVector> BinaryNetworkPaths() {
  return {{1, 0, 0, 0, 0, 1, 0, 0}, {1, 0, 0, 1, 0, 0, 1, 0},
          {0, 1, 0, 1, 0, 1, 0, 0}, {1, 0, 0, 1, 1, 0, 0, 1},
          {0, 1, 0, 0, 0, 0, 1, 0}, {0, 0, 1, 1, 1, 1, 0, 0},
          {0, 1, 0, 0, 1, 0, 0, 1}, {0, 0, 1, 0, 1, 0, 1, 0},
          {0, 0, 1, 0, 0, 0, 0, 1}};
}

inline MemberSets BinaryNetworkFacets() {
  return {{1, 2, 4, 7, 9}, {1, 3, 6, 8, 9}, {1, 2, 5, 7, 9},
          {1, 2, 5, 8, 9}, {1, 3, 5, 7, 9}, {1, 3, 5, 8, 9}};
}

// Minimal points of Ψ = α1 + α2 + 4α3 + 5α4 + 2α3α4 ≥ 28 on {0..3}^4.
inline std::vector<ExponentVector> ProfitCutoff28Points() {
  return {{3, 2, 3, 1}, {2, 3, 3, 1}, {2, 0, 2, 2}, {1, 1, 2, 2}, {0, 2, 2, 2},
          {3, 0, 1, 3}, {2, 1, 1, 3}, {1, 2, 1, 3}, {0, 3, 1, 3}};
}

inline std::vector<ExponentVector> ProfitCutoff28Deformed() {
  return {{7, 4, 7, 0}, {4, 7, 8, 1}, {5, 0, 4, 2}, {2, 2, 5, 3}, {0, 5, 6, 4},
          {8, 1, 0, 5}, {6, 3, 1, 6}, {3, 6, 2, 7}, {1, 8, 3, 8}};
}

inline MemberSets ProfitCutoff28Faces() {
  return {{1, 2, 3}, {4, 8, 9}, {4, 5, 9}, {2, 3, 4}, {3, 7, 8}, {3, 4, 8},
          {3, 6, 7}, {4, 9},    {5, 9},    {2, 3},    {2, 4},    {3, 8},
          {8, 9},    {7, 8},    {4, 8},    {3, 6},    {6, 7},    {4, 5},
          {3, 4},    {1, 3},    {3, 7},    {1, 2},    {9},       {8},
          {7},       {6},       {5},       {4},       {3},       {2},
          {1}};
}

// Binary nonnetwork system with five minimal path vectors.
inline std::vector<ExponentVector> NonNetworkPaths() {
  return {{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {1, 0, 0, 1, 1},
          {0, 1, 0, 1, 1}};
}

inline MemberSets NonNetworkFaces() {
  return {{1, 2, 3, 5}, {1, 2, 3}, {1, 3, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5},
          {1, 3},       {1, 2},    {1, 5},    {3, 4},    {2, 3},    {2, 5},
          {3, 5},       {4, 5},    {1},       {2},       {3},       {4},
          {5}};
}

// 2-out-of-4.
inline std::vector<ExponentVector> TwoOutOfFour() {
  return {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
          {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
}

/// Sorted set form, for order-insensitive comparisons.
inline std::set<std::vector<std::size_t>> AsSet(const MemberSets& sets) {
  return {sets.begin(), sets.end()};
}

/// Every nonempty subset of the given facets.
inline std::set<std::vector<std::size_t>> DownwardClosure(
    const MemberSets& facets) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : facets) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << f.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (mask >> t & 1u) sub.push_back(f[t]);
      }
      out.insert(sub);
    }
  }
  return out;
}

}  // namespace scarfrel::fixtures
