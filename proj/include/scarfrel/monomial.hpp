#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace scarfrel {

using Exponent = std::uint32_t;

/// A point of the integer grid N^d: the exponent of a monomial, or the state
/// of a d-component system.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dimension) : coords_(dimension, 0) {}
  explicit ExponentVector(std::vector<Exponent> coords)
      : coords_(std::move(coords)) {}
  ExponentVector(std::initializer_list<Exponent> coords) : coords_(coords) {}

  /// Checked conversion from signed input; rejects negatives and values that
  /// do not fit the exponent width.
  static ExponentVector FromSigned(std::span<const std::int64_t> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t k) const { return coords_[k]; }
  Exponent& operator[](std::size_t k) { return coords_[k]; }
  std::span<const Exponent> coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  /// "(3,2)" style rendering.
  std::string ToString() const;

 private:
  std::vector<Exponent> coords_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// a ⪯ b coordinatewise, i.e. x^a divides x^b.
bool Divides(const ExponentVector& a, const ExponentVector& b);

/// Coordinatewise maximum. Throws kEmptyInput on an empty set; the empty face
/// is labelled by the zero vector at the call site.
ExponentVector Lcm(std::span<const ExponentVector> vs);
ExponentVector Lcm(const ExponentVector& a, const ExponentVector& b);

/// Monomial ideal held by its minimal generators. Generators keep the order
/// in which they were supplied; generator i (1-based) is generators()[i - 1].
class MonomialIdeal {
 public:
  /// Drops every generator divisible by another one and collapses
  /// duplicates, keeping first occurrences in input order.
  static MonomialIdeal Minimalize(std::span<const ExponentVector> gens);

  /// Accepts an already minimal generator list verbatim; throws
  /// kInvalidArgument when a generator divides another.
  static MonomialIdeal FromMinimal(std::vector<ExponentVector> gens);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<ExponentVector>& generators() const noexcept {
    return generators_;
  }
  /// 1-based access.
  const ExponentVector& generator(std::size_t index) const;

  /// β ∈ M iff some minimal generator divides β.
  bool Contains(const ExponentVector& beta) const;

  /// No variable occurs with the same nonzero exponent in two generators.
  bool IsGeneric() const;

  /// The first offending (coordinate, i, j) triple, 0-based coordinate and
  /// 1-based generator indices, when the ideal is not generic.
  struct GenericityViolation {
    std::size_t coordinate;
    std::size_t first;
    std::size_t second;
    Exponent exponent;
  };
  std::vector<GenericityViolation> GenericityViolations() const;

  /// The same ideal with generators sorted lexicographically ascending.
  MonomialIdeal Canonical() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t dimension, std::vector<ExponentVector> gens)
      : dimension_(dimension), generators_(std::move(gens)) {}

  std::size_t dimension_ = 0;
  std::vector<ExponentVector> generators_;
};

}  // namespace scarfrel
