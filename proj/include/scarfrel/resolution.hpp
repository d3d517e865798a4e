#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scarfrel/monomial.hpp"

namespace scarfrel {

/// A nonempty set of generator indices (1-based, ascending) together with the
/// lcm of the corresponding original generators.
struct Face {
  std::vector<std::size_t> members;
  ExponentVector label;

  std::size_t cardinality() const noexcept { return members.size(); }
  friend bool operator==(const Face&, const Face&) = default;
};

enum class ComplexKind { kTaylor, kScarf, kScarfDeformed };

const char* ToString(ComplexKind kind);

/// Labelled simplicial complex over the generators of an ideal. Only
/// nonempty faces are stored, ordered by cardinality and then
/// lexicographically on their members.
class LabeledComplex {
 public:
  LabeledComplex(MonomialIdeal ideal, std::vector<Face> faces, ComplexKind kind);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  ComplexKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return faces_.size(); }
  std::size_t max_cardinality() const noexcept;

  /// Inclusion-maximal faces, in canonical face order.
  std::vector<Face> Facets() const;

  /// Member sets only, in canonical order; handy for comparisons.
  std::vector<std::vector<std::size_t>> MemberSets() const;

 private:
  MonomialIdeal ideal_;
  std::vector<Face> faces_;
  ComplexKind kind_;
};

/// How equal exponents are separated by the deformation. Ascending adds i/v
/// to generator i, so the lower index ranks first; descending adds
/// (r + 1 − i)/v, so the higher index ranks first. Both are order-consistent
/// generic deformations.
enum class TieBreak { kAscendingIndex, kDescendingIndex };

const char* ToString(TieBreak tie_break);

/// Dense-rank deformation of an ideal's exponents.
struct DeformationRecord {
  std::size_t v = 0;
  TieBreak tie_break = TieBreak::kAscendingIndex;
  std::vector<ExponentVector> deformed;
};

/// One term of an alternating lcm sum: sign·x^exponent for a face of the
/// given cardinality; sign is (−1)^cardinality.
struct SignedTerm {
  int sign;
  ExponentVector exponent;
  std::size_t face_cardinality;
  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

using SignedTermList = std::vector<SignedTerm>;

inline constexpr std::size_t kDefaultTaylorCap = 20;
inline constexpr std::size_t kScarfOracleCap = 16;

/// All nonempty subsets of the generators. Throws kTooLarge above `cap`.
LabeledComplex TaylorComplex(const MonomialIdeal& ideal,
                             std::size_t cap = kDefaultTaylorCap);

/// Scarf complex of a generic ideal. Throws kNotGeneric, naming the first
/// offending coordinate and generator pair, otherwise.
LabeledComplex ScarfComplex(const MonomialIdeal& ideal);

/// The literal unique-label definition checked against every nonempty subset.
/// Test oracle; exponential in the generator count.
LabeledComplex ScarfBruteOracle(const MonomialIdeal& ideal);

/// Adds i/v to generator i and replaces every coordinate by its 0-based dense
/// rank. Requires v > r.
DeformationRecord Deform(const MonomialIdeal& ideal, std::size_t v,
                         TieBreak tie_break = TieBreak::kAscendingIndex);

/// Scarf complex of the deformed ideal, relabelled with lcms of the original
/// generators. `v == 0` selects the default r + 1.
LabeledComplex DeformAndScarf(const MonomialIdeal& ideal, std::size_t v = 0,
                              TieBreak tie_break = TieBreak::kAscendingIndex);

/// Scarf complex when the ideal is generic, otherwise the deformed one.
LabeledComplex ScarfOrDeformed(const MonomialIdeal& ideal, std::size_t v = 0,
                               TieBreak tie_break = TieBreak::kAscendingIndex);

/// Numerator of the finely graded Hilbert series of S/M: the empty-face term
/// +1 followed by one term per face.
SignedTermList HilbertNumerator(const LabeledComplex& complex);

/// Coefficient of x^beta in numerator / ∏(1 − x_i).
long long PointwiseCoefficient(const SignedTermList& terms,
                               const ExponentVector& beta);

/// "1 - x1^3 - x1^2*x2^2 + ..." rendering.
std::string FormatPolynomial(const SignedTermList& terms);

}  // namespace scarfrel
