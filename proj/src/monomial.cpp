#include "scarfrel/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "scarfrel/error.hpp"

namespace scarfrel {

namespace {

void RequireSameDimension(const ExponentVector& a, const ExponentVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "exponent vectors " + a.ToString() + " and " + b.ToString() +
                    " have different dimensions");
  }
}

}  // namespace

ExponentVector ExponentVector::FromSigned(std::span<const std::int64_t> coords) {
  std::vector<Exponent> out;
  out.reserve(coords.size());
  for (std::int64_t c : coords) {
    if (c < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative exponent " + std::to_string(c));
    }
    if (static_cast<std::uint64_t>(c) > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorCode::kOverflow,
                  "exponent " + std::to_string(c) + " exceeds 32 bits");
    }
    out.push_back(static_cast<Exponent>(c));
  }
  return ExponentVector(std::move(out));
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Exponent c) { return c == 0; });
}

std::string ExponentVector::ToString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) os << ',';
    os << coords_[k];
  }
  os << ')';
  return os.str();
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent c : v) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool Divides(const ExponentVector& a, const ExponentVector& b) {
  RequireSameDimension(a, b);
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

ExponentVector Lcm(const ExponentVector& a, const ExponentVector& b) {
  RequireSameDimension(a, b);
  ExponentVector out = a;
  for (std::size_t k = 0; k < a.dimension(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

ExponentVector Lcm(std::span<const ExponentVector> vs) {
  if (vs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "lcm of an empty set");
  }
  ExponentVector out = vs.front();
  for (const auto& v : vs.subspan(1)) out = Lcm(out, v);
  return out;
}

MonomialIdeal MonomialIdeal::Minimalize(std::span<const ExponentVector> gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "monomial ideal needs a generator");
  }
  const std::size_t d = gens.front().dimension();
  for (const auto& g : gens) RequireSameDimension(gens.front(), g);

  std::vector<ExponentVector> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !Divides(gens[j], gens[i])) continue;
      // Equal vectors: keep only the first occurrence.
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) kept.push_back(gens[i]);
  }
  return MonomialIdeal(d, std::move(kept));
}

MonomialIdeal MonomialIdeal::FromMinimal(std::vector<ExponentVector> gens) {
  MonomialIdeal m = Minimalize(gens);
  if (m.size() != gens.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator list is not minimal: " +
                    std::to_string(gens.size() - m.size()) +
                    " generator(s) are divisible by others");
  }
  return m;
}

const ExponentVector& MonomialIdeal::generator(std::size_t index) const {
  if (index == 0 || index > generators_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator index " + std::to_string(index) + " out of range");
  }
  return generators_[index - 1];
}

bool MonomialIdeal::Contains(const ExponentVector& beta) const {
  if (beta.dimension() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point " + beta.ToString() + " has dimension " +
                    std::to_string(beta.dimension()) + ", ideal has " +
                    std::to_string(dimension_));
  }
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const ExponentVector& g) { return Divides(g, beta); });
}

std::vector<MonomialIdeal::GenericityViolation>
MonomialIdeal::GenericityViolations() const {
  std::vector<GenericityViolation> out;
  for (std::size_t k = 0; k < dimension_; ++k) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const Exponent e = generators_[i][k];
      if (e == 0) continue;
      for (std::size_t j = i + 1; j < generators_.size(); ++j) {
        if (generators_[j][k] == e) out.push_back({k, i + 1, j + 1, e});
      }
    }
  }
  return out;
}

bool MonomialIdeal::IsGeneric() const {
  for (std::size_t k = 0; k < dimension_; ++k) {
    std::vector<Exponent> column;
    for (const auto& g : generators_) {
      if (g[k] != 0) column.push_back(g[k]);
    }
    std::sort(column.begin(), column.end());
    if (std::adjacent_find(column.begin(), column.end()) != column.end()) {
      return false;
    }
  }
  return true;
}

MonomialIdeal MonomialIdeal::Canonical() const {
  auto gens = generators_;
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal(dimension_, std::move(gens));
}

}  // namespace scarfrel
