#include "scarfrel/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "scarfrel/error.hpp"

namespace scarfrel {

namespace {

using IndexSet = std::vector<std::size_t>;  // 0-based, ascending

bool FaceOrder(const Face& a, const Face& b) {
  if (a.members.size() != b.members.size()) {
    return a.members.size() < b.members.size();
  }
  return a.members < b.members;
}

ExponentVector LabelOf(const MonomialIdeal& ideal, const IndexSet& members) {
  ExponentVector label = ideal.generators()[members.front()];
  for (std::size_t i : members) {
    const auto& g = ideal.generators()[i];
    for (std::size_t k = 0; k < label.dimension(); ++k) {
      label[k] = std::max(label[k], g[k]);
    }
  }
  return label;
}

Face MakeFace(const MonomialIdeal& ideal, const IndexSet& members) {
  Face f;
  f.label = LabelOf(ideal, members);
  f.members.reserve(members.size());
  for (std::size_t i : members) f.members.push_back(i + 1);
  return f;
}

// Every member must be the unique strict maximum of the face in at least one
// coordinate; equivalently, dropping any member shrinks the lcm.
bool EveryMemberIsNeeded(const MonomialIdeal& ideal, const IndexSet& members) {
  if (members.size() < 2) return true;
  const auto& gens = ideal.generators();
  for (std::size_t i : members) {
    bool needed = false;
    for (std::size_t k = 0; k < ideal.dimension() && !needed; ++k) {
      needed = true;
      for (std::size_t j : members) {
        if (j != i && gens[j][k] >= gens[i][k]) {
          needed = false;
          break;
        }
      }
    }
    if (!needed) return false;
  }
  return true;
}

bool NoOutsiderDivides(const MonomialIdeal& ideal, const IndexSet& members,
                       const ExponentVector& label) {
  const auto& gens = ideal.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (std::binary_search(members.begin(), members.end(), j)) continue;
    if (Divides(gens[j], label)) return false;
  }
  return true;
}

void RequireDistinctLabels(const std::vector<Face>& faces) {
  std::unordered_set<ExponentVector, ExponentVectorHash> seen;
  for (const auto& f : faces) {
    if (!seen.insert(f.label).second) {
      throw Error(ErrorCode::kInternal,
                  "Scarf complex has a repeated label " + f.label.ToString());
    }
  }
}

std::vector<Face> ScarfFaces(const MonomialIdeal& ideal) {
  const std::size_t r = ideal.size();
  std::vector<Face> faces;
  std::vector<IndexSet> level;
  for (std::size_t i = 0; i < r; ++i) level.push_back({i});
  for (const auto& s : level) faces.push_back(MakeFace(ideal, s));

  while (!level.empty()) {
    std::set<IndexSet> accepted(level.begin(), level.end());
    std::vector<IndexSet> next;
    for (const auto& base : level) {
      for (std::size_t j = base.back() + 1; j < r; ++j) {
        IndexSet cand = base;
        cand.push_back(j);
        // Downward closure: all facets of the candidate must already be in.
        bool closed = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
          IndexSet sub;
          sub.reserve(cand.size() - 1);
          for (std::size_t t = 0; t < cand.size(); ++t) {
            if (t != drop) sub.push_back(cand[t]);
          }
          closed = accepted.count(sub) > 0;
        }
        if (!closed || !EveryMemberIsNeeded(ideal, cand)) continue;
        const ExponentVector label = LabelOf(ideal, cand);
        if (!NoOutsiderDivides(ideal, cand, label)) continue;
        next.push_back(std::move(cand));
      }
    }
    for (const auto& s : next) faces.push_back(MakeFace(ideal, s));
    level = std::move(next);
  }
  return faces;
}

}  // namespace

const char* ToString(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::kTaylor:
      return "taylor";
    case ComplexKind::kScarf:
      return "scarf";
    case ComplexKind::kScarfDeformed:
      return "scarf_deformed";
  }
  return "unknown";
}

const char* ToString(TieBreak tie_break) {
  return tie_break == TieBreak::kAscendingIndex ? "ascending" : "descending";
}

LabeledComplex::LabeledComplex(MonomialIdeal ideal, std::vector<Face> faces,
                               ComplexKind kind)
    : ideal_(std::move(ideal)), faces_(std::move(faces)), kind_(kind) {
  std::sort(faces_.begin(), faces_.end(), FaceOrder);
}

std::size_t LabeledComplex::max_cardinality() const noexcept {
  return faces_.empty() ? 0 : faces_.back().cardinality();
}

std::vector<Face> LabeledComplex::Facets() const {
  std::set<std::vector<std::size_t>> members;
  for (const auto& f : faces_) members.insert(f.members);
  std::vector<Face> out;
  for (const auto& f : faces_) {
    bool maximal = true;
    for (std::size_t j = 1; j <= ideal_.size() && maximal; ++j) {
      if (std::binary_search(f.members.begin(), f.members.end(), j)) continue;
      auto bigger = f.members;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), j), j);
      maximal = members.count(bigger) == 0;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<std::vector<std::size_t>> LabeledComplex::MemberSets() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) out.push_back(f.members);
  return out;
}

LabeledComplex TaylorComplex(const MonomialIdeal& ideal, std::size_t cap) {
  const std::size_t r = ideal.size();
  if (r > cap) {
    throw Error(ErrorCode::kTooLarge,
                "Taylor complex of " + std::to_string(r) +
                    " generators exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Face> faces;
  faces.reserve((std::size_t{1} << r) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    IndexSet members;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1u) members.push_back(i);
    }
    faces.push_back(MakeFace(ideal, members));
  }
  return LabeledComplex(ideal, std::move(faces), ComplexKind::kTaylor);
}

LabeledComplex ScarfComplex(const MonomialIdeal& ideal) {
  const auto violations = ideal.GenericityViolations();
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::kNotGeneric,
                "ideal is not generic: variable x" +
                    std::to_string(v.coordinate + 1) + " has exponent " +
                    std::to_string(v.exponent) + " in generators " +
                    std::to_string(v.first) + " and " +
                    std::to_string(v.second) + "; use deformation");
  }
  auto faces = ScarfFaces(ideal);
  RequireDistinctLabels(faces);
  return LabeledComplex(ideal, std::move(faces), ComplexKind::kScarf);
}

LabeledComplex ScarfBruteOracle(const MonomialIdeal& ideal) {
  const std::size_t r = ideal.size();
  if (r > kScarfOracleCap) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force Scarf oracle is limited to " +
                    std::to_string(kScarfOracleCap) + " generators");
  }
  const std::size_t n = std::size_t{1} << r;
  std::vector<ExponentVector> labels(n);
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> count;
  for (std::size_t mask = 1; mask < n; ++mask) {
    IndexSet members;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1u) members.push_back(i);
    }
    labels[mask] = LabelOf(ideal, members);
    ++count[labels[mask]];
  }
  std::vector<Face> faces;
  for (std::size_t mask = 1; mask < n; ++mask) {
    const bool singleton = (mask & (mask - 1)) == 0;
    if (count[labels[mask]] != 1 && !singleton) continue;
    IndexSet members;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1u) members.push_back(i);
    }
    faces.push_back(MakeFace(ideal, members));
  }
  return LabeledComplex(ideal, std::move(faces), ComplexKind::kScarf);
}

DeformationRecord Deform(const MonomialIdeal& ideal, std::size_t v,
                         TieBreak tie_break) {
  const std::size_t r = ideal.size();
  if (v <= r) {
    throw Error(ErrorCode::kInvalidArgument,
                "deformation parameter v=" + std::to_string(v) +
                    " must exceed the generator count " + std::to_string(r));
  }
  const auto& gens = ideal.generators();
  DeformationRecord rec;
  rec.v = v;
  rec.tie_break = tie_break;
  rec.deformed.assign(r, ExponentVector(ideal.dimension()));
  std::vector<std::size_t> order(r);
  for (std::size_t k = 0; k < ideal.dimension(); ++k) {
    std::iota(order.begin(), order.end(), 0);
    if (tie_break == TieBreak::kDescendingIndex) {
      std::reverse(order.begin(), order.end());
    }
    // The offsets are below 1, so they only separate equal values, in the
    // order the indices were laid out above.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return gens[a][k] < gens[b][k];
                     });
    for (std::size_t rank = 0; rank < r; ++rank) {
      rec.deformed[order[rank]][k] = static_cast<Exponent>(rank);
    }
  }
  return rec;
}

LabeledComplex DeformAndScarf(const MonomialIdeal& ideal, std::size_t v,
                              TieBreak tie_break) {
  if (v == 0) v = ideal.size() + 1;
  const DeformationRecord rec = Deform(ideal, v, tie_break);
  const MonomialIdeal deformed = MonomialIdeal::FromMinimal(rec.deformed);
  const LabeledComplex scarf = ScarfComplex(deformed);
  std::vector<Face> faces;
  faces.reserve(scarf.size());
  for (const auto& f : scarf.faces()) {
    IndexSet members;
    for (std::size_t i : f.members) members.push_back(i - 1);
    faces.push_back(MakeFace(ideal, members));
  }
  return LabeledComplex(ideal, std::move(faces), ComplexKind::kScarfDeformed);
}

LabeledComplex ScarfOrDeformed(const MonomialIdeal& ideal, std::size_t v,
                               TieBreak tie_break) {
  if (ideal.IsGeneric()) return ScarfComplex(ideal);
  return DeformAndScarf(ideal, v, tie_break);
}

SignedTermList HilbertNumerator(const LabeledComplex& complex) {
  SignedTermList terms;
  terms.reserve(complex.size() + 1);
  terms.push_back({+1, ExponentVector(complex.ideal().dimension()), 0});
  for (const auto& f : complex.faces()) {
    const int sign = f.cardinality() % 2 == 0 ? +1 : -1;
    terms.push_back({sign, f.label, f.cardinality()});
  }
  return terms;
}

long long PointwiseCoefficient(const SignedTermList& terms,
                               const ExponentVector& beta) {
  long long sum = 0;
  for (const auto& t : terms) {
    if (Divides(t.exponent, beta)) sum += t.sign;
  }
  return sum;
}

std::string FormatPolynomial(const SignedTermList& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (first) {
      if (t.sign < 0) os << "-";
    } else {
      os << (t.sign < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < t.exponent.dimension(); ++k) {
      if (t.exponent[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (t.exponent[k] > 1) mono += "^" + std::to_string(t.exponent[k]);
    }
    os << (mono.empty() ? "1" : mono);
  }
  return os.str();
}

}  // namespace scarfrel
