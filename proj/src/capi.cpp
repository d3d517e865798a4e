#include "scarfrel.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "scarfrel/analysis.hpp"
#include "scarfrel/error.hpp"
#include "scarfrel/report.hpp"
#include "scarfrel/resolution.hpp"
#include "scarfrel/spec_file.hpp"

struct scarfrel_ideal {
  scarfrel::MonomialIdeal value;
};
struct scarfrel_complex {
  scarfrel::LabeledComplex value;
};
struct scarfrel_system {
  scarfrel::CoherentSystem value;
};
struct scarfrel_spec {
  scarfrel::SystemSpec value;
};

namespace {

thread_local std::string g_last_error;

scarfrel_status ToStatus(scarfrel::ErrorCode code) {
  using scarfrel::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return SCARFREL_E_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch:
      return SCARFREL_E_DIMENSION_MISMATCH;
    case ErrorCode::kEmptyInput:
      return SCARFREL_E_EMPTY_INPUT;
    case ErrorCode::kNotGeneric:
      return SCARFREL_E_NOT_GENERIC;
    case ErrorCode::kTooLarge:
      return SCARFREL_E_TOO_LARGE;
    case ErrorCode::kOverflow:
      return SCARFREL_E_OVERFLOW;
    case ErrorCode::kInvalidSpec:
      return SCARFREL_E_INVALID_SPEC;
    case ErrorCode::kUnreachableCutoff:
      return SCARFREL_E_UNREACHABLE_CUTOFF;
    case ErrorCode::kInternal:
      return SCARFREL_E_INTERNAL;
  }
  return SCARFREL_E_INTERNAL;
}

scarfrel_status Fail(scarfrel_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
scarfrel_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const scarfrel::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SCARFREL_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SCARFREL_E_INTERNAL, e.what());
  }
}

#define SCARFREL_REQUIRE(ptr)                                          \
  do {                                                                 \
    if ((ptr) == nullptr) {                                            \
      return Fail(SCARFREL_E_INVALID_ARGUMENT, #ptr " must not be NULL"); \
    }                                                                  \
  } while (0)

scarfrel::ExponentVector ReadVector(const uint32_t* data, size_t dimension) {
  return scarfrel::ExponentVector(
      std::vector<scarfrel::Exponent>(data, data + dimension));
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

scarfrel::TieBreak TieBreakOf(int descending) {
  return descending ? scarfrel::TieBreak::kDescendingIndex
                    : scarfrel::TieBreak::kAscendingIndex;
}

scarfrel::RunOptions ToOptions(const scarfrel_run_options* o) {
  scarfrel::RunOptions opts;
  if (o == nullptr) return opts;
  opts.json = o->json != 0;
  opts.deformation_v = o->deformation_v;
  if (o->ties == 1) opts.tie_break = scarfrel::TieBreak::kAscendingIndex;
  if (o->ties == 2) opts.tie_break = scarfrel::TieBreak::kDescendingIndex;
  if (o->depths != nullptr) opts.depths.assign(o->depths, o->depths + o->depth_count);
  opts.seed = o->seed;
  if (o->selftest_cases) opts.selftest_cases = o->selftest_cases;
  return opts;
}

scarfrel_status Bound(const scarfrel::Bound& b, double* value,
                      scarfrel_bound_kind* kind) {
  *value = b.value;
  if (kind != nullptr) {
    switch (b.kind) {
      case scarfrel::BoundKind::kUpper:
        *kind = SCARFREL_BOUND_UPPER;
        break;
      case scarfrel::BoundKind::kLower:
        *kind = SCARFREL_BOUND_LOWER;
        break;
      case scarfrel::BoundKind::kExact:
        *kind = SCARFREL_BOUND_EXACT;
        break;
    }
  }
  return SCARFREL_OK;
}

}  // namespace

extern "C" {

const char* scarfrel_version(void) { return "1.0.0"; }

const char* scarfrel_status_name(scarfrel_status status) {
  switch (status) {
    case SCARFREL_OK:
      return "ok";
    case SCARFREL_E_INVALID_ARGUMENT:
      return "invalid argument";
    case SCARFREL_E_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case SCARFREL_E_EMPTY_INPUT:
      return "empty input";
    case SCARFREL_E_NOT_GENERIC:
      return "ideal not generic";
    case SCARFREL_E_TOO_LARGE:
      return "problem too large";
    case SCARFREL_E_OVERFLOW:
      return "exponent overflow";
    case SCARFREL_E_INVALID_SPEC:
      return "invalid spec";
    case SCARFREL_E_UNREACHABLE_CUTOFF:
      return "unreachable cutoff";
    case SCARFREL_E_INTERNAL:
      return "internal error";
    case SCARFREL_E_BUFFER_TOO_SMALL:
      return "buffer too small";
  }
  return "unknown status";
}

const char* scarfrel_last_error(void) { return g_last_error.c_str(); }

void scarfrel_string_free(char* text) { std::free(text); }

scarfrel_status scarfrel_ideal_create(size_t dimension, const uint32_t* coords,
                                      size_t count, scarfrel_ideal** out) {
  SCARFREL_REQUIRE(out);
  SCARFREL_REQUIRE(coords);
  return Guard([&] {
    if (dimension == 0) {
      return Fail(SCARFREL_E_INVALID_ARGUMENT, "dimension must be positive");
    }
    std::vector<scarfrel::ExponentVector> gens;
    for (size_t i = 0; i < count; ++i) {
      gens.push_back(ReadVector(coords + i * dimension, dimension));
    }
    *out = new scarfrel_ideal{scarfrel::MonomialIdeal::Minimalize(gens)};
    return SCARFREL_OK;
  });
}

void scarfrel_ideal_destroy(scarfrel_ideal* ideal) { delete ideal; }

size_t scarfrel_ideal_dimension(const scarfrel_ideal* ideal) {
  return ideal ? ideal->value.dimension() : 0;
}

size_t scarfrel_ideal_generator_count(const scarfrel_ideal* ideal) {
  return ideal ? ideal->value.size() : 0;
}

scarfrel_status scarfrel_ideal_generator(const scarfrel_ideal* ideal,
                                         size_t index, uint32_t* out) {
  SCARFREL_REQUIRE(ideal);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    const auto& g = ideal->value.generator(index);
    std::copy(g.begin(), g.end(), out);
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_ideal_contains(const scarfrel_ideal* ideal,
                                        const uint32_t* beta, int* out) {
  SCARFREL_REQUIRE(ideal);
  SCARFREL_REQUIRE(beta);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = ideal->value.Contains(ReadVector(beta, ideal->value.dimension()));
    return SCARFREL_OK;
  });
}

int scarfrel_ideal_is_generic(const scarfrel_ideal* ideal) {
  return ideal && ideal->value.IsGeneric() ? 1 : 0;
}

scarfrel_status scarfrel_ideal_deform(const scarfrel_ideal* ideal, size_t v,
                                      int descending_ties, uint32_t* out) {
  SCARFREL_REQUIRE(ideal);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    const auto rec =
        scarfrel::Deform(ideal->value, v, TieBreakOf(descending_ties));
    for (const auto& g : rec.deformed) out = std::copy(g.begin(), g.end(), out);
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_taylor_complex(const scarfrel_ideal* ideal,
                                        scarfrel_complex** out) {
  SCARFREL_REQUIRE(ideal);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = new scarfrel_complex{scarfrel::TaylorComplex(ideal->value)};
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_scarf_complex(const scarfrel_ideal* ideal,
                                       scarfrel_complex** out) {
  SCARFREL_REQUIRE(ideal);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = new scarfrel_complex{scarfrel::ScarfComplex(ideal->value)};
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_deform_and_scarf(const scarfrel_ideal* ideal,
                                          size_t v, int descending_ties,
                                          scarfrel_complex** out) {
  SCARFREL_REQUIRE(ideal);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = new scarfrel_complex{
        scarfrel::DeformAndScarf(ideal->value, v, TieBreakOf(descending_ties))};
    return SCARFREL_OK;
  });
}

void scarfrel_complex_destroy(scarfrel_complex* complex) { delete complex; }

scarfrel_complex_kind scarfrel_complex_kind_of(const scarfrel_complex* complex) {
  if (complex == nullptr) return SCARFREL_TAYLOR;
  switch (complex->value.kind()) {
    case scarfrel::ComplexKind::kTaylor:
      return SCARFREL_TAYLOR;
    case scarfrel::ComplexKind::kScarf:
      return SCARFREL_SCARF;
    case scarfrel::ComplexKind::kScarfDeformed:
      return SCARFREL_SCARF_DEFORMED;
  }
  return SCARFREL_TAYLOR;
}

size_t scarfrel_complex_face_count(const scarfrel_complex* complex) {
  return complex ? complex->value.size() : 0;
}

size_t scarfrel_complex_facet_count(const scarfrel_complex* complex) {
  return complex ? complex->value.Facets().size() : 0;
}

size_t scarfrel_complex_max_cardinality(const scarfrel_complex* complex) {
  return complex ? complex->value.max_cardinality() : 0;
}

scarfrel_status scarfrel_complex_face(const scarfrel_complex* complex,
                                      size_t face, size_t* members,
                                      size_t capacity, size_t* cardinality,
                                      uint32_t* label) {
  SCARFREL_REQUIRE(complex);
  const auto& faces = complex->value.faces();
  if (face >= faces.size()) {
    return Fail(SCARFREL_E_INVALID_ARGUMENT,
                "face index " + std::to_string(face) + " out of range");
  }
  const auto& f = faces[face];
  if (cardinality != nullptr) *cardinality = f.cardinality();
  if (label != nullptr) std::copy(f.label.begin(), f.label.end(), label);
  if (members != nullptr) {
    if (capacity < f.cardinality()) {
      return Fail(SCARFREL_E_BUFFER_TOO_SMALL,
                  "face has " + std::to_string(f.cardinality()) + " members");
    }
    std::copy(f.members.begin(), f.members.end(), members);
  }
  return SCARFREL_OK;
}

scarfrel_status scarfrel_complex_pointwise_coefficient(
    const scarfrel_complex* complex, const uint32_t* beta, long long* out) {
  SCARFREL_REQUIRE(complex);
  SCARFREL_REQUIRE(beta);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    const auto terms = scarfrel::HilbertNumerator(complex->value);
    *out = scarfrel::PointwiseCoefficient(
        terms, ReadVector(beta, complex->value.ideal().dimension()));
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_system_create(size_t components, const size_t* levels,
                                       const double* probs,
                                       scarfrel_system** out) {
  SCARFREL_REQUIRE(levels);
  SCARFREL_REQUIRE(probs);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    std::vector<scarfrel::Component> comps;
    for (size_t i = 0; i < components; ++i) {
      scarfrel::Component c;
      c.name = "c" + std::to_string(i + 1);
      c.levels = levels[i];
      c.probs.assign(probs, probs + levels[i]);
      probs += levels[i];
      comps.push_back(std::move(c));
    }
    *out = new scarfrel_system{scarfrel::CoherentSystem(std::move(comps))};
    return SCARFREL_OK;
  });
}

void scarfrel_system_destroy(scarfrel_system* system) { delete system; }

scarfrel_status scarfrel_system_survival(const scarfrel_system* system,
                                         size_t component, size_t level,
                                         double* out) {
  SCARFREL_REQUIRE(system);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = system->value.Survival(component, level);
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_system_orthant_prob(const scarfrel_system* system,
                                             const uint32_t* alpha,
                                             double* out) {
  SCARFREL_REQUIRE(system);
  SCARFREL_REQUIRE(alpha);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = system->value.OrthantProb(
        ReadVector(alpha, system->value.dimension()));
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_reliability_identity(const scarfrel_system* system,
                                              const scarfrel_complex* complex,
                                              double* out) {
  SCARFREL_REQUIRE(system);
  SCARFREL_REQUIRE(complex);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = scarfrel::ReliabilityIdentity(system->value, complex->value);
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_tube_bound(const scarfrel_system* system,
                                    const scarfrel_complex* complex,
                                    size_t depth, double* value,
                                    scarfrel_bound_kind* kind) {
  SCARFREL_REQUIRE(system);
  SCARFREL_REQUIRE(complex);
  SCARFREL_REQUIRE(value);
  return Guard([&] {
    return Bound(scarfrel::TubeBound(system->value, complex->value, depth),
                 value, kind);
  });
}

scarfrel_status scarfrel_bonferroni_bound(const scarfrel_system* system,
                                          const scarfrel_complex* taylor,
                                          size_t depth, double* value,
                                          scarfrel_bound_kind* kind) {
  SCARFREL_REQUIRE(system);
  SCARFREL_REQUIRE(taylor);
  SCARFREL_REQUIRE(value);
  return Guard([&] {
    return Bound(scarfrel::BonferroniBound(system->value, taylor->value, depth),
                 value, kind);
  });
}

scarfrel_status scarfrel_brute_force_reliability(const scarfrel_system* system,
                                                 const scarfrel_ideal* ideal,
                                                 double* out) {
  SCARFREL_REQUIRE(system);
  SCARFREL_REQUIRE(ideal);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = scarfrel::BruteForceReliability(system->value, ideal->value);
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_spec_parse(const char* json_text, scarfrel_spec** out) {
  SCARFREL_REQUIRE(json_text);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = new scarfrel_spec{scarfrel::ParseSystemSpec(json_text)};
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_spec_load(const char* path, scarfrel_spec** out) {
  SCARFREL_REQUIRE(path);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = new scarfrel_spec{scarfrel::LoadSystemSpec(path)};
    return SCARFREL_OK;
  });
}

void scarfrel_spec_destroy(scarfrel_spec* spec) { delete spec; }

scarfrel_status scarfrel_spec_ideal(const scarfrel_spec* spec,
                                    scarfrel_ideal** out) {
  SCARFREL_REQUIRE(spec);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = new scarfrel_ideal{spec->value.ideal};
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_spec_system(const scarfrel_spec* spec,
                                     scarfrel_system** out) {
  SCARFREL_REQUIRE(spec);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    *out = new scarfrel_system{spec->value.system};
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_run(const scarfrel_spec* spec, const char* command,
                             const scarfrel_run_options* options, char** out) {
  SCARFREL_REQUIRE(spec);
  SCARFREL_REQUIRE(command);
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    const auto opts = ToOptions(options);
    const std::string cmd = command;
    std::string text;
    if (cmd == "scarf") {
      text = scarfrel::RenderScarf(spec->value, opts);
    } else if (cmd == "reliability") {
      text = scarfrel::RenderReliability(spec->value, opts);
    } else if (cmd == "bounds") {
      text = scarfrel::RenderBounds(spec->value, opts);
    } else if (cmd == "oracle") {
      text = scarfrel::RenderOracle(spec->value, opts);
    } else if (cmd == "compare") {
      text = scarfrel::RenderCompare(spec->value, opts);
    } else {
      return Fail(SCARFREL_E_INVALID_ARGUMENT, "unknown command " + cmd);
    }
    *out = CopyString(text);
    return SCARFREL_OK;
  });
}

scarfrel_status scarfrel_selftest(const scarfrel_run_options* options,
                                  char** out, int* passed) {
  SCARFREL_REQUIRE(out);
  return Guard([&] {
    const auto res = scarfrel::RunSelfTest(ToOptions(options));
    *out = CopyString(res.text);
    if (passed != nullptr) *passed = res.passed ? 1 : 0;
    return SCARFREL_OK;
  });
}

}  // extern "C"
