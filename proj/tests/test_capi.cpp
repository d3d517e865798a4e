#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "scarfrel.h"

namespace {

std::string DataPath(const char* name) {
  return std::string(SCARFREL_TEST_DATA) + "/" + name;
}

std::string Run(const scarfrel_spec* spec, const char* command,
                const scarfrel_run_options& opts) {
  char* out = nullptr;
  REQUIRE(scarfrel_run(spec, command, &opts, &out) == SCARFREL_OK);
  std::string text(out);
  scarfrel_string_free(out);
  return text;
}

}  // namespace

TEST_CASE("C API: staircase ideal") {
  const uint32_t coords[] = {3, 0, 2, 2, 0, 3, 3, 3};
  scarfrel_ideal* ideal = nullptr;
  REQUIRE(scarfrel_ideal_create(2, coords, 4, &ideal) == SCARFREL_OK);
  CHECK(scarfrel_ideal_dimension(ideal) == 2);
  CHECK(scarfrel_ideal_generator_count(ideal) == 3);
  CHECK(scarfrel_ideal_is_generic(ideal) == 1);
  uint32_t g[2];
  REQUIRE(scarfrel_ideal_generator(ideal, 2, g) == SCARFREL_OK);
  CHECK(g[0] == 2);
  CHECK(g[1] == 2);
  CHECK(scarfrel_ideal_generator(ideal, 0, g) == SCARFREL_E_INVALID_ARGUMENT);
  CHECK(std::strlen(scarfrel_last_error()) > 0);
  int in = -1;
  const uint32_t beta[] = {1, 1};
  REQUIRE(scarfrel_ideal_contains(ideal, beta, &in) == SCARFREL_OK);
  CHECK(in == 0);

  scarfrel_complex* scarf = nullptr;
  REQUIRE(scarfrel_scarf_complex(ideal, &scarf) == SCARFREL_OK);
  CHECK(scarfrel_complex_kind_of(scarf) == SCARFREL_SCARF);
  CHECK(scarfrel_complex_face_count(scarf) == 5);
  CHECK(scarfrel_complex_facet_count(scarf) == 2);
  CHECK(scarfrel_complex_max_cardinality(scarf) == 2);
  size_t members[2];
  size_t card = 0;
  uint32_t label[2];
  REQUIRE(scarfrel_complex_face(scarf, 3, members, 2, &card, label) ==
          SCARFREL_OK);
  CHECK(card == 2);
  CHECK(members[0] == 1);
  CHECK(members[1] == 2);
  CHECK(label[0] == 3);
  CHECK(label[1] == 2);
  CHECK(scarfrel_complex_face(scarf, 3, members, 1, &card, label) ==
        SCARFREL_E_BUFFER_TOO_SMALL);
  CHECK(card == 2);
  CHECK(scarfrel_complex_face(scarf, 5, members, 2, &card, label) ==
        SCARFREL_E_INVALID_ARGUMENT);
  long long coeff = 0;
  const uint32_t xy2[] = {1, 2};
  REQUIRE(scarfrel_complex_pointwise_coefficient(scarf, xy2, &coeff) ==
          SCARFREL_OK);
  CHECK(coeff == 1);

  scarfrel_complex* taylor = nullptr;
  REQUIRE(scarfrel_taylor_complex(ideal, &taylor) == SCARFREL_OK);
  CHECK(scarfrel_complex_face_count(taylor) == 7);

  const size_t levels[] = {4, 4};
  const double probs[] = {0.1, 0.2, 0.3, 0.4, 0.25, 0.25, 0.25, 0.25};
  scarfrel_system* sys = nullptr;
  REQUIRE(scarfrel_system_create(2, levels, probs, &sys) == SCARFREL_OK);
  double s = 0;
  REQUIRE(scarfrel_system_survival(sys, 0, 2, &s) == SCARFREL_OK);
  CHECK(s == doctest::Approx(0.7));
  double identity = 0, oracle = 0, bound = 0;
  scarfrel_bound_kind kind = SCARFREL_BOUND_EXACT;
  REQUIRE(scarfrel_reliability_identity(sys, scarf, &identity) == SCARFREL_OK);
  REQUIRE(scarfrel_brute_force_reliability(sys, ideal, &oracle) == SCARFREL_OK);
  CHECK(std::abs(identity - oracle) <= 1e-12);
  REQUIRE(scarfrel_tube_bound(sys, scarf, 1, &bound, &kind) == SCARFREL_OK);
  CHECK(kind == SCARFREL_BOUND_UPPER);
  CHECK(bound >= oracle);
  REQUIRE(scarfrel_bonferroni_bound(sys, taylor, 2, &bound, &kind) ==
          SCARFREL_OK);
  CHECK(kind == SCARFREL_BOUND_LOWER);
  CHECK(scarfrel_bonferroni_bound(sys, scarf, 2, &bound, &kind) ==
        SCARFREL_E_INVALID_ARGUMENT);
  CHECK(scarfrel_tube_bound(sys, scarf, 3, &bound, &kind) ==
        SCARFREL_E_INVALID_ARGUMENT);

  scarfrel_complex_destroy(taylor);
  scarfrel_complex_destroy(scarf);
  scarfrel_system_destroy(sys);
  scarfrel_ideal_destroy(ideal);
}

TEST_CASE("C API: error codes") {
  const uint32_t tied[] = {2, 1, 1, 2, 2, 0};
  scarfrel_ideal* ideal = nullptr;
  REQUIRE(scarfrel_ideal_create(3, tied, 2, &ideal) == SCARFREL_OK);
  CHECK(scarfrel_ideal_is_generic(ideal) == 0);
  scarfrel_complex* c = nullptr;
  CHECK(scarfrel_scarf_complex(ideal, &c) == SCARFREL_E_NOT_GENERIC);
  CHECK(c == nullptr);
  CHECK(std::string(scarfrel_last_error()).find("deformation") !=
        std::string::npos);
  REQUIRE(scarfrel_deform_and_scarf(ideal, 0, 0, &c) == SCARFREL_OK);
  CHECK(scarfrel_complex_kind_of(c) == SCARFREL_SCARF_DEFORMED);
  scarfrel_complex_destroy(c);
  std::vector<uint32_t> deformed(6);
  CHECK(scarfrel_ideal_deform(ideal, 2, 0, deformed.data()) ==
        SCARFREL_E_INVALID_ARGUMENT);
  REQUIRE(scarfrel_ideal_deform(ideal, 3, 0, deformed.data()) == SCARFREL_OK);
  CHECK(deformed == std::vector<uint32_t>{0, 0, 1, 1, 1, 0});
  scarfrel_ideal_destroy(ideal);

  CHECK(scarfrel_ideal_create(0, tied, 2, &ideal) != SCARFREL_OK);
  CHECK(scarfrel_ideal_create(3, tied, 0, &ideal) == SCARFREL_E_EMPTY_INPUT);
  CHECK(scarfrel_ideal_create(3, nullptr, 2, &ideal) ==
        SCARFREL_E_INVALID_ARGUMENT);

  const size_t levels[] = {2};
  const double bad[] = {0.5, 0.6};
  scarfrel_system* sys = nullptr;
  CHECK(scarfrel_system_create(1, levels, bad, &sys) ==
        SCARFREL_E_INVALID_ARGUMENT);
  CHECK(std::strcmp(scarfrel_status_name(SCARFREL_E_NOT_GENERIC),
                    "ideal not generic") == 0);
  CHECK(std::strlen(scarfrel_version()) > 0);
  scarfrel_ideal_destroy(nullptr);
  scarfrel_complex_destroy(nullptr);
  scarfrel_system_destroy(nullptr);
  scarfrel_spec_destroy(nullptr);
}

TEST_CASE("C API: spec files and reports") {
  scarfrel_spec* spec = nullptr;
  CHECK(scarfrel_spec_load(DataPath("invalid_probs.json").c_str(), &spec) ==
        SCARFREL_E_INVALID_SPEC);
  CHECK(scarfrel_spec_load(DataPath("unreachable.json").c_str(), &spec) ==
        SCARFREL_E_UNREACHABLE_CUTOFF);
  CHECK(scarfrel_spec_parse("{", &spec) == SCARFREL_E_INVALID_SPEC);
  CHECK(std::string(scarfrel_last_error()).find("line 1") != std::string::npos);

  REQUIRE(scarfrel_spec_load(DataPath("multistate28.json").c_str(), &spec) ==
          SCARFREL_OK);
  scarfrel_run_options opts{};
  const std::string scarf = Run(spec, "scarf", opts);
  CHECK(scarf.find("summary: 31 faces") != std::string::npos);
  CHECK(scarf == Run(spec, "scarf", opts));
  const std::string rel = Run(spec, "reliability", opts);
  CHECK(rel.find("31 terms (complete formula: 511)") != std::string::npos);
  opts.json = 1;
  CHECK(Run(spec, "reliability", opts).find("\"identity_value\"") !=
        std::string::npos);
  opts.json = 0;
  const size_t depths[] = {1, 2};
  opts.depths = depths;
  opts.depth_count = 2;
  const std::string bounds = Run(spec, "bounds", opts);
  CHECK(bounds.find("equal") != std::string::npos);
  char* out = nullptr;
  CHECK(scarfrel_run(spec, "frobnicate", &opts, &out) ==
        SCARFREL_E_INVALID_ARGUMENT);
  CHECK(out == nullptr);

  scarfrel_ideal* ideal = nullptr;
  scarfrel_system* sys = nullptr;
  REQUIRE(scarfrel_spec_ideal(spec, &ideal) == SCARFREL_OK);
  REQUIRE(scarfrel_spec_system(spec, &sys) == SCARFREL_OK);
  CHECK(scarfrel_ideal_generator_count(ideal) == 9);
  scarfrel_complex* c = nullptr;
  REQUIRE(scarfrel_deform_and_scarf(ideal, 10, 0, &c) == SCARFREL_OK);
  CHECK(scarfrel_complex_face_count(c) == 31);
  scarfrel_complex_destroy(c);
  scarfrel_system_destroy(sys);
  scarfrel_ideal_destroy(ideal);
  scarfrel_spec_destroy(spec);

  scarfrel_run_options st{};
  st.seed = 7;
  st.selftest_cases = 20;
  int passed = 0;
  REQUIRE(scarfrel_selftest(&st, &out, &passed) == SCARFREL_OK);
  CHECK(passed == 1);
  CHECK(std::string(out).find("PASS") != std::string::npos);
  scarfrel_string_free(out);
}
