#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "scarfrel/error.hpp"
#include "scarfrel/monomial.hpp"
#include "scarfrel/random.hpp"

using namespace scarfrel;

namespace {

ExponentVector RandomVector(std::mt19937_64& rng, std::size_t d, Exponent max) {
  ExponentVector v(d);
  for (std::size_t k = 0; k < d; ++k) {
    v[k] = std::uniform_int_distribution<Exponent>(0, max)(rng);
  }
  return v;
}

// Independent membership check: the upper set of the generators, built by
// flooding the box upwards from every generator.
std::set<ExponentVector> UpperSetInBox(const std::vector<ExponentVector>& gens,
                                       Exponent top) {
  std::set<ExponentVector> out;
  std::vector<ExponentVector> stack(gens.begin(), gens.end());
  while (!stack.empty()) {
    ExponentVector p = stack.back();
    stack.pop_back();
    bool inside = true;
    for (Exponent c : p) inside = inside && c <= top;
    if (!inside || !out.insert(p).second) continue;
    for (std::size_t k = 0; k < p.dimension(); ++k) {
      ExponentVector q = p;
      ++q[k];
      stack.push_back(q);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("divides compares coordinatewise") {
  CHECK(Divides({3, 0}, {3, 2}));
  CHECK(Divides({0, 0, 0}, {5, 1, 7}));
  CHECK_FALSE(Divides({2, 2}, {3, 0}));
  CHECK_THROWS_AS(Divides({1}, {1, 2}), Error);
}

TEST_CASE("divides is a partial order") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const auto a = RandomVector(rng, 3, 2);
    const auto b = RandomVector(rng, 3, 2);
    const auto c = RandomVector(rng, 3, 2);
    CHECK(Divides(a, a));
    if (Divides(a, b) && Divides(b, a)) CHECK(a == b);
    if (Divides(a, b) && Divides(b, c)) CHECK(Divides(a, c));
  }
}

TEST_CASE("lcm is the coordinatewise maximum") {
  const std::vector<ExponentVector> pair{{3, 0}, {2, 2}};
  CHECK(Lcm(pair) == ExponentVector{3, 2});
  const std::vector<ExponentVector> triple{
      {1, 1, 2, 2}, {1, 2, 1, 3}, {0, 3, 1, 3}};
  CHECK(Lcm(triple) == ExponentVector{1, 3, 2, 3});
  const std::vector<ExponentVector> single{{4, 1}};
  CHECK(Lcm(single) == ExponentVector{4, 1});
  CHECK_THROWS_AS(Lcm(std::span<const ExponentVector>{}), Error);
}

TEST_CASE("lcm algebra") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const auto a = RandomVector(rng, 4, 5);
    const auto b = RandomVector(rng, 4, 5);
    const auto c = RandomVector(rng, 4, 5);
    CHECK(Lcm(a, a) == a);
    CHECK(Lcm(a, b) == Lcm(b, a));
    CHECK(Lcm(Lcm(a, b), c) == Lcm(a, Lcm(b, c)));
    CHECK(Divides(a, Lcm(a, b)));
    CHECK(Divides(b, Lcm(a, b)));
  }
}

TEST_CASE("minimalize drops divisible generators and duplicates") {
  const std::vector<ExponentVector> gens{{3, 0}, {2, 2}, {0, 3}, {3, 1}};
  const auto m = MonomialIdeal::Minimalize(gens);
  CHECK(m.generators() ==
        std::vector<ExponentVector>{{3, 0}, {2, 2}, {0, 3}});

  const std::vector<ExponentVector> dup{{1, 1}, {1, 1}};
  CHECK(MonomialIdeal::Minimalize(dup).size() == 1);

  const auto pts = fixtures::ProfitCutoff28Points();
  CHECK(MonomialIdeal::Minimalize(pts).generators() == pts);

  CHECK_THROWS_AS(MonomialIdeal::Minimalize(std::vector<ExponentVector>{}),
                  Error);
  CHECK_THROWS_AS(
      MonomialIdeal::Minimalize(std::vector<ExponentVector>{{1, 0}, {1}}),
      Error);
  CHECK_THROWS_AS(MonomialIdeal::FromMinimal({{1, 0}, {1, 1}}), Error);
}

TEST_CASE("minimalize is idempotent and preserves the generated set") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    std::vector<ExponentVector> gens;
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    for (int i = 0; i < n; ++i) gens.push_back(RandomVector(rng, 3, 3));
    const auto m = MonomialIdeal::Minimalize(gens);
    CHECK(MonomialIdeal::Minimalize(m.generators()) == m);
    for (const auto& g : m.generators()) {
      for (const auto& h : m.generators()) {
        if (&g != &h) CHECK_FALSE(Divides(g, h));
      }
    }
    const auto upper = UpperSetInBox(gens, 4);
    ExponentVector beta(3);
    for (beta[0] = 0; beta[0] <= 4; ++beta[0]) {
      for (beta[1] = 0; beta[1] <= 4; ++beta[1]) {
        for (beta[2] = 0; beta[2] <= 4; ++beta[2]) {
          CHECK(m.Contains(beta) == (upper.count(beta) > 0));
        }
      }
    }
  }
}

TEST_CASE("membership in the staircase ideal") {
  const auto m = MonomialIdeal::Minimalize(fixtures::StaircaseGenerators());
  CHECK(m.Contains({2, 2}));
  CHECK_FALSE(m.Contains({2, 1}));
  CHECK(m.Contains({3, 3}));
  CHECK_THROWS_AS(m.Contains({1, 1, 1}), Error);
}

TEST_CASE("genericity") {
  CHECK(MonomialIdeal::Minimalize(fixtures::StaircaseGenerators()).IsGeneric());
  const auto k_of_n = MonomialIdeal::Minimalize(fixtures::TwoOutOfFour());
  CHECK_FALSE(k_of_n.IsGeneric());
  const auto v = k_of_n.GenericityViolations();
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().coordinate == 0);
  CHECK(v.front().first == 1);
  CHECK(v.front().second == 2);
  CHECK(MonomialIdeal::FromMinimal({{5, 5, 5}}).IsGeneric());
  // Shared zero exponents do not break genericity.
  CHECK(MonomialIdeal::FromMinimal({{1, 0, 0}, {0, 1, 0}}).IsGeneric());
  CHECK_FALSE(MonomialIdeal::FromMinimal({{2, 1, 0}, {0, 1, 2}}).IsGeneric());
  CHECK(MonomialIdeal::FromMinimal({{2, 0, 0}, {0, 1, 0}}).IsGeneric());
}

TEST_CASE("random generic ideals are generic") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    CHECK(random::GenericIdeal(rng, 4, 8).IsGeneric());
  }
}

TEST_CASE("canonical order and checked conversion") {
  const auto m = MonomialIdeal::Minimalize(fixtures::StaircaseGenerators());
  CHECK(m.Canonical().generators() ==
        std::vector<ExponentVector>{{0, 3}, {2, 2}, {3, 0}});
  const std::int64_t ok[] = {1, 2};
  CHECK(ExponentVector::FromSigned(ok) == ExponentVector{1, 2});
  const std::int64_t neg[] = {-1};
  CHECK_THROWS_AS(ExponentVector::FromSigned(neg), Error);
  const std::int64_t big[] = {std::int64_t{1} << 40};
  try {
    ExponentVector::FromSigned(big);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverflow);
  }
}
