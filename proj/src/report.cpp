#include "scarfrel/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "scarfrel/analysis.hpp"
#include "scarfrel/error.hpp"
#include "scarfrel/random.hpp"
#include "scarfrel/resolution.hpp"

namespace scarfrel {

namespace {

using nlohmann::json;

constexpr double kEqualTolerance = 1e-12;

std::string Members(const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t t = 0; t < members.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(members[t]);
  }
  return s + "}";
}

json ToJson(const ExponentVector& v) {
  return json(std::vector<Exponent>(v.begin(), v.end()));
}

json ToJson(const Face& f) {
  return json{{"members", f.members}, {"label", ToJson(f.label)}};
}

json FacesJson(const std::vector<Face>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back(ToJson(f));
  return out;
}

struct Analysis {
  LabeledComplex complex;
  std::size_t v;  // 0 when the ideal is generic and no deformation happened
  TieBreak ties;
};

Analysis BuildComplex(const SystemSpec& spec, const RunOptions& opts) {
  const std::size_t r = spec.ideal.size();
  std::size_t v = opts.deformation_v ? opts.deformation_v
                                     : spec.deformation_v.value_or(r + 1);
  if (spec.ideal.IsGeneric()) return {ScarfComplex(spec.ideal), 0, {}};
  const TieBreak ties = opts.tie_break.value_or(spec.deformation_ties);
  return {DeformAndScarf(spec.ideal, v, ties), v, ties};
}

std::string DeformationText(const Analysis& a) {
  if (!a.v) return "none";
  return "applied (v=" + std::to_string(a.v) + ", ties " + ToString(a.ties) +
         ")";
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string Tighter(const Bound& scarf, const Bound& bonf) {
  const double tol = kEqualTolerance * std::max(1.0, std::abs(scarf.value));
  if (std::abs(scarf.value - bonf.value) <= tol) return "equal";
  bool scarf_wins;
  if (scarf.kind == BoundKind::kExact) {
    scarf_wins = true;
  } else if (scarf.kind == BoundKind::kUpper) {
    scarf_wins = scarf.value < bonf.value;
  } else {
    scarf_wins = scarf.value > bonf.value;
  }
  return scarf_wins ? "scarf" : "bonferroni";
}

}  // namespace

std::string FormatProbability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

std::string RenderScarf(const SystemSpec& spec, const RunOptions& opts) {
  const Analysis a = BuildComplex(spec, opts);
  const auto facets = a.complex.Facets();
  const auto& ideal = spec.ideal;

  if (opts.json) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(ToJson(g));
    json doc{{"generators", gens},
             {"dimension", ideal.dimension()},
             {"generic", ideal.IsGeneric()},
             {"deformed", a.v != 0},
             {"deformation_v", a.v ? json(a.v) : json(nullptr)},
             {"deformation_ties", a.v ? json(ToString(a.ties)) : json(nullptr)},
             {"kind", ToString(a.complex.kind())},
             {"face_count", a.complex.size()},
             {"faces", FacesJson(a.complex.faces())},
             {"facets", FacesJson(facets)}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "generators: " << ideal.size() << " (dimension " << ideal.dimension()
     << ")\n";
  for (std::size_t i = 1; i <= ideal.size(); ++i) {
    os << "  " << i << ' ' << ideal.generator(i).ToString() << '\n';
  }
  os << "generic: " << (ideal.IsGeneric() ? "yes" : "no") << '\n';
  os << "deformation: " << DeformationText(a) << '\n';
  os << "faces: " << a.complex.size() << '\n';
  for (const auto& f : a.complex.faces()) {
    os << "  " << Members(f.members) << ' ' << f.label.ToString() << '\n';
  }
  os << "facets: " << facets.size() << '\n';
  for (const auto& f : facets) {
    os << "  " << Members(f.members) << ' ' << f.label.ToString() << '\n';
  }
  os << "summary: " << a.complex.size() << " faces, " << facets.size()
     << " facets\n";
  return os.str();
}

std::string RenderReliability(const SystemSpec& spec, const RunOptions& opts) {
  const Analysis a = BuildComplex(spec, opts);
  const ReliabilityReport rep = BuildReport(spec.system, a.complex);

  if (opts.json) {
    json terms = json::array();
    for (const auto& t : rep.terms) {
      terms.push_back({{"sign", t.sign},
                       {"exponent", ToJson(t.exponent)},
                       {"face_cardinality", t.face_cardinality}});
    }
    json bounds = json::array();
    for (const auto& b : rep.bounds) {
      bounds.push_back(
          {{"depth", b.depth}, {"value", b.value}, {"kind", ToString(b.kind)}});
    }
    json doc{{"identity_value", rep.identity_value},
             {"term_count", rep.term_count},
             {"terms", terms},
             {"bounds", bounds},
             {"baseline_term_count", rep.baseline_term_count},
             {"oracle_value", rep.oracle_value ? json(*rep.oracle_value)
                                               : json(nullptr)},
             {"kind", ToString(a.complex.kind())},
             {"generic", spec.ideal.IsGeneric()},
             {"deformation_v", a.v ? json(a.v) : json(nullptr)},
             {"faces", FacesJson(a.complex.faces())}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "components: " << spec.system.dimension() << " ("
     << StateSpaceSize(spec.system) << " states)\n";
  os << "generators: " << spec.ideal.size() << '\n';
  os << "complex: " << ToString(a.complex.kind());
  if (a.v) os << " (v=" << a.v << ')';
  os << '\n';
  os << "reliability: " << FormatProbability(rep.identity_value) << '\n';
  os << "terms: " << rep.term_count << " terms (complete formula: "
     << rep.baseline_term_count << ")\n";
  if (rep.oracle_value) {
    os << "oracle: " << FormatProbability(*rep.oracle_value) << '\n';
    os << "discrepancy: "
       << FormatProbability(std::abs(rep.identity_value - *rep.oracle_value))
       << '\n';
  } else {
    os << "oracle: skipped (state space exceeds " << kDefaultStateCap
       << " states)\n";
  }
  return os.str();
}

std::string RenderBounds(const SystemSpec& spec, const RunOptions& opts) {
  const Analysis a = BuildComplex(spec, opts);
  const std::size_t r = spec.ideal.size();
  const std::size_t full = a.complex.max_cardinality();
  std::vector<std::size_t> depths = opts.depths;
  if (depths.empty()) {
    for (std::size_t m = 1; m <= full; ++m) depths.push_back(m);
  }
  for (std::size_t m : depths) {
    if (m < 1 || m > r) {
      throw Error(ErrorCode::kInvalidArgument,
                  "depth " + std::to_string(m) + " outside 1.." +
                      std::to_string(r));
    }
  }
  std::optional<LabeledComplex> taylor;
  if (r <= kDefaultTaylorCap) taylor = TaylorComplex(spec.ideal);

  const double exact = ReliabilityIdentity(spec.system, a.complex);
  json rows = json::array();
  std::ostringstream os;
  os << "complex: " << ToString(a.complex.kind());
  if (a.v) os << " (v=" << a.v << ')';
  os << ", " << a.complex.size() << " faces, max cardinality " << full
     << '\n';
  os << Pad("depth", 7) << Pad("kind", 7) << Pad("scarf", 20)
     << Pad("bonferroni", 20) << "tighter\n";
  for (std::size_t m : depths) {
    const Bound s = TubeBound(spec.system, a.complex, std::min(m, full));
    const Bound scarf{m, s.value, m >= full ? BoundKind::kExact : s.kind};
    json row{{"depth", m},
             {"kind", ToString(scarf.kind)},
             {"scarf", scarf.value}};
    os << Pad(std::to_string(m), 7) << Pad(ToString(scarf.kind), 7)
       << Pad(FormatProbability(scarf.value), 20);
    if (taylor) {
      const Bound b = BonferroniBound(spec.system, *taylor, m);
      const std::string tighter = Tighter(scarf, b);
      row["bonferroni"] = b.value;
      row["bonferroni_kind"] = ToString(b.kind);
      row["tighter"] = tighter;
      os << Pad(FormatProbability(b.value), 20) << tighter << '\n';
    } else {
      row["bonferroni"] = nullptr;
      row["bonferroni_kind"] = nullptr;
      row["tighter"] = "scarf";
      os << Pad("n/a", 20) << "scarf\n";
    }
    rows.push_back(std::move(row));
  }
  os << "exact: " << FormatProbability(exact) << '\n';

  if (opts.json) {
    json doc{{"kind", ToString(a.complex.kind())},
             {"deformation_v", a.v ? json(a.v) : json(nullptr)},
             {"face_count", a.complex.size()},
             {"max_cardinality", full},
             {"exact", exact},
             {"rows", rows}};
    return doc.dump(2) + "\n";
  }
  return os.str();
}

std::string RenderOracle(const SystemSpec& spec, const RunOptions& opts) {
  const double value = BruteForceReliability(spec.system, spec.ideal);
  const unsigned long long states = StateSpaceSize(spec.system);
  if (opts.json) {
    json doc{{"oracle_value", value}, {"states", states}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "states: " << states << '\n';
  os << "oracle: " << FormatProbability(value) << '\n';
  return os.str();
}

std::string RenderCompare(const SystemSpec& spec, const RunOptions& opts) {
  const Analysis a = BuildComplex(spec, opts);
  const double scarf = ReliabilityIdentity(spec.system, a.complex);
  const std::size_t r = spec.ideal.size();
  std::optional<double> taylor;
  std::size_t taylor_terms = 0;
  if (r <= kDefaultTaylorCap) {
    const LabeledComplex t = TaylorComplex(spec.ideal);
    taylor = ReliabilityIdentity(spec.system, t);
    taylor_terms = t.size();
  }
  std::optional<double> oracle;
  if (StateSpaceSize(spec.system) <= kDefaultStateCap) {
    oracle = BruteForceReliability(spec.system, spec.ideal);
  }

  auto opt = [](const std::optional<double>& x) {
    return x ? json(*x) : json(nullptr);
  };
  if (opts.json) {
    json doc{{"scarf", scarf},
             {"scarf_terms", a.complex.size()},
             {"kind", ToString(a.complex.kind())},
             {"taylor", opt(taylor)},
             {"taylor_terms", taylor ? json(taylor_terms) : json(nullptr)},
             {"oracle", opt(oracle)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "scarf: " << FormatProbability(scarf) << " (" << a.complex.size()
     << " terms, " << ToString(a.complex.kind()) << ")\n";
  if (taylor) {
    os << "taylor: " << FormatProbability(*taylor) << " (" << taylor_terms
       << " terms)\n";
  } else {
    os << "taylor: skipped (more than " << kDefaultTaylorCap
       << " generators)\n";
  }
  if (oracle) {
    os << "oracle: " << FormatProbability(*oracle) << '\n';
    os << "|scarf - oracle|: " << FormatProbability(std::abs(scarf - *oracle))
       << '\n';
    if (taylor) {
      os << "|taylor - oracle|: "
         << FormatProbability(std::abs(*taylor - *oracle)) << '\n';
    }
  } else {
    os << "oracle: skipped (state space exceeds " << kDefaultStateCap
       << " states)\n";
  }
  return os.str();
}

SelfTestResult RunSelfTest(const RunOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const random::CorpusLimits limits;
  std::size_t identity_failures = 0;
  std::size_t bracket_failures = 0;
  std::size_t tightness_failures = 0;
  double worst = 0.0;

  for (std::size_t c = 0; c < opts.selftest_cases; ++c) {
    const std::size_t d =
        std::uniform_int_distribution<std::size_t>(1, limits.max_dimension)(rng);
    const CoherentSystem sys = random::System(rng, d, limits.max_levels);
    const MonomialIdeal ideal =
        random::IdealOnGrid(rng, sys, limits.max_generators);
    const double oracle = BruteForceReliability(sys, ideal);
    const LabeledComplex scarf = DeformAndScarf(ideal);
    const LabeledComplex taylor = TaylorComplex(ideal);
    const double err =
        std::max(std::abs(ReliabilityIdentity(sys, scarf) - oracle),
                 std::abs(ReliabilityIdentity(sys, taylor) - oracle));
    worst = std::max(worst, err);
    if (err > 1e-12) ++identity_failures;
    for (std::size_t m = 1; m <= scarf.max_cardinality(); ++m) {
      const Bound s = TubeBound(sys, scarf, m);
      const Bound b = BonferroniBound(sys, taylor, m);
      if (s.kind == BoundKind::kUpper) {
        if (s.value < oracle - 1e-12) ++bracket_failures;
        if (s.value > b.value + 1e-12) ++tightness_failures;
      } else if (s.kind == BoundKind::kLower) {
        if (s.value > oracle + 1e-12) ++bracket_failures;
        if (s.value < b.value - 1e-12) ++tightness_failures;
      }
    }
  }

  SelfTestResult res;
  res.passed = identity_failures == 0 && bracket_failures == 0 &&
               tightness_failures == 0;
  std::ostringstream os;
  if (opts.json) {
    json doc{{"seed", opts.seed},
             {"cases", opts.selftest_cases},
             {"identity_failures", identity_failures},
             {"bracket_failures", bracket_failures},
             {"tightness_failures", tightness_failures},
             {"max_identity_error", worst},
             {"passed", res.passed}};
    os << doc.dump(2) << '\n';
  } else {
    os << "seed: " << opts.seed << '\n';
    os << "cases: " << opts.selftest_cases << '\n';
    os << "identity failures: " << identity_failures
       << " (max error " << FormatProbability(worst) << ")\n";
    os << "bracketing failures: " << bracket_failures << '\n';
    os << "tightness failures: " << tightness_failures << '\n';
    os << (res.passed ? "PASS" : "FAIL") << '\n';
  }
  res.text = os.str();
  return res;
}

}  // namespace scarfrel
