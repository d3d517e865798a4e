#include "scarfrel/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scarfrel/error.hpp"

namespace scarfrel {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kInvalidSpec, where + ": " + what);
}

std::size_t LineOf(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + byte, '\n'));
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double Number(const json& v, const std::string& where) {
  if (!v.is_number()) Fail(where, "expected a number");
  return v.get<double>();
}

std::int64_t Integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) Fail(where, "expected an integer");
  return v.get<std::int64_t>();
}

std::vector<Component> ParseComponents(const json& doc) {
  const json& comps = Field(doc, "components", "spec");
  if (!comps.is_array() || comps.empty()) {
    Fail("components", "expected a nonempty array");
  }
  std::vector<Component> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "components[" + std::to_string(i) + "]";
    const json& c = comps[i];
    if (!c.is_object()) Fail(where, "expected an object");
    Component comp;
    if (auto it = c.find("name"); it != c.end()) {
      if (!it->is_string()) Fail(where + ".name", "expected a string");
      comp.name = it->get<std::string>();
    }
    const std::int64_t levels = Integer(Field(c, "levels", where), where + ".levels");
    if (levels < 2) Fail(where + ".levels", "must be at least 2");
    comp.levels = static_cast<std::size_t>(levels);
    const json& probs = Field(c, "probs", where);
    if (!probs.is_array()) Fail(where + ".probs", "expected an array");
    for (std::size_t j = 0; j < probs.size(); ++j) {
      comp.probs.push_back(
          Number(probs[j], where + ".probs[" + std::to_string(j) + "]"));
    }
    try {
      CoherentSystem({comp});
    } catch (const Error& e) {
      Fail(where, e.what());
    }
    out.push_back(std::move(comp));
  }
  return out;
}

MonomialIdeal ParsePoints(const json& pts, const CoherentSystem& system) {
  const std::string where = "minimal_nonfailure_points";
  if (!pts.is_array() || pts.empty()) Fail(where, "expected a nonempty array");
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!pts[i].is_array()) Fail(at, "expected an integer vector");
    if (pts[i].size() != system.dimension()) {
      Fail(at, "has " + std::to_string(pts[i].size()) + " entries, expected " +
                   std::to_string(system.dimension()));
    }
    std::vector<std::int64_t> raw;
    for (std::size_t k = 0; k < pts[i].size(); ++k) {
      const std::string ak = at + "[" + std::to_string(k) + "]";
      const std::int64_t v = Integer(pts[i][k], ak);
      if (v < 0) Fail(ak, "negative level");
      if (static_cast<std::uint64_t>(v) >= system.components()[k].levels) {
        Fail(ak, "level " + std::to_string(v) + " exceeds top level " +
                     std::to_string(system.components()[k].levels - 1));
      }
      raw.push_back(v);
    }
    gens.push_back(ExponentVector::FromSigned(raw));
  }
  return MonomialIdeal::Minimalize(gens);
}

ProfitSpec ParseProfit(const json& p, std::size_t d) {
  const std::string where = "profit";
  if (!p.is_object()) Fail(where, "expected an object");
  ProfitSpec spec;
  const json& lin = Field(p, "linear", where);
  if (!lin.is_array() || lin.size() != d) {
    Fail(where + ".linear", "expected " + std::to_string(d) + " coefficients");
  }
  for (std::size_t i = 0; i < lin.size(); ++i) {
    spec.linear.push_back(
        Number(lin[i], where + ".linear[" + std::to_string(i) + "]"));
  }
  if (auto it = p.find("interactions"); it != p.end()) {
    if (!it->is_array()) Fail(where + ".interactions", "expected an array");
    for (std::size_t t = 0; t < it->size(); ++t) {
      const std::string at = where + ".interactions[" + std::to_string(t) + "]";
      const json& row = (*it)[t];
      if (!row.is_array() || row.size() != 3) Fail(at, "expected [i, j, coeff]");
      const std::int64_t i = Integer(row[0], at + "[0]");
      const std::int64_t j = Integer(row[1], at + "[1]");
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > d ||
          static_cast<std::size_t>(j) > d) {
        Fail(at, "component indices are 1-based and must lie in 1.." +
                     std::to_string(d));
      }
      spec.interactions.push_back({static_cast<std::size_t>(i - 1),
                                   static_cast<std::size_t>(j - 1),
                                   Number(row[2], at + "[2]")});
    }
  }
  spec.cutoff = Number(Field(p, "cutoff", where), where + ".cutoff");
  try {
    spec.Validate();
  } catch (const Error& e) {
    Fail(where, e.what());
  }
  return spec;
}

}  // namespace

SystemSpec ParseSystemSpec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    Fail("line " + std::to_string(LineOf(json_text, e.byte)),
         "malformed JSON (" + std::string(e.what()) + ")");
  }
  if (!doc.is_object()) Fail("spec", "top level must be an object");

  CoherentSystem system(ParseComponents(doc));

  const bool has_points = doc.contains("minimal_nonfailure_points");
  const bool has_profit = doc.contains("profit");
  if (has_points == has_profit) {
    Fail("spec",
         "exactly one of \"minimal_nonfailure_points\" or \"profit\" is "
         "required");
  }

  std::optional<std::size_t> v;
  if (auto it = doc.find("deformation_v"); it != doc.end()) {
    const std::int64_t raw = Integer(*it, "deformation_v");
    if (raw < 1) Fail("deformation_v", "must be positive");
    v = static_cast<std::size_t>(raw);
  }

  TieBreak ties = TieBreak::kAscendingIndex;
  if (auto it = doc.find("deformation_ties"); it != doc.end()) {
    const std::string value = it->is_string() ? it->get<std::string>() : "";
    if (value == "descending") {
      ties = TieBreak::kDescendingIndex;
    } else if (value != "ascending") {
      Fail("deformation_ties", "expected \"ascending\" or \"descending\"");
    }
  }

  if (has_points) {
    MonomialIdeal ideal = ParsePoints(doc["minimal_nonfailure_points"], system);
    if (v && *v <= ideal.size()) {
      Fail("deformation_v", "must exceed the generator count " +
                                std::to_string(ideal.size()));
    }
    return {std::move(system), std::move(ideal), SystemSpec::Source::kPoints,
            std::nullopt, v, ties};
  }

  ProfitSpec profit = ParseProfit(doc["profit"], system.dimension());
  const auto levels = system.Levels();
  try {
    MonomialIdeal ideal = MinimalPointsFromProfit(profit, levels);
    if (v && *v <= ideal.size()) {
      Fail("deformation_v", "must exceed the generator count " +
                                std::to_string(ideal.size()));
    }
    return {std::move(system), std::move(ideal), SystemSpec::Source::kProfit,
            std::move(profit), v, ties};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidSpec) throw;
    const ErrorCode code = e.code() == ErrorCode::kUnreachableCutoff
                               ? ErrorCode::kUnreachableCutoff
                               : ErrorCode::kInvalidSpec;
    throw Error(code, std::string("profit.cutoff: ") + e.what());
  }
}

SystemSpec LoadSystemSpec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseSystemSpec(buf.str());
}

}  // namespace scarfrel
