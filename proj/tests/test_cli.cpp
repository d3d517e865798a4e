#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int exit_code;
  std::string out;
};

Result Cli(const std::string& args) {
  const std::string cmd = std::string(SCARFREL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Data(const char* name) {
  return std::string(SCARFREL_TEST_DATA) + "/" + name;
}

bool Has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: scarf") {
  const Result ex4 = Cli("scarf " + Data("example4.json"));
  CHECK(ex4.exit_code == 0);
  CHECK(Has(ex4.out, "summary: 103 faces, 6 facets"));
  CHECK(Has(ex4.out, "deformation: applied (v=10"));
  CHECK(Has(ex4.out, "{1,2,7} (1,1,0,1,1,1,1,1)"));
  CHECK(Has(Cli("scarf " + Data("example3.json")).out, "generic: yes"));
  CHECK(Has(Cli("scarf " + Data("example5.json")).out, "summary: 19 faces"));
  CHECK(Has(Cli("scarf --ties ascending " + Data("example5.json")).out,
            "summary: 15 faces"));
  CHECK(Has(Cli("scarf " + Data("single_point.json")).out, "summary: 1 faces"));
  const Result again = Cli("scarf " + Data("example4.json"));
  CHECK(again.out == ex4.out);
  CHECK(Has(Cli("scarf --v 50 " + Data("example4.json")).out, "v=50"));
  CHECK(Cli("scarf --v 3 " + Data("example4.json")).exit_code == 2);
}

TEST_CASE("cli: reports") {
  const Result rel = Cli("reliability " + Data("multistate28.json"));
  CHECK(rel.exit_code == 0);
  CHECK(Has(rel.out, "31 terms (complete formula: 511)"));
  CHECK(Has(rel.out, "discrepancy: 0"));
  const Result json = Cli("reliability --json " + Data("multistate28.json"));
  CHECK(json.exit_code == 0);
  CHECK(json.out.front() == '{');
  CHECK(Has(json.out, "\"baseline_term_count\": 511"));
  CHECK(Has(json.out, "\"faces\""));
  const Result bounds = Cli("bounds --depth 1 " + Data("example4.json"));
  CHECK(bounds.exit_code == 0);
  CHECK(Has(bounds.out, "equal"));
  CHECK(Cli("bounds --depth 1,3 " + Data("example4.json")).exit_code == 0);
  CHECK(Cli("bounds --depth 12 " + Data("example4.json")).exit_code == 2);
  CHECK(Has(Cli("oracle " + Data("example3.json")).out, "states: 16"));
  CHECK(Has(Cli("compare " + Data("example3.json")).out, "taylor:"));
  const Result st = Cli("selftest --seed 3 --cases 30");
  CHECK(st.exit_code == 0);
  CHECK(Has(st.out, "PASS"));
}

TEST_CASE("cli: failures") {
  const Result syntax = Cli("scarf " + Data("invalid_syntax.json"));
  CHECK(syntax.exit_code == 2);
  CHECK(Has(syntax.out, "line 6"));
  CHECK(Cli("scarf " + Data("invalid_probs.json")).exit_code == 2);
  CHECK(Cli("scarf " + Data("unreachable.json")).exit_code == 2);
  CHECK(Cli("scarf " + Data("missing.json")).exit_code != 0);
  CHECK(Cli("frobnicate").exit_code != 0);
  const Result profit = Cli("scarf " + Data("multistate28_profit.json"));
  CHECK(profit.exit_code == 0);
  CHECK(Has(profit.out, "generators: 11"));
}
