// Command-line front end. Talks to the library exclusively through the C API.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scarfrel.h"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitInvalidSpec = 2;

int ExitCodeFor(scarfrel_status status) {
  switch (status) {
    case SCARFREL_E_INVALID_SPEC:
    case SCARFREL_E_UNREACHABLE_CUTOFF:
      return kExitInvalidSpec;
    default:
      return kExitRuntime;
  }
}

int Report(scarfrel_status status) {
  std::fprintf(stderr, "error: %s: %s\n", scarfrel_status_name(status),
               scarfrel_last_error());
  return ExitCodeFor(status);
}

int RunCommand(const std::string& command, const std::string& path,
               const scarfrel_run_options& opts) {
  scarfrel_spec* spec = nullptr;
  if (auto st = scarfrel_spec_load(path.c_str(), &spec); st != SCARFREL_OK) {
    return Report(st);
  }
  char* text = nullptr;
  const scarfrel_status st = scarfrel_run(spec, command.c_str(), &opts, &text);
  scarfrel_spec_destroy(spec);
  // The spec file already parsed, so an invalid argument here is a bad option.
  if (st == SCARFREL_E_INVALID_ARGUMENT) {
    Report(st);
    return kExitInvalidSpec;
  }
  if (st != SCARFREL_OK) return Report(st);
  std::fputs(text, stdout);
  scarfrel_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scarf-complex reliability identities and bounds for coherent "
               "multistate systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(scarfrel_version()));

  bool json = false;
  std::size_t v = 0;
  std::string ties;
  std::vector<std::size_t> depths;
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  std::string path;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"scarf", "list the (possibly deformed) Scarf complex"},
      {"reliability", "evaluate the reliability identity"},
      {"bounds", "tube bounds next to Bonferroni bounds"},
      {"oracle", "state-space enumeration reliability"},
      {"compare", "Scarf vs Taylor vs enumeration"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("spec", path, "system spec file (JSON)")->required();
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_option("--v", v, "deformation parameter (must exceed r)");
    sub->add_option("--ties", ties, "deformation tie order")
        ->check(CLI::IsMember({"ascending", "descending"}));
    if (std::string(c.name) == "bounds") {
      sub->add_option("--depth", depths, "truncation depths")->delimiter(',');
    }
  }
  auto* selftest = app.add_subcommand("selftest", "randomized self-check");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--cases", cases, "number of random systems");
  selftest->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalidSpec;
  }

  scarfrel_run_options opts{};
  opts.json = json ? 1 : 0;
  opts.deformation_v = v;
  opts.ties = ties.empty() ? 0 : (ties == "ascending" ? 1 : 2);
  opts.depths = depths.empty() ? nullptr : depths.data();
  opts.depth_count = depths.size();
  opts.seed = seed;
  opts.selftest_cases = cases;

  if (selftest->parsed()) {
    char* text = nullptr;
    int passed = 0;
    if (auto st = scarfrel_selftest(&opts, &text, &passed); st != SCARFREL_OK) {
      return Report(st);
    }
    std::fputs(text, stdout);
    scarfrel_string_free(text);
    return passed ? 0 : kExitRuntime;
  }
  for (const auto* sub : app.get_subcommands()) {
    return RunCommand(sub->get_name(), path, opts);
  }
  return kExitRuntime;
}
