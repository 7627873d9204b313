// hecke-verify: run verification suites for a root datum and write a report.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
// errors, invalid Cartan data, or a check that raised an error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hecke/errors.hpp"
#include "hecke/root_datum.hpp"
#include "hecke/verifier.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify affine and graded Hecke algebra identities"};

  std::string type;
  int rank = 0;
  std::string cartan_file;
  hecke::CheckOptions opts;
  std::string suite = "all";
  std::string format = "json";
  std::string out_path;
  bool no_timing = false;

  auto* type_opt = app.add_option("--type", type, "Cartan type letter (A, B, C, D, G, F)");
  auto* rank_opt = app.add_option("--rank", rank, "Rank for --type")->check(CLI::PositiveNumber);
  auto* file_opt = app.add_option("--cartan-file", cartan_file,
                                  "File holding n followed by an n x n Cartan matrix");
  type_opt->needs(rank_opt)->excludes(file_opt);
  rank_opt->needs(type_opt);
  app.add_option("--order", opts.order, "Truncation order N")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--guard", opts.guard, "Extra working degrees")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--suite", suite, "Suite to run")
      ->capture_default_str()
      ->check(CLI::IsMember({"presentation", "morphisms", "diagram", "display", "modules", "all"}));
  app.add_option("--seed", opts.seed, "Sampling seed")->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for byte-stable reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (type.empty() && cartan_file.empty()) {
    std::cerr << "error: one of --type/--rank or --cartan-file is required\n";
    return kExitUsage;
  }

  std::optional<hecke::RootDatum> datum;
  try {
    if (!cartan_file.empty()) {
      datum.emplace(hecke::read_cartan_file(cartan_file));
    } else {
      if (type.size() != 1) throw hecke::InvalidCartan("type must be a single letter");
      datum.emplace(hecke::root_datum_of_type(type[0], rank));
    }
  } catch (const hecke::InvalidCartan& e) {
    std::cerr << "error: InvalidCartan: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hecke::WeylTooLarge& e) {
    std::cerr << "error: WeylTooLarge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  hecke::RunReport report;
  report.datum = hecke::describe(*datum);
  report.order = opts.order;
  report.guard = opts.guard;
  report.seed = opts.seed;
  report.checks = hecke::run_suites(*datum, {*hecke::parse_suite(suite)}, opts);

  const bool timing = !no_timing;
  const std::string text =
      format == "json" ? hecke::to_json(report, timing) : hecke::to_text(report, timing);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    out << text;
  }

  bool failed = false;
  for (const auto& c : report.checks) {
    if (c.status == hecke::Status::Error) return kExitUsage;
    failed = failed || c.status == hecke::Status::Fail;
  }
  return failed ? kExitFail : kExitPass;
}
