#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/root_datum.hpp"

namespace hecke {

enum class Status { Pass, Fail, Error };

std::string to_string(Status s);

/// Identifies the root datum a report was produced for.
struct DatumDescriptor {
  std::string type;
  int rank = 0;
  IntMatrix cartan;
  bool operator==(const DatumDescriptor&) const = default;
};

DatumDescriptor describe(const RootDatum& d);

/// Inputs shared by every check, plus battery sizes.
struct CheckOptions {
  int order = 6;
  int guard = 2;
  std::uint64_t seed = 0;
  int relation_samples = 100;
  int morphism_samples = 50;
  int diagram_samples = 20;
  int module_samples = 20;
};

/// Outcome of one named check.
///
/// A failing check records the first failing case: its position in the
/// battery (witness_case) and a rendering of the nonzero difference
/// (witness). An erroring check stores the exception message in witness.
struct CheckReport {
  std::string name;
  Status status = Status::Pass;
  DatumDescriptor datum;
  int order = 0;
  int guard = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> witness;
  std::optional<std::size_t> witness_case;
  double elapsed_ms = 0.0;
};

/// Braid, quadratic and Bernstein relations of the affine Hecke algebra
/// (exact), and the corresponding relations of the graded algebra.
CheckReport check_presentation(const RootDatum& d, const CheckOptions& opts);
/// Relation images under both Lusztig maps vanish mod degree > order; the
/// K-side maps and the Fourier map are multiplicative and involutive.
CheckReport check_morphisms(const RootDatum& d, const CheckOptions& opts);
/// Both routes around the square agree on generators and sampled products.
CheckReport check_diagram(const RootDatum& d, const CheckOptions& opts);
/// Standalone graded identity equivalent to the square on 1 + T_{s_i}.
CheckReport check_display_identity(const RootDatum& d, const CheckOptions& opts, int i);
/// Antispherical action formulas and the module transport.
CheckReport check_modules(const RootDatum& d, const CheckOptions& opts);

enum class Suite { Presentation, Morphisms, Diagram, Display, Modules, All };

std::optional<Suite> parse_suite(const std::string& s);

/// Runs the selected suites and returns reports sorted by name. Distinct
/// checks may run concurrently when `concurrent` is set; the result does not
/// depend on it.
std::vector<CheckReport> run_suites(const RootDatum& d, const std::vector<Suite>& suites,
                                    const CheckOptions& opts, bool concurrent = false);

/// Report artifact: run parameters plus the sorted check reports.
struct RunReport {
  DatumDescriptor datum;
  int order = 0;
  int guard = 0;
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;

  bool all_passed() const;
};

inline constexpr const char* kArtifactVersion = "1.0.0";

/// JSON object {artifact_version, datum, order, guard, seed, checks}. With
/// timing disabled every elapsed_ms is written as 0, which makes the output
/// a pure function of the run parameters.
std::string to_json(const RunReport& r, bool timing = true);
std::string to_text(const RunReport& r, bool timing = true);

}  // namespace hecke
