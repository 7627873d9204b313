#pragma once

#include <cstddef>
#include <optional>

#include "hecke/verifier.hpp"

// Deliberate corruptions used by the negative-control tests. Not installed.

namespace hecke::detail {

struct FaultPlan {
  /// Expected side of the Bernstein relation gets the wrong sign.
  bool flip_relation_sign = false;
  /// Koszul route skips the e_B conjugation.
  bool drop_eb_conjugation = false;
  /// t_s acts on the graded base point by +1.
  bool sign_module_plus = false;
  /// Lusztig twists use alpha-dot - 2r in place of alpha-dot + 2r.
  bool corrupt_twist = false;
  /// rho-dot enters the display identity with the wrong sign.
  bool flip_rho_sign = false;
};

/// With only_case set, evaluates just that case of the battery (sampling
/// still runs so the case sees the same inputs). Used to re-evaluate a witness.
CheckReport check_presentation(const RootDatum& d, const CheckOptions& opts,
                               const FaultPlan& faults,
                               std::optional<std::size_t> only_case = std::nullopt);
CheckReport check_morphisms(const RootDatum& d, const CheckOptions& opts,
                            const FaultPlan& faults,
                            std::optional<std::size_t> only_case = std::nullopt);
CheckReport check_diagram(const RootDatum& d, const CheckOptions& opts, const FaultPlan& faults,
                          std::optional<std::size_t> only_case = std::nullopt);
CheckReport check_display_identity(const RootDatum& d, const CheckOptions& opts, int i,
                                   const FaultPlan& faults,
                                   std::optional<std::size_t> only_case = std::nullopt);
CheckReport check_modules(const RootDatum& d, const CheckOptions& opts, const FaultPlan& faults,
                          std::optional<std::size_t> only_case = std::nullopt);

}  // namespace hecke::detail
