#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ulrich/presentation.hpp"

namespace ulrich {

enum class Level { Basic, Full };

std::string to_string(Level level);
/// "basic" or "full"; throws ParameterError otherwise.
Level parse_level(const std::string& text);

struct CertifyOptions {
  Level level = Level::Basic;
  /// Seeds the generic-rank and local-freeness samplers.
  std::uint64_t seed = 0;
  int rank_trials = 16;
  int freeness_k_max = 2;
  int freeness_trials_per_k = 16;
  /// The ACM window at level full is t in [-alpha - window_below, window_above].
  int window_below = 3;
  int window_above = 3;
  unsigned workers = 1;
};

struct VanishingCheck {
  int t = 0;
  int m = 0;
  std::int64_t h1 = 0;
};

/// One exact comparison of the full profile.
struct CheckItem {
  std::string group;
  std::string check;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  /// Short description of the claim being tested.
  std::string ref;

  bool passed() const { return expected == computed; }
};

struct FullProfile {
  int window_lo = 0;
  int window_hi = 0;
  std::vector<CheckItem> items;
  /// Degree-0 module endomorphisms, an upper bound for h^0(End E).
  std::int64_t module_hom_self = 0;
  /// False when some long exact sequence step relied on a vanishing that
  /// failed, so a computed value may be only a bound.
  bool determined = true;

  bool passed() const;
};

struct UlrichCertificate {
  std::string presentation_hash;
  std::uint32_t p = 0;
  int d = 0;
  int r = 0;
  int a = 0;
  int b = 0;
  int alpha = 0;
  std::uint64_t seed = 0;
  Level level = Level::Basic;

  GenericRankVerdict generic_rank;
  std::vector<VanishingCheck> vanishings;
  std::optional<FullProfile> full;
  FreenessVerdict freeness;
  int freeness_k_max = 0;

  std::map<std::string, double> timings_ms;

  /// Generic rank a and every h^1(E(-td)) = 0, t = 2..alpha.
  bool valid() const;
  /// valid() and, at level full, every profile item.
  bool passed() const;
  /// Empty when valid; otherwise "generic-rank" or the first failing
  /// vanishing, e.g. "h1(E(-3d))".
  std::string failure_reason() const;
  std::vector<CheckItem> discrepancies() const;
};

/// Thm-style finite certification at level basic, plus the full profile of
/// dimension claims at level full. Failures are recorded, never thrown.
UlrichCertificate certify(const UlrichPresentation& p, const CertifyOptions& options = {});

/// "ulrich-certificate/1". Timings are emitted only on request, so the
/// default output is a pure function of the inputs.
std::string to_json(const UlrichCertificate& cert, bool include_timings = false);

/// JSON list of {check, expected, computed, paper_ref} for failed items.
std::string discrepancy_report_json(const UlrichCertificate& cert);

}  // namespace ulrich
