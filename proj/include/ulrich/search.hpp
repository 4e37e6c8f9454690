#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ulrich/certify.hpp"
#include "ulrich/presentation.hpp"

namespace ulrich {

struct SearchOptions {
  int trials = 5;
  std::uint64_t master_seed = 0;
  std::uint32_t p = kDefaultPrime;
  /// Trials run in batches of this size; results do not depend on it.
  unsigned workers = 1;
};

struct TrialOutcome {
  int index = 0;  // 1-based
  std::string presentation_hash;
  /// Empty on success.
  std::string failure;
  double ms = 0.0;
};

struct SearchReport {
  int d = 0;
  int r = 0;
  int a = 0;
  int b = 0;
  int alpha = 0;
  std::uint32_t p = 0;
  std::uint64_t master_seed = 0;
  int trials_requested = 0;
  /// Trials up to and including the first success.
  std::vector<TrialOutcome> trials;
  std::map<std::string, int> failure_histogram;
  std::optional<int> success_index;
  std::optional<UlrichPresentation> presentation;
  std::optional<UlrichCertificate> certificate;

  int trials_attempted() const { return static_cast<int>(trials.size()); }
};

/// Seed for the presentation drawn at trial `index` (1-based).
std::uint64_t trial_seed(std::uint64_t master_seed, int index);

/// Draws trial i from its own generator seeded by trial_seed(master, i),
/// certifies at level basic and stops at the first success. Shape errors
/// propagate before any trial runs.
SearchReport search(int d, int r, const SearchOptions& options = {});

/// Canonical file name of a search result, e.g. d7_r3_p32003_s0.json.
std::string presentation_file_name(int d, int r, std::uint32_t p, std::uint64_t seed);

struct SweepEntry {
  SearchReport report;
  /// File name (relative to the output directory) of the saved success.
  std::string presentation_file;
};

struct SweepReport {
  std::uint32_t p = 0;
  int r = 0;
  std::uint64_t master_seed = 0;
  int trials_per_d = 0;
  std::vector<SweepEntry> results;
  /// Degrees not attempted because the time budget ran out.
  std::vector<int> skipped;

  bool partial() const { return !skipped.empty(); }
  int successes() const;
};

struct SweepOptions {
  SearchOptions search;
  /// Seconds; 0 disables the budget. Checked before each degree.
  double time_budget = 0.0;
  /// When set, successful presentations are saved here.
  std::optional<std::filesystem::path> out_dir;
};

/// Searches every degree in order. Shape errors are checked for the whole
/// list before any search runs.
SweepReport sweep(const std::vector<int>& d_list, int r, const SweepOptions& options);

/// "ulrich-sweep/1". Per-trial timings only on request.
std::string to_json(const SweepReport& report, bool include_timings = false);
std::string to_text(const SweepReport& report, bool include_timings = false);
std::string to_json(const SearchReport& report, bool include_timings = false);
std::string to_text(const SearchReport& report, bool include_timings = false);

}  // namespace ulrich
