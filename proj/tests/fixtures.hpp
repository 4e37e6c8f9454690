#pragma once

#include <map>
#include <tuple>

#include "ulrich/search.hpp"

// A certified presentation for (d, r), found by the seeded search and cached
// per test binary.
inline const ulrich::UlrichPresentation& certified(int d, int r, std::uint64_t seed = 0) {
  static std::map<std::tuple<int, int, std::uint64_t>, ulrich::UlrichPresentation> cache;
  const auto key = std::tuple{d, r, seed};
  auto it = cache.find(key);
  if (it == cache.end()) {
    ulrich::SearchOptions opts;
    opts.master_seed = seed;
    const auto report = ulrich::search(d, r, opts);
    if (!report.presentation) throw std::runtime_error("no certified presentation found");
    it = cache.emplace(key, *report.presentation).first;
  }
  return it->second;
}
