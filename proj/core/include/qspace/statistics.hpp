#pragma once

// Microstate counting for the three classical counting regimes. Everything
// here is exact: big integers for counts, big rationals for probabilities.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "qspace/error.hpp"

namespace qspace::stats {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class CapExceeded : public Error {
 public:
  using Error::Error;
};

enum class StatisticsKind { MB, BE, FD };

// MB: data[particle] = state index (labels matter).
// BE/FD: data[state] = occupation count (no labels; FD counts are 0/1).
struct Microstate {
  StatisticsKind kind;
  std::vector<std::uint32_t> data;

  friend bool operator==(const Microstate& a, const Microstate& b) {
    return a.kind == b.kind && a.data == b.data;
  }
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// (N + C - 1)! / (N! (C - 1)!): the number of ways to distribute N
// interchangeable elements over C states. Requires states >= 1.
BigInt planck_weight(std::uint64_t particles, std::uint64_t states);

// MB: C^N. BE: planck_weight. FD: C choose N (0 once N exceeds C).
BigInt count_microstates(StatisticsKind kind, std::uint64_t particles, std::uint64_t states);

// All microstates in ascending lexicographic order (assignment words for MB,
// occupation vectors for BE/FD). Throws CapExceeded when the count is above
// `cap`.
std::vector<Microstate> enumerate_microstates(StatisticsKind kind, std::uint64_t particles,
                                              std::uint64_t states,
                                              std::uint64_t cap = kDefaultEnumerationCap);

// Each microstate paired with the exact uniform probability 1/count.
std::vector<std::pair<Microstate, BigRational>> equiprobability_table(
    StatisticsKind kind, std::uint64_t particles, std::uint64_t states,
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qspace::stats
