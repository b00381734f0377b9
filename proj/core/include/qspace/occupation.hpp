#pragma once

// Occupation-number bookkeeping: energy levels, a canonically ordered level
// basis, and finite-support occupation maps.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "qspace/error.hpp"

namespace qspace::fock {

class InvalidOccupation : public Error {
 public:
  using Error::Error;
};
class UnknownLevel : public Error {
 public:
  using Error::Error;
};

enum class Statistics { boson, fermion };

using LevelIndex = std::uint32_t;

// One eigenvalue of the observable whose spectrum defines the level set.
struct Level {
  LevelIndex index;
  double value;
};

// A finite list of levels whose indices and eigenvalues are both strictly
// increasing, so ordering occupation words by index agrees with the
// canonical ordering of the eigenvalues.
class LevelBasis {
 public:
  explicit LevelBasis(std::vector<Level> levels);

  // Levels 1..count with value equal to the index.
  static LevelBasis uniform(std::size_t count);

  bool contains(LevelIndex index) const;
  const std::vector<Level>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }

 private:
  std::vector<Level> levels_;
};

// Finite-support map level index -> occupation count >= 1. Unlisted levels
// are unoccupied. The expanded word (each index repeated count times) comes
// out sorted ascending, which is the canonical index order.
class OccupationMap {
 public:
  OccupationMap() = default;  // vacuum

  // Throws InvalidOccupation on a zero count.
  static OccupationMap from_counts(
      std::initializer_list<std::pair<LevelIndex, std::uint32_t>> counts);
  static OccupationMap from_counts(const std::map<LevelIndex, std::uint32_t>& counts);
  static OccupationMap from_word(const std::vector<LevelIndex>& word);

  const std::map<LevelIndex, std::uint32_t>& support() const { return support_; }
  std::vector<LevelIndex> word() const;

  std::uint32_t count(LevelIndex index) const;
  std::uint32_t total() const;
  bool empty() const { return support_.empty(); }
  // True when some level holds two or more quanta.
  bool has_repeat() const;
  // Occupied levels strictly below `index`, counted with multiplicity.
  std::uint32_t occupied_below(LevelIndex index) const;

  OccupationMap with_increment(LevelIndex index) const;
  // Requires the level to be occupied.
  OccupationMap with_decrement(LevelIndex index) const;

  friend bool operator==(const OccupationMap& a, const OccupationMap& b) {
    return a.support_ == b.support_;
  }
  friend bool operator<(const OccupationMap& a, const OccupationMap& b) {
    return a.support_ < b.support_;
  }

 private:
  std::map<LevelIndex, std::uint32_t> support_;
};

}  // namespace qspace::fock
