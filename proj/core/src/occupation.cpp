#include "qspace/occupation.hpp"

#include <algorithm>

namespace qspace::fock {

LevelBasis::LevelBasis(std::vector<Level> levels) : levels_(std::move(levels)) {
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (levels_[i].index <= levels_[i - 1].index || levels_[i].value <= levels_[i - 1].value) {
      throw InvalidOccupation("level basis requires strictly increasing indices and eigenvalues");
    }
  }
}

LevelBasis LevelBasis::uniform(std::size_t count) {
  std::vector<Level> levels;
  levels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    levels.push_back(Level{static_cast<LevelIndex>(i), static_cast<double>(i)});
  }
  return LevelBasis(std::move(levels));
}

bool LevelBasis::contains(LevelIndex index) const {
  return std::any_of(levels_.begin(), levels_.end(),
                     [index](const Level& l) { return l.index == index; });
}

OccupationMap OccupationMap::from_counts(
    std::initializer_list<std::pair<LevelIndex, std::uint32_t>> counts) {
  OccupationMap out;
  for (const auto& [index, count] : counts) {
    if (count == 0) throw InvalidOccupation("occupation counts must be >= 1");
    out.support_[index] += count;
  }
  return out;
}

OccupationMap OccupationMap::from_counts(const std::map<LevelIndex, std::uint32_t>& counts) {
  OccupationMap out;
  for (const auto& [index, count] : counts) {
    if (count == 0) throw InvalidOccupation("occupation counts must be >= 1");
    out.support_[index] = count;
  }
  return out;
}

OccupationMap OccupationMap::from_word(const std::vector<LevelIndex>& word) {
  OccupationMap out;
  for (LevelIndex index : word) ++out.support_[index];
  return out;
}

std::vector<LevelIndex> OccupationMap::word() const {
  std::vector<LevelIndex> out;
  out.reserve(total());
  for (const auto& [index, count] : support_) {
    out.insert(out.end(), count, index);
  }
  return out;  // ascending: map iteration order
}

std::uint32_t OccupationMap::count(LevelIndex index) const {
  auto it = support_.find(index);
  return it == support_.end() ? 0 : it->second;
}

std::uint32_t OccupationMap::total() const {
  std::uint32_t n = 0;
  for (const auto& [index, count] : support_) n += count;
  return n;
}

bool OccupationMap::has_repeat() const {
  return std::any_of(support_.begin(), support_.end(),
                     [](const auto& entry) { return entry.second >= 2; });
}

std::uint32_t OccupationMap::occupied_below(LevelIndex index) const {
  std::uint32_t n = 0;
  for (const auto& [level, count] : support_) {
    if (level >= index) break;
    n += count;
  }
  return n;
}

OccupationMap OccupationMap::with_increment(LevelIndex index) const {
  OccupationMap out = *this;
  ++out.support_[index];
  return out;
}

OccupationMap OccupationMap::with_decrement(LevelIndex index) const {
  OccupationMap out = *this;
  auto it = out.support_.find(index);
  if (it == out.support_.end()) {
    throw InvalidOccupation("with_decrement: level " + std::to_string(index) + " is unoccupied");
  }
  if (--it->second == 0) out.support_.erase(it);
  return out;
}

}  // namespace qspace::fock
