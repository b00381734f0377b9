#include "qspace/statistics.hpp"

#include <stdexcept>

namespace qspace::stats {

namespace {

BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

void require_states(std::uint64_t states) {
  if (states == 0) throw std::invalid_argument("state count must be >= 1");
}

// Occupation vectors over `states` slots summing to `remaining`, ascending
// lexicographic, FD restricted to 0/1 occupations.
void emit_occupations(StatisticsKind kind, std::uint64_t states, std::uint64_t remaining,
                      std::vector<std::uint32_t>& prefix, std::vector<Microstate>& out) {
  if (prefix.size() == states) {
    if (remaining == 0) out.push_back(Microstate{kind, prefix});
    return;
  }
  std::uint64_t limit = (kind == StatisticsKind::FD) ? std::min<std::uint64_t>(1, remaining)
                                                     : remaining;
  std::uint64_t slots_left = states - prefix.size() - 1;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    std::uint64_t rest = remaining - n;
    // Prune branches whose tail cannot absorb the rest.
    std::uint64_t tail_capacity =
        (kind == StatisticsKind::FD) ? slots_left : (slots_left > 0 ? rest : 0);
    if (rest > tail_capacity) continue;
    prefix.push_back(static_cast<std::uint32_t>(n));
    emit_occupations(kind, states, rest, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BigInt planck_weight(std::uint64_t particles, std::uint64_t states) {
  require_states(states);
  return factorial(particles + states - 1) / (factorial(particles) * factorial(states - 1));
}

BigInt count_microstates(StatisticsKind kind, std::uint64_t particles, std::uint64_t states) {
  require_states(states);
  switch (kind) {
    case StatisticsKind::MB:
      return boost::multiprecision::pow(BigInt(states), static_cast<unsigned>(particles));
    case StatisticsKind::BE:
      return planck_weight(particles, states);
    case StatisticsKind::FD:
      return binomial(states, particles);
  }
  throw std::logic_error("unreachable");
}

std::vector<Microstate> enumerate_microstates(StatisticsKind kind, std::uint64_t particles,
                                              std::uint64_t states, std::uint64_t cap) {
  require_states(states);
  BigInt count = count_microstates(kind, particles, states);
  if (count > cap) {
    throw CapExceeded("enumeration of " + count.str() + " microstates exceeds cap of " +
                      std::to_string(cap));
  }
  std::vector<Microstate> out;
  if (kind == StatisticsKind::MB) {
    // Assignment words particle -> state, counted up like base-C numerals.
    std::vector<std::uint32_t> word(particles, 0);
    while (true) {
      out.push_back(Microstate{kind, word});
      std::size_t pos = particles;
      while (pos > 0 && word[pos - 1] + 1 == states) word[--pos] = 0;
      if (pos == 0) break;
      ++word[pos - 1];
    }
  } else {
    std::vector<std::uint32_t> prefix;
    emit_occupations(kind, states, particles, prefix, out);
  }
  return out;
}

std::vector<std::pair<Microstate, BigRational>> equiprobability_table(StatisticsKind kind,
                                                                      std::uint64_t particles,
                                                                      std::uint64_t states,
                                                                      std::uint64_t cap) {
  auto microstates = enumerate_microstates(kind, particles, states, cap);
  std::vector<std::pair<Microstate, BigRational>> out;
  if (microstates.empty()) return out;
  BigRational probability(1, microstates.size());
  out.reserve(microstates.size());
  for (auto& ms : microstates) out.emplace_back(std::move(ms), probability);
  return out;
}

}  // namespace qspace::stats
