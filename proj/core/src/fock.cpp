#include "qspace/fock.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace qspace::fock {

namespace {

using Word = std::vector<LevelIndex>;
using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix delta_matrix(const Word& a, const Word& b) {
  IntMatrix m(a.size(), std::vector<long long>(b.size(), 0));
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      m[j][k] = (a[j] == b[k]) ? 1 : 0;
    }
  }
  return m;
}

// Permanent by recursive column elimination with a used-column mask.
long long permanent_masked(const IntMatrix& m, std::size_t row, std::uint32_t used) {
  const std::size_t n = m.size();
  if (row == n) return 1;
  long long acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if ((used >> j) & 1u) continue;
    if (m[row][j] == 0) continue;
    acc += m[row][j] * permanent_masked(m, row + 1, used | (1u << j));
  }
  return acc;
}

long long permanent(const IntMatrix& m) { return permanent_masked(m, 0, 0); }

// Fraction-free (Bareiss) elimination; every division is exact on integer
// input.
long long determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int prepend_sign(const OccupationMap& occ, LevelIndex alpha) {
  return occ.occupied_below(alpha) % 2 == 0 ? 1 : -1;
}

}  // namespace

Complex FockVector::coefficient(const OccupationMap& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

FockVector& FockVector::accumulate(const OccupationMap& occ, Complex amount) {
  auto [it, inserted] = terms_.try_emplace(occ, amount);
  if (!inserted) it->second += amount;
  if (std::abs(it->second) <= kCoefficientEpsilon) terms_.erase(it);
  return *this;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [occ, coeff] : b.terms_) out.accumulate(occ, coeff);
  return out;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  FockVector out = a;
  for (const auto& [occ, coeff] : b.terms_) out.accumulate(occ, -coeff);
  return out;
}

FockVector operator*(Complex scalar, const FockVector& v) {
  FockVector out;
  for (const auto& [occ, coeff] : v.terms()) out.accumulate(occ, scalar * coeff);
  return out;
}

FockVector basis_ket(const OccupationMap& occ) {
  FockVector out;
  out.accumulate(occ, Complex(1.0, 0.0));
  return out;
}

FockVector add(const FockVector& v, const FockVector& w) { return v + w; }

FockVector scale(Complex scalar, const FockVector& v) { return scalar * v; }

double max_coefficient_distance(const FockVector& v, const FockVector& w) {
  double worst = 0.0;
  for (const auto& [occ, coeff] : v.terms()) {
    worst = std::max(worst, std::abs(coeff - w.coefficient(occ)));
  }
  for (const auto& [occ, coeff] : w.terms()) {
    worst = std::max(worst, std::abs(coeff - v.coefficient(occ)));
  }
  return worst;
}

long long basis_bracket(Statistics kind, const OccupationMap& f, const OccupationMap& g) {
  Word wf = f.word();
  Word wg = g.word();
  if (wf.size() != wg.size()) return 0;  // delta_nm
  if (wf.size() > 20) {
    throw Error("basis bracket limited to words of length 20");
  }
  IntMatrix m = delta_matrix(wf, wg);
  return kind == Statistics::boson ? permanent(m) : determinant(std::move(m));
}

Complex inner(Statistics kind, const FockVector& v, const FockVector& w) {
  Complex acc(0.0, 0.0);
  for (const auto& [f, lambda] : v.terms()) {
    for (const auto& [g, mu] : w.terms()) {
      long long bracket = basis_bracket(kind, f, g);
      if (bracket != 0) acc += std::conj(lambda) * mu * static_cast<double>(bracket);
    }
  }
  return acc;
}

double norm(Statistics kind, const FockVector& v) {
  Complex self = inner(kind, v, v);
  if (self.real() < -kCheckTolerance || std::abs(self.imag()) > kCheckTolerance) {
    throw NegativeNorm("self inner product is not a nonnegative real");
  }
  return std::sqrt(std::max(0.0, self.real()));
}

bool is_null_norm(Statistics kind, const FockVector& v) {
  return std::abs(inner(kind, v, v)) <= kCheckTolerance;
}

FockVector normalized_ket(Statistics kind, const OccupationMap& occ) {
  if (kind == Statistics::fermion && occ.has_repeat()) {
    throw NullNormState("a fermionic ket with a repeated level has null norm");
  }
  long long self = basis_bracket(kind, occ, occ);
  return scale(Complex(1.0 / std::sqrt(static_cast<double>(self)), 0.0), basis_ket(occ));
}

std::optional<CanonicalWord> canonical_fermion_word(const std::vector<LevelIndex>& word) {
  std::vector<LevelIndex> sorted = word;
  int sign = 1;
  // Insertion sort; each adjacent swap flips the parity.
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j] < sorted[j - 1]; --j) {
      std::swap(sorted[j], sorted[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) return std::nullopt;
  }
  return CanonicalWord{sign, OccupationMap::from_word(sorted)};
}

FockVector ket_from_word(Statistics kind, const std::vector<LevelIndex>& word) {
  if (kind == Statistics::boson) return basis_ket(OccupationMap::from_word(word));
  if (auto canonical = canonical_fermion_word(word)) {
    return scale(Complex(static_cast<double>(canonical->sign), 0.0),
                 basis_ket(canonical->occ));
  }
  return basis_ket(OccupationMap::from_word(word));  // raw null-norm ket
}

FockVector create(Statistics kind, const LevelBasis& basis, LevelIndex alpha,
                  const FockVector& v) {
  if (!basis.contains(alpha)) {
    throw UnknownLevel("create: level " + std::to_string(alpha) + " is not in the basis");
  }
  FockVector out;
  for (const auto& [occ, coeff] : v.terms()) {
    if (kind == Statistics::boson) {
      double factor = std::sqrt(static_cast<double>(occ.count(alpha)) + 1.0);
      out.accumulate(occ.with_increment(alpha), coeff * factor);
    } else {
      out.accumulate(occ.with_increment(alpha),
                     coeff * static_cast<double>(prepend_sign(occ, alpha)));
    }
  }
  return out;
}

FockVector annihilate(Statistics kind, const LevelBasis& basis, LevelIndex alpha,
                      const FockVector& v) {
  if (!basis.contains(alpha)) {
    throw UnknownLevel("annihilate: level " + std::to_string(alpha) + " is not in the basis");
  }
  FockVector out;
  for (const auto& [occ, coeff] : v.terms()) {
    std::uint32_t n = occ.count(alpha);
    if (n == 0) continue;  // empty level: contributes the zero vector
    if (kind == Statistics::boson) {
      out.accumulate(occ.with_decrement(alpha), coeff * std::sqrt(static_cast<double>(n)));
    } else {
      // A doubly occupied level is already in the null class and must stay
      // there; removing one quantum would surface a legitimate state.
      if (n >= 2) continue;
      out.accumulate(occ.with_decrement(alpha),
                     coeff * static_cast<double>(prepend_sign(occ, alpha)));
    }
  }
  return out;
}

FockVector fermion_canonical_form(const FockVector& v) {
  FockVector out;
  for (const auto& [occ, coeff] : v.terms()) {
    if (!occ.has_repeat()) out.accumulate(occ, coeff);
  }
  return out;
}

FockVector commutator_residual(Statistics kind, const LevelBasis& basis, LevelIndex alpha,
                               LevelIndex beta, const FockVector& v) {
  FockVector ac = annihilate(kind, basis, alpha, create(kind, basis, beta, v));
  FockVector ca = create(kind, basis, beta, annihilate(kind, basis, alpha, v));
  FockVector residual = (kind == Statistics::boson) ? ac - ca : ac + ca;
  if (alpha == beta) residual = residual - v;
  return kind == Statistics::boson ? residual : fermion_canonical_form(residual);
}

bool similar(const FockVector& v, const FockVector& w, double tolerance) {
  return max_coefficient_distance(fermion_canonical_form(v), fermion_canonical_form(w)) <=
         tolerance;
}

qset::Element level_argument(LevelIndex index) {
  return qset::Element{qset::AtomKind::M(std::to_string(index))};
}

OccupationMap from_quasi_function(const qset::QuasiFunction& f, const LevelBasis& basis) {
  std::map<LevelIndex, std::uint32_t> counts;
  for (const auto& [argument, value] : f.pairs()) {
    const auto* atom = std::get_if<qset::AtomKind>(&argument);
    if (atom == nullptr || !atom->is_classical()) {
      throw qset::InvalidQuasiFunction("arguments must be classical level atoms");
    }
    LevelIndex index = 0;
    const std::string& label = atom->id();
    auto [end, err] = std::from_chars(label.data(), label.data() + label.size(), index);
    if (err != std::errc() || end != label.data() + label.size()) {
      throw qset::InvalidQuasiFunction("level atom '" + label + "' does not name an index");
    }
    if (!basis.contains(index)) {
      throw UnknownLevel("quasi-function argument names level " + label +
                         ", which is not in the basis");
    }
    const auto* image = std::get_if<qset::QSet>(&value);
    if (image == nullptr) {
      throw qset::InvalidQuasiFunction("images must be q-sets");
    }
    if (image->empty()) continue;  // occupation number zero
    if (!image->classical_part().empty() || image->m_part().size() != 1) {
      throw NotPure("image of level " + label + " is not a pure q-set");
    }
    counts[index] = static_cast<std::uint32_t>(image->qcard());
  }
  return OccupationMap::from_counts(counts);
}

}  // namespace qspace::fock
