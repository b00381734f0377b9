#include "qspace/labeled.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qspace::labeled {

LabeledVector LabeledVector::basis(Assignment assignment) {
  LabeledVector out;
  out.accumulate(assignment, Complex(1.0, 0.0));
  return out;
}

Complex LabeledVector::coefficient(const Assignment& assignment) const {
  auto it = terms_.find(assignment);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

std::size_t LabeledVector::particle_count() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

LabeledVector& LabeledVector::accumulate(const Assignment& assignment, Complex amount) {
  if (!terms_.empty() && assignment.size() != particle_count()) {
    throw SizeMismatch("labeled vector terms must share one particle count");
  }
  auto [it, inserted] = terms_.try_emplace(assignment, amount);
  if (!inserted) it->second += amount;
  if (std::abs(it->second) <= kCoefficientEpsilon) terms_.erase(it);
  return *this;
}

LabeledVector operator+(const LabeledVector& a, const LabeledVector& b) {
  LabeledVector out = a;
  for (const auto& [assignment, coeff] : b.terms_) out.accumulate(assignment, coeff);
  return out;
}

LabeledVector operator-(const LabeledVector& a, const LabeledVector& b) {
  LabeledVector out = a;
  for (const auto& [assignment, coeff] : b.terms_) out.accumulate(assignment, -coeff);
  return out;
}

LabeledVector operator*(Complex scalar, const LabeledVector& v) {
  LabeledVector out;
  for (const auto& [assignment, coeff] : v.terms()) out.accumulate(assignment, scalar * coeff);
  return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int permutation_parity(const Permutation& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

LabeledVector symmetrize(const Assignment& word, Symmetry symmetry) {
  LabeledVector out;
  for (const Permutation& perm : all_permutations(word.size())) {
    Assignment image(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) image[k] = word[perm[k]];
    double sign =
        (symmetry == Symmetry::antisymmetric) ? permutation_parity(perm) : 1;
    out.accumulate(image, Complex(sign, 0.0));
  }
  return out;
}

Complex labeled_inner(const LabeledVector& v, const LabeledVector& w, bool strict) {
  if (!v.is_zero() && !w.is_zero() && v.particle_count() != w.particle_count()) {
    if (strict) {
      throw DimensionMismatch("inner product of " + std::to_string(v.particle_count()) +
                              "- and " + std::to_string(w.particle_count()) +
                              "-particle vectors");
    }
    return Complex(0.0, 0.0);
  }
  Complex acc(0.0, 0.0);
  for (const auto& [assignment, coeff] : v.terms()) {
    acc += std::conj(coeff) * w.coefficient(assignment);
  }
  return acc;
}

LabeledVector apply_permutation(const Permutation& perm, const LabeledVector& v) {
  if (!v.is_zero() && perm.size() != v.particle_count()) {
    throw SizeMismatch("permutation size does not match the particle count");
  }
  LabeledVector out;
  for (const auto& [assignment, coeff] : v.terms()) {
    Assignment image(assignment.size());
    for (std::size_t k = 0; k < assignment.size(); ++k) image[k] = assignment[perm[k]];
    out.accumulate(image, coeff);
  }
  return out;
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.at(i, i) = Complex(1.0, 0.0);
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
  }
  return out;
}

double CMatrix::max_abs() const {
  double worst = 0.0;
  for (const Complex& c : data_) worst = std::max(worst, std::abs(c));
  return worst;
}

bool CMatrix::is_hermitian(double tolerance) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tolerance) return false;
    }
  }
  return true;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw SizeMismatch("matrix product dimension mismatch");
  CMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw SizeMismatch("matrix sum dimension mismatch");
  CMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  }
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw SizeMismatch("matrix difference dimension mismatch");
  CMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  }
  return out;
}

AssignmentSpace::AssignmentSpace(std::size_t particles, std::size_t levels)
    : particles_(particles), levels_(levels) {
  if (levels == 0) throw SizeMismatch("assignment space needs at least one level");
  Assignment word(particles, 1);
  while (true) {
    assignments_.push_back(word);
    std::size_t pos = particles;
    while (pos > 0 && word[pos - 1] == levels) word[--pos] = 1;
    if (pos == 0) break;
    ++word[pos - 1];
  }
}

std::size_t AssignmentSpace::index_of(const Assignment& assignment) const {
  if (assignment.size() != particles_) {
    throw SizeMismatch("assignment has the wrong particle count");
  }
  std::size_t index = 0;
  for (LevelIndex level : assignment) {
    if (level < 1 || level > levels_) throw SizeMismatch("assignment level out of range");
    index = index * levels_ + (level - 1);
  }
  return index;
}

CMatrix AssignmentSpace::permutation_matrix(const Permutation& perm) const {
  if (perm.size() != particles_) {
    throw SizeMismatch("permutation size does not match the particle count");
  }
  CMatrix out(dim());
  for (const Assignment& assignment : assignments_) {
    Assignment image(particles_);
    for (std::size_t k = 0; k < particles_; ++k) image[k] = assignment[perm[k]];
    out.at(index_of(image), index_of(assignment)) = Complex(1.0, 0.0);
  }
  return out;
}

std::vector<Complex> AssignmentSpace::dense(const LabeledVector& v) const {
  std::vector<Complex> out(dim(), Complex(0.0, 0.0));
  for (const auto& [assignment, coeff] : v.terms()) out[index_of(assignment)] = coeff;
  return out;
}

namespace {

Complex expectation(const CMatrix& observable, const std::vector<Complex>& vec) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < observable.dim(); ++i) {
    Complex row(0.0, 0.0);
    for (std::size_t j = 0; j < observable.dim(); ++j) row += observable.at(i, j) * vec[j];
    acc += std::conj(vec[i]) * row;
  }
  return acc;
}

}  // namespace

ExpectationPair ip_expectation_check(const AssignmentSpace& space, const CMatrix& observable,
                                     const LabeledVector& v, const Permutation& perm,
                                     double tolerance) {
  if (observable.dim() != space.dim()) {
    throw SizeMismatch("observable does not act on this assignment space");
  }
  if (!observable.is_hermitian(tolerance)) {
    throw std::invalid_argument("observable must be hermitian");
  }
  CMatrix p = space.permutation_matrix(perm);
  if ((observable * p - p * observable).max_abs() > tolerance) {
    throw NotPermutationCompatible(
        "observable does not commute with the permutation operator");
  }
  std::vector<Complex> before = space.dense(v);
  std::vector<Complex> after = space.dense(apply_permutation(perm, v));
  return ExpectationPair{expectation(observable, before).real(),
                         expectation(observable, after).real()};
}

CMatrix random_permutation_compatible_observable(const AssignmentSpace& space,
                                                 std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix seed(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    for (std::size_t j = 0; j < space.dim(); ++j) {
      seed.at(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  CMatrix hermitian(space.dim());
  CMatrix seed_adjoint = seed.adjoint();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    for (std::size_t j = 0; j < space.dim(); ++j) {
      hermitian.at(i, j) = 0.5 * (seed.at(i, j) + seed_adjoint.at(i, j));
    }
  }
  CMatrix averaged(space.dim());
  for (const Permutation& perm : all_permutations(space.particles())) {
    CMatrix p = space.permutation_matrix(perm);
    averaged = averaged + p.adjoint() * hermitian * p;
  }
  return averaged;
}

namespace {

IntMatrix minor_matrix(const IntMatrix& m, std::size_t column) {
  IntMatrix out;
  out.reserve(m.size() - 1);
  for (std::size_t i = 1; i < m.size(); ++i) {
    std::vector<long long> row;
    row.reserve(m.size() - 1);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != column) row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

long long cofactor_expand(const IntMatrix& m, bool signed_by_parity) {
  if (m.empty()) return 1;
  long long acc = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j] == 0) continue;
    long long sub = cofactor_expand(minor_matrix(m, j), signed_by_parity);
    long long sign = (signed_by_parity && j % 2 == 1) ? -1 : 1;
    acc += sign * m[0][j] * sub;
  }
  return acc;
}

}  // namespace

long long permanent(const IntMatrix& m) { return cofactor_expand(m, false); }

long long determinant(const IntMatrix& m) { return cofactor_expand(m, true); }

long long permutation_sum(const IntMatrix& m, bool signed_by_parity) {
  const std::size_t n = m.size();
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long acc = 0;
  do {
    long long product = 1;
    for (std::size_t k = 0; k < n && product != 0; ++k) product *= m[k][perm[k]];
    if (signed_by_parity) product *= permutation_parity(perm);
    acc += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

long long oracle_inner(Statistics kind, const fock::OccupationMap& occ1,
                       const fock::OccupationMap& occ2) {
  std::vector<LevelIndex> word1 = occ1.word();
  std::vector<LevelIndex> word2 = occ2.word();
  if (word1.size() != word2.size()) return 0;  // delta_nm
  IntMatrix m(word1.size(), std::vector<long long>(word2.size(), 0));
  for (std::size_t j = 0; j < word1.size(); ++j) {
    for (std::size_t k = 0; k < word2.size(); ++k) {
      m[j][k] = (word1[j] == word2[k]) ? 1 : 0;
    }
  }
  return kind == Statistics::boson ? permanent(m) : determinant(m);
}

}  // namespace qspace::labeled
