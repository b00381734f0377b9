#pragma once

// The labeled-tensor formalism: particles carry labels, states live in a
// tensor product of single-particle spaces, and exchange statistics enter
// through symmetrized or antisymmetrized vectors plus the requirement that
// observables commute with the permutation operators.
//
// Besides being the standard construction this module is the independent
// oracle for the occupation-number inner products: the permutation sums
// collapse to a permanent (bosons) or determinant (fermions) of the
// index-match matrix, computed here by cofactor expansion with a literal
// n!-term sum kept alongside as a cross-check.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qspace/error.hpp"
#include "qspace/occupation.hpp"

namespace qspace::labeled {

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class SizeMismatch : public Error {
 public:
  using Error::Error;
};
class NotPermutationCompatible : public Error {
 public:
  using Error::Error;
};

using Complex = std::complex<double>;
using LevelIndex = fock::LevelIndex;
using fock::Statistics;

// Particle slot k holds level assignment[k]; labels are the positions.
using Assignment = std::vector<LevelIndex>;
// perm[k] names the slot whose content moves to slot k.
using Permutation = std::vector<std::size_t>;

enum class Symmetry { symmetric, antisymmetric };

inline constexpr double kCoefficientEpsilon = 1e-12;
inline constexpr double kCheckTolerance = 1e-9;

// A finite complex combination of labeled assignments, all with the same
// particle count.
class LabeledVector {
 public:
  LabeledVector() = default;

  static LabeledVector basis(Assignment assignment);

  const std::map<Assignment, Complex>& terms() const { return terms_; }
  Complex coefficient(const Assignment& assignment) const;
  bool is_zero() const { return terms_.empty(); }
  // Particle count of the stored terms; zero for the zero vector.
  std::size_t particle_count() const;

  LabeledVector& accumulate(const Assignment& assignment, Complex amount);

  friend LabeledVector operator+(const LabeledVector& a, const LabeledVector& b);
  friend LabeledVector operator-(const LabeledVector& a, const LabeledVector& b);
  friend LabeledVector operator*(Complex scalar, const LabeledVector& v);

 private:
  std::map<Assignment, Complex> terms_;
};

// The unnormalized (anti)symmetrizer: the sum over all n! slot permutations,
// signed by parity in the antisymmetric case. Duplicate images accumulate,
// so an antisymmetrized word with a repeated level cancels to zero.
LabeledVector symmetrize(const Assignment& word, Symmetry symmetry);

// Orthonormal-assignment inner product, conjugate-linear in the first
// argument. Vectors with different particle counts give 0 by convention;
// with strict = true they raise DimensionMismatch instead.
Complex labeled_inner(const LabeledVector& v, const LabeledVector& w, bool strict = false);

// Relabels every assignment by the permutation; linear.
LabeledVector apply_permutation(const Permutation& perm, const LabeledVector& v);

std::vector<Permutation> all_permutations(std::size_t n);
int permutation_parity(const Permutation& perm);

// Minimal dense complex matrix, square, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0.0, 0.0)) {}

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  CMatrix adjoint() const;
  double max_abs() const;
  bool is_hermitian(double tolerance = kCheckTolerance) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

// The full assignment basis for n particles over levels 1..L, in
// lexicographic order, with the matrix representations acting on it.
class AssignmentSpace {
 public:
  AssignmentSpace(std::size_t particles, std::size_t levels);

  std::size_t particles() const { return particles_; }
  std::size_t levels() const { return levels_; }
  std::size_t dim() const { return assignments_.size(); }
  const std::vector<Assignment>& assignments() const { return assignments_; }
  std::size_t index_of(const Assignment& assignment) const;

  CMatrix permutation_matrix(const Permutation& perm) const;
  std::vector<Complex> dense(const LabeledVector& v) const;

 private:
  std::size_t particles_;
  std::size_t levels_;
  std::vector<Assignment> assignments_;
};

struct ExpectationPair {
  double before;  // <v|O|v>
  double after;   // <Pv|O|Pv>
};

// Evaluates an expectation value before and after permuting the labels.
// Refuses observables that do not commute with the permutation matrix;
// only those are admissible. Equal results on every admissible observable
// is the content of the Indistinguishability Postulate.
ExpectationPair ip_expectation_check(const AssignmentSpace& space, const CMatrix& observable,
                                     const LabeledVector& v, const Permutation& perm,
                                     double tolerance = kCheckTolerance);

// Group-averages a random hermitian matrix over all label permutations,
// which commutes with every permutation matrix by construction.
CMatrix random_permutation_compatible_observable(const AssignmentSpace& space,
                                                 std::mt19937_64& rng);

using IntMatrix = std::vector<std::vector<long long>>;

// Cofactor-expansion permanent and determinant (exact, small matrices).
long long permanent(const IntMatrix& m);
long long determinant(const IntMatrix& m);
// Literal sum over all n! column permutations, optionally signed by parity.
long long permutation_sum(const IntMatrix& m, bool signed_by_parity);

// Exact bracket of two occupation maps: permanent (bosons) or determinant
// (fermions) of the index-match matrix of the sorted expanded words, zero
// when the particle numbers differ.
long long oracle_inner(Statistics kind, const fock::OccupationMap& occ1,
                       const fock::OccupationMap& occ2);

}  // namespace qspace::labeled
