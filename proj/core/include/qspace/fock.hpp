#pragma once

// The occupation-number Fock space: finitely supported complex linear
// combinations of occupation maps, with the bosonic and fermionic inner
// products given by permutation sums over expanded index words, ladder
// operators, and similarity modulo null-norm vectors.
//
// Basis-ket inner products are computed by exact integer combinatorics
// (permanent or determinant of the index-match matrix) and only then
// converted to floating point, so every identity that is an integer in
// exact arithmetic stays an integer here.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qspace/occupation.hpp"
#include "qspace/qset.hpp"

namespace qspace::fock {

class NotPure : public Error {
 public:
  using Error::Error;
};
class NullNormState : public Error {
 public:
  using Error::Error;
};
class NegativeNorm : public Error {
 public:
  using Error::Error;
};

using Complex = std::complex<double>;

// Coefficients with modulus at or below this are pruned from canonical form.
inline constexpr double kCoefficientEpsilon = 1e-12;
// Default tolerance for residual and similarity checks.
inline constexpr double kCheckTolerance = 1e-9;

class FockVector {
 public:
  FockVector() = default;  // the zero vector

  static FockVector zero() { return FockVector(); }

  const std::map<OccupationMap, Complex>& terms() const { return terms_; }
  Complex coefficient(const OccupationMap& occ) const;
  bool is_zero() const { return terms_.empty(); }

  // Adds into the given term, pruning the entry if it lands near zero.
  FockVector& accumulate(const OccupationMap& occ, Complex amount);

  friend FockVector operator+(const FockVector& a, const FockVector& b);
  friend FockVector operator-(const FockVector& a, const FockVector& b);
  friend FockVector operator*(Complex scalar, const FockVector& v);

 private:
  std::map<OccupationMap, Complex> terms_;
};

// The basis vector with coefficient 1 on `occ`; occ == {} is the vacuum.
FockVector basis_ket(const OccupationMap& occ);

FockVector add(const FockVector& v, const FockVector& w);
FockVector scale(Complex scalar, const FockVector& v);

// Largest coefficient modulus of v - w; zero for equal vectors.
double max_coefficient_distance(const FockVector& v, const FockVector& w);

// Exact integer bracket of two basis kets: the permutation sum over the
// index-match matrix of the expanded words, signed for fermions. Zero when
// the particle numbers differ.
long long basis_bracket(Statistics kind, const OccupationMap& f, const OccupationMap& g);

// Sesquilinear inner product, conjugate-linear in the first argument.
Complex inner(Statistics kind, const FockVector& v, const FockVector& w);

double norm(Statistics kind, const FockVector& v);
bool is_null_norm(Statistics kind, const FockVector& v);

// basis_ket(occ) scaled to unit norm. Bosons get 1/sqrt(prod n_i!); for
// fermions any repeated level has null norm, hence NullNormState.
FockVector normalized_ket(Statistics kind, const OccupationMap& occ);

struct CanonicalWord {
  int sign;  // parity of the sorting permutation, +1 or -1
  OccupationMap occ;
};

// Sorts a fermionic index word into canonical order, tracking the parity of
// the permutation used. A repeated index means the word lies in the
// null-norm class: nullopt.
std::optional<CanonicalWord> canonical_fermion_word(const std::vector<LevelIndex>& word);

// The ket named by an index word. Boson order is immaterial; a fermion word
// is canonicalized with its sorting sign, and a repeated-index word becomes
// the raw (null-norm) ket with coefficient +1.
FockVector ket_from_word(Statistics kind, const std::vector<LevelIndex>& word);

// Creation operator. Bosons: sqrt(n+1) on the incremented map. Fermions:
// prepend-then-sort, i.e. sign (-1)^(occupied levels below alpha); a term
// with alpha already occupied stays as a raw doubly occupied map, which every
// observable treats as null.
FockVector create(Statistics kind, const LevelBasis& basis, LevelIndex alpha,
                  const FockVector& v);

// Annihilation operator. Bosons: sqrt(n) on the decremented map. Fermions:
// singly occupied alpha is removed with the same sign convention; an
// unoccupied or multiply occupied alpha sends the term to the null class,
// which has no basis representative, hence the zero vector.
FockVector annihilate(Statistics kind, const LevelBasis& basis, LevelIndex alpha,
                      const FockVector& v);

// Drops every term whose occupation map has a repeated level: the quotient
// by the null-norm subspace, where fermionic similarity is decided.
FockVector fermion_canonical_form(const FockVector& v);

// Bosons: ([a_alpha, a_beta^+] - delta_ab I) v. Fermions: the canonical form
// of ({C_alpha, C_beta^+} - delta_ab I) v. Zero (within tolerance) on every
// input is the algebra being verified.
FockVector commutator_residual(Statistics kind, const LevelBasis& basis, LevelIndex alpha,
                               LevelIndex beta, const FockVector& v);

// Fermionic similarity: equality of canonical forms within tolerance, i.e.
// equality modulo linear combinations of null-norm vectors.
bool similar(const FockVector& v, const FockVector& w, double tolerance = kCheckTolerance);

// Wraps a level index as the classical argument a quasi-function pairs with
// an image q-set.
qset::Element level_argument(LevelIndex index);

// Reads an occupation map off a quasi-function from levels to pure q-sets:
// level index -> quasi-cardinal of the image. Images must be pure; empty
// images mean occupation zero. Swapping indistinguishable atoms inside an
// image beforehand cannot change the result, because a pure q-set carries
// no atom identities to permute.
OccupationMap from_quasi_function(const qset::QuasiFunction& f, const LevelBasis& basis);

}  // namespace qspace::fock
