#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qspace/fock.hpp"
#include "qspace/labeled.hpp"
#include "qspace/qset.hpp"

using namespace qspace;
using fock::Complex;
using fock::FockVector;
using fock::LevelBasis;
using fock::LevelIndex;
using fock::OccupationMap;
using fock::Statistics;

namespace {

constexpr Statistics kBoson = Statistics::boson;
constexpr Statistics kFermion = Statistics::fermion;

OccupationMap occ(std::initializer_list<std::pair<LevelIndex, std::uint32_t>> counts) {
  return OccupationMap::from_counts(counts);
}

// All occupation maps with total <= max_total over levels 1..levels, via
// nondecreasing index words (each multiset visited exactly once).
void collect_occupations(std::uint32_t levels, std::uint32_t max_total, LevelIndex min_level,
                         std::vector<LevelIndex>& word, std::vector<OccupationMap>& out) {
  out.push_back(OccupationMap::from_word(word));
  if (word.size() == max_total) return;
  for (LevelIndex level = min_level; level <= levels; ++level) {
    word.push_back(level);
    collect_occupations(levels, max_total, level, word, out);
    word.pop_back();
  }
}

std::vector<OccupationMap> all_occupations(std::uint32_t levels, std::uint32_t max_total) {
  std::vector<OccupationMap> out;
  std::vector<LevelIndex> word;
  collect_occupations(levels, max_total, 1, word, out);
  return out;
}

FockVector random_vector(std::mt19937& rng, const std::vector<OccupationMap>& pool,
                         std::size_t terms) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  FockVector v;
  for (std::size_t i = 0; i < terms; ++i) {
    v.accumulate(pool[rng() % pool.size()], Complex(gauss(rng), gauss(rng)));
  }
  return v;
}

}  // namespace

TEST_CASE("occupation map canonical word") {
  OccupationMap m = occ({{3, 2}, {1, 1}});
  CHECK(m.word() == std::vector<LevelIndex>{1, 3, 3});
  CHECK(m.total() == 3);
  CHECK(m.count(3) == 2);
  CHECK(m.count(2) == 0);
  CHECK(m.has_repeat());
  CHECK(OccupationMap::from_word({2, 1, 2}) == occ({{1, 1}, {2, 2}}));
  CHECK_THROWS_AS(OccupationMap::from_counts({{1, 0}}), fock::InvalidOccupation);
}

TEST_CASE("level basis validation") {
  CHECK_NOTHROW(LevelBasis({{1, 0.5}, {2, 1.5}, {7, 2.0}}));
  CHECK_THROWS_AS(LevelBasis({{1, 1.0}, {2, 1.0}}), fock::InvalidOccupation);
  CHECK_THROWS_AS(LevelBasis({{2, 1.0}, {1, 2.0}}), fock::InvalidOccupation);
  LevelBasis basis = LevelBasis::uniform(3);
  CHECK(basis.contains(3));
  CHECK_FALSE(basis.contains(4));
}

TEST_CASE("vector space operations") {
  FockVector v = fock::basis_ket(occ({{1, 2}}));
  CHECK(v.terms().size() == 1);
  CHECK(v.coefficient(occ({{1, 2}})) == Complex(1.0, 0.0));

  SUBCASE("the zero vector is the additive unit") {
    CHECK(fock::add(v, FockVector::zero()).terms() == v.terms());
  }
  SUBCASE("scaling by zero gives the zero vector") {
    CHECK(fock::scale(Complex(0.0, 0.0), v).is_zero());
  }
  SUBCASE("additive inverse cancels") {
    CHECK(fock::add(v, fock::scale(Complex(-1.0, 0.0), v)).is_zero());
  }
  SUBCASE("vacuum ket") {
    FockVector vacuum = fock::basis_ket(OccupationMap{});
    CHECK(vacuum.terms().size() == 1);
    CHECK(fock::norm(kBoson, vacuum) == doctest::Approx(1.0));
    CHECK(fock::norm(kFermion, vacuum) == doctest::Approx(1.0));
  }
}

TEST_CASE("basis bracket frozen values") {
  // two quanta on one level: the two permutations both match
  CHECK(fock::basis_bracket(kBoson, occ({{1, 2}}), occ({{1, 2}})) == 2);
  // distinct levels: only the identity permutation matches
  CHECK(fock::basis_bracket(kBoson, occ({{1, 1}, {2, 1}}), occ({{1, 1}, {2, 1}})) == 1);
  CHECK(fock::basis_bracket(kBoson, occ({{1, 1}}), occ({{2, 1}})) == 0);
  // fermionic repeated level: the two permutations cancel
  CHECK(fock::basis_bracket(kFermion, occ({{1, 2}}), occ({{1, 2}})) == 0);
  // particle numbers differ
  CHECK(fock::basis_bracket(kBoson, occ({{1, 1}}), occ({{1, 1}, {2, 1}})) == 0);
  CHECK(fock::basis_bracket(kFermion, OccupationMap{}, OccupationMap{}) == 1);
}

TEST_CASE("boson self bracket is the product of factorials") {
  auto factorial = [](std::uint32_t n) {
    long long out = 1;
    for (std::uint32_t i = 2; i <= n; ++i) out *= i;
    return out;
  };
  for (const auto& m : all_occupations(3, 4)) {
    long long expected = 1;
    for (const auto& [index, count] : m.support()) expected *= factorial(count);
    CHECK(fock::basis_bracket(kBoson, m, m) == expected);
  }
}

TEST_CASE("inner product agrees with the labeled oracle on small words") {
  for (const auto& f : all_occupations(3, 3)) {
    for (const auto& g : all_occupations(3, 3)) {
      for (auto kind : {kBoson, kFermion}) {
        Complex direct = fock::inner(kind, fock::basis_ket(f), fock::basis_ket(g));
        CHECK(direct.real() == static_cast<double>(labeled::oracle_inner(kind, f, g)));
        CHECK(direct.imag() == 0.0);
      }
    }
  }
}

TEST_CASE("sesquilinearity and hermitian symmetry") {
  std::mt19937 rng(7);
  auto pool = all_occupations(3, 3);
  for (int round = 0; round < 30; ++round) {
    FockVector u = random_vector(rng, pool, 3);
    FockVector v = random_vector(rng, pool, 3);
    FockVector w = random_vector(rng, pool, 4);
    Complex lambda(0.3, -1.2);
    for (auto kind : {kBoson, kFermion}) {
      Complex lhs = fock::inner(kind, fock::add(u, v), w);
      Complex rhs = fock::inner(kind, u, w) + fock::inner(kind, v, w);
      CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));

      Complex scaled = fock::inner(kind, fock::scale(lambda, v), w);
      Complex expected = std::conj(lambda) * fock::inner(kind, v, w);
      CHECK(std::abs(scaled - expected) < 1e-12 * (1.0 + std::abs(expected)));

      CHECK(std::abs(fock::inner(kind, v, w) - std::conj(fock::inner(kind, w, v))) < 1e-12);
    }
  }
}

TEST_CASE("norm and null norm") {
  CHECK(fock::is_null_norm(kFermion, fock::basis_ket(occ({{1, 2}}))));
  CHECK(fock::norm(kBoson, fock::basis_ket(occ({{1, 2}}))) == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(fock::is_null_norm(kBoson, fock::basis_ket(occ({{1, 2}}))));
}

TEST_CASE("every repeated fermionic word has exactly null norm") {
  for (const auto& m : all_occupations(4, 4)) {
    if (!m.has_repeat()) continue;
    Complex self = fock::inner(kFermion, fock::basis_ket(m), fock::basis_ket(m));
    CHECK(self.real() == 0.0);
    CHECK(self.imag() == 0.0);
  }
}

TEST_CASE("normalized kets") {
  FockVector two = fock::normalized_ket(kBoson, occ({{1, 2}}));
  CHECK(std::abs(two.coefficient(occ({{1, 2}})) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-12);
  FockVector mixed = fock::normalized_ket(kBoson, occ({{1, 1}, {2, 1}}));
  CHECK(std::abs(mixed.coefficient(occ({{1, 1}, {2, 1}})) - Complex(1.0, 0.0)) < 1e-12);
  CHECK_THROWS_AS(fock::normalized_ket(kFermion, occ({{1, 2}})), fock::NullNormState);
  CHECK(fock::norm(kBoson, fock::normalized_ket(kBoson, occ({{1, 3}, {2, 1}}))) ==
        doctest::Approx(1.0));
}

TEST_CASE("canonical fermion word") {
  auto swapped = fock::canonical_fermion_word({2, 1});
  REQUIRE(swapped.has_value());
  CHECK(swapped->sign == -1);
  CHECK(swapped->occ == occ({{1, 1}, {2, 1}}));

  auto sorted = fock::canonical_fermion_word({1, 2, 3});
  REQUIRE(sorted.has_value());
  CHECK(sorted->sign == 1);

  CHECK_FALSE(fock::canonical_fermion_word({1, 1}).has_value());

  auto rotated = fock::canonical_fermion_word({3, 1, 2});  // even permutation
  REQUIRE(rotated.has_value());
  CHECK(rotated->sign == 1);
}

TEST_CASE("similarity modulo null-norm vectors") {
  FockVector ab = fock::ket_from_word(kFermion, {1, 2});
  FockVector ba = fock::ket_from_word(kFermion, {2, 1});
  CHECK(fock::similar(ab + ba, FockVector::zero()));
  CHECK(fock::similar(ab, Complex(-1.0, 0.0) * ba));
  CHECK_FALSE(fock::similar(ab, fock::ket_from_word(kFermion, {1, 3})));
  // a raw repeated-index ket is itself similar to zero
  CHECK(fock::similar(fock::basis_ket(occ({{2, 2}})), FockVector::zero()));
}

TEST_CASE("bosonic ladder operators") {
  LevelBasis basis = LevelBasis::uniform(3);
  FockVector vacuum = fock::basis_ket(OccupationMap{});

  SUBCASE("create on the vacuum") {
    FockVector one = fock::create(kBoson, basis, 2, vacuum);
    CHECK(std::abs(one.coefficient(occ({{2, 1}})) - Complex(1.0, 0.0)) < 1e-12);
  }
  SUBCASE("create on an occupied level brings sqrt(n+1)") {
    FockVector two = fock::create(kBoson, basis, 1, fock::basis_ket(occ({{1, 1}})));
    CHECK(std::abs(two.coefficient(occ({{1, 2}})) - Complex(std::sqrt(2.0), 0.0)) < 1e-12);
  }
  SUBCASE("annihilate the vacuum") {
    CHECK(fock::annihilate(kBoson, basis, 1, vacuum).is_zero());
  }
  SUBCASE("annihilate brings sqrt(n)") {
    FockVector one = fock::annihilate(kBoson, basis, 1, fock::basis_ket(occ({{1, 2}})));
    CHECK(std::abs(one.coefficient(occ({{1, 1}})) - Complex(std::sqrt(2.0), 0.0)) < 1e-12);
  }
  SUBCASE("unknown level") {
    CHECK_THROWS_AS(fock::create(kBoson, basis, 9, vacuum), fock::UnknownLevel);
    CHECK_THROWS_AS(fock::annihilate(kBoson, basis, 9, vacuum), fock::UnknownLevel);
  }
}

TEST_CASE("fermionic ladder operators") {
  LevelBasis basis = LevelBasis::uniform(4);
  FockVector vacuum = fock::basis_ket(OccupationMap{});

  SUBCASE("create on an occupied level lands in the null class") {
    FockVector doubled = fock::create(kFermion, basis, 1, fock::basis_ket(occ({{1, 1}})));
    CHECK(fock::similar(doubled, FockVector::zero()));
    CHECK(fock::is_null_norm(kFermion, doubled));
  }
  SUBCASE("annihilating the only quantum returns the vacuum with coefficient one") {
    FockVector out = fock::annihilate(kFermion, basis, 1, fock::basis_ket(occ({{1, 1}})));
    CHECK(std::abs(out.coefficient(OccupationMap{}) - Complex(1.0, 0.0)) < 1e-12);
  }
  SUBCASE("annihilating an unoccupied level gives the zero vector") {
    CHECK(fock::annihilate(kFermion, basis, 2, fock::basis_ket(occ({{1, 1}}))).is_zero());
    CHECK(fock::annihilate(kFermion, basis, 2, vacuum).is_zero());
  }
  SUBCASE("prepend sign counts occupied levels below") {
    // creating level 3 over {1,2} crosses two occupied levels
    FockVector out = fock::create(kFermion, basis, 3, fock::basis_ket(occ({{1, 1}, {2, 1}})));
    CHECK(std::abs(out.coefficient(occ({{1, 1}, {2, 1}, {3, 1}})) - Complex(1.0, 0.0)) < 1e-12);
    FockVector out2 = fock::create(kFermion, basis, 1, fock::basis_ket(occ({{2, 1}, {3, 1}})));
    CHECK(std::abs(out2.coefficient(occ({{1, 1}, {2, 1}, {3, 1}})) - Complex(1.0, 0.0)) < 1e-12);
    FockVector out3 = fock::create(kFermion, basis, 2, fock::basis_ket(occ({{1, 1}, {3, 1}})));
    CHECK(std::abs(out3.coefficient(occ({{1, 1}, {2, 1}, {3, 1}})) - Complex(-1.0, 0.0)) <
          1e-12);
  }
}

TEST_CASE("commutator residuals vanish") {
  LevelBasis basis = LevelBasis::uniform(4);
  std::mt19937 rng(11);
  auto pool = all_occupations(4, 4);

  SUBCASE("bosonic, diagonal and off-diagonal") {
    for (const auto& m : pool) {
      FockVector ket = fock::basis_ket(m);
      for (LevelIndex alpha = 1; alpha <= 4; ++alpha) {
        for (LevelIndex beta = 1; beta <= 4; ++beta) {
          FockVector r = fock::commutator_residual(kBoson, basis, alpha, beta, ket);
          CHECK(fock::max_coefficient_distance(r, FockVector::zero()) < 1e-9);
        }
      }
    }
  }
  SUBCASE("bosonic on random linear combinations") {
    for (int round = 0; round < 10; ++round) {
      FockVector v = random_vector(rng, pool, 4);
      FockVector r = fock::commutator_residual(kBoson, basis, 1 + rng() % 4, 1 + rng() % 4, v);
      CHECK(fock::max_coefficient_distance(r, FockVector::zero()) < 1e-9);
    }
  }
  SUBCASE("fermionic anticommutator, all subsets of five levels") {
    LevelBasis wide = LevelBasis::uniform(5);
    for (const auto& m : all_occupations(5, 5)) {
      if (m.has_repeat()) continue;
      FockVector ket = fock::basis_ket(m);
      for (LevelIndex alpha = 1; alpha <= 5; ++alpha) {
        for (LevelIndex beta = 1; beta <= 5; ++beta) {
          FockVector r = fock::commutator_residual(kFermion, wide, alpha, beta, ket);
          CHECK(fock::max_coefficient_distance(r, FockVector::zero()) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("number operator") {
  LevelBasis basis = LevelBasis::uniform(4);
  for (const auto& m : all_occupations(4, 5)) {
    FockVector ket = fock::basis_ket(m);
    for (LevelIndex alpha = 1; alpha <= 4; ++alpha) {
      FockVector counted =
          fock::create(kBoson, basis, alpha, fock::annihilate(kBoson, basis, alpha, ket));
      FockVector expected = Complex(static_cast<double>(m.count(alpha)), 0.0) * ket;
      CHECK(fock::max_coefficient_distance(counted, expected) < 1e-9);
    }
  }
}

TEST_CASE("occupation map from a quasi-function") {
  LevelBasis basis = LevelBasis::uniform(3);
  qset::AtomKind electron = qset::AtomKind::m("e");

  SUBCASE("three occupied levels") {
    qset::QuasiFunction f({{fock::level_argument(1), qset::Element{qset::QSet::of_kind(electron, 3)}},
                           {fock::level_argument(2), qset::Element{qset::QSet::of_kind(electron, 1)}},
                           {fock::level_argument(3), qset::Element{qset::QSet::of_kind(electron, 1)}}});
    CHECK(fock::from_quasi_function(f, basis) == occ({{1, 3}, {2, 1}, {3, 1}}));
  }
  SUBCASE("all images empty gives the vacuum") {
    qset::QuasiFunction f({{fock::level_argument(1), qset::Element{qset::QSet{}}},
                           {fock::level_argument(2), qset::Element{qset::QSet{}}}});
    CHECK(fock::from_quasi_function(f, basis) == OccupationMap{});
  }
  SUBCASE("swapping atoms inside an image changes nothing") {
    qset::QSet image = qset::QSet::of_kind(electron, 2);
    qset::QSet pool = qset::QSet::of_kind(electron, 3);
    qset::QSet swapped = qset::permutation_swap(image, electron, pool);
    qset::QuasiFunction before({{fock::level_argument(1), qset::Element{image}}});
    qset::QuasiFunction after({{fock::level_argument(1), qset::Element{swapped}}});
    CHECK(fock::from_quasi_function(before, basis) == fock::from_quasi_function(after, basis));
  }
  SUBCASE("mixed-kind image is rejected") {
    qset::QSet mixed = qset::QSet::of_kind(electron, 1);
    mixed.add_m(qset::AtomKind::m("p"), 1);
    qset::QuasiFunction f({{fock::level_argument(1), qset::Element{mixed}}});
    CHECK_THROWS_AS(fock::from_quasi_function(f, basis), fock::NotPure);
  }
  SUBCASE("unknown level index") {
    qset::QuasiFunction f(
        {{fock::level_argument(9), qset::Element{qset::QSet::of_kind(electron, 1)}}});
    CHECK_THROWS_AS(fock::from_quasi_function(f, basis), fock::UnknownLevel);
  }
  SUBCASE("non-level argument is rejected") {
    qset::QuasiFunction f(
        {{qset::Element{qset::AtomKind::M("eps")}, qset::Element{qset::QSet::of_kind(electron, 1)}}});
    CHECK_THROWS_AS(fock::from_quasi_function(f, basis), qset::InvalidQuasiFunction);
  }
}
