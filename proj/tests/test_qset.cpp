#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qspace/qset.hpp"

using namespace qspace::qset;

namespace {

const AtomKind electron = AtomKind::m("electron");
const AtomKind proton = AtomKind::m("proton");
const AtomKind muon = AtomKind::m("muon");

QSet classical_set(std::initializer_list<const char*> labels) {
  QSet q;
  for (const char* label : labels) q.add(Element{AtomKind::M(label)});
  return q;
}

// Random generator for property tests: kinds from a small pool, optional
// nesting, bounded depth.
Element random_element(std::mt19937& rng, int depth);

QSet random_qset(std::mt19937& rng, int depth) {
  QSet q;
  std::uniform_int_distribution<int> kind_count(0, 2);
  std::uniform_int_distribution<int> multiplicity(1, 3);
  const char* kinds[] = {"a", "b", "c"};
  int n_kinds = kind_count(rng);
  for (int i = 0; i < n_kinds; ++i) {
    q.add_m(AtomKind::m(kinds[static_cast<std::size_t>(rng() % 3)]),
            static_cast<std::uint64_t>(multiplicity(rng)));
  }
  int n_members = kind_count(rng);
  for (int i = 0; i < n_members && depth > 0; ++i) {
    q.add(random_element(rng, depth - 1));
  }
  return q;
}

Element random_element(std::mt19937& rng, int depth) {
  if (depth == 0 || rng() % 2 == 0) {
    const char* labels[] = {"x", "y", "z"};
    return Element{AtomKind::M(labels[rng() % 3])};
  }
  return Element{random_qset(rng, depth)};
}

}  // namespace

TEST_CASE("indistinguishable atoms by kind") {
  CHECK(indistinguishable(Element{electron}, Element{AtomKind::m("electron")}));
  CHECK_FALSE(indistinguishable(Element{electron}, Element{proton}));
  CHECK_FALSE(indistinguishable(Element{electron}, Element{AtomKind::M("electron")}));
}

TEST_CASE("indistinguishable q-sets ignore construction order") {
  QSet a;
  a.add_m(electron, 2);
  QSet b;
  b.add_m(electron).add_m(proton).add_m(electron);
  b.remove_m(proton);
  CHECK(indistinguishable(Element{a}, Element{b}));
  CHECK(a == b);
}

TEST_CASE("identical on classical things") {
  QSet a = classical_set({"1", "2"});
  QSet b = classical_set({"2", "1"});
  CHECK(identical(Element{a}, Element{b}));
  CHECK_FALSE(identical(Element{AtomKind::M("a")}, Element{AtomKind::M("b")}));
}

TEST_CASE("identity is undefined for m-atoms") {
  CHECK_THROWS_AS(identical(Element{electron}, Element{electron}), IdentityUndefined);
  CHECK_THROWS_AS(identical(Element{electron}, Element{AtomKind::M("a")}), IdentityUndefined);
  QSet mixed = QSet::of_kind(electron, 1);
  CHECK_THROWS_AS(identical(Element{mixed}, Element{mixed}), IdentityUndefined);
  // a classical wrapper around a q-set with m-atoms is just as undefined
  QSet wrapper;
  wrapper.add(Element{mixed});
  CHECK_THROWS_AS(identical(Element{wrapper}, Element{wrapper}), IdentityUndefined);
}

TEST_CASE("qcard counts multiplicities and members") {
  QSet q = QSet::of_kind(electron, 3);
  q.add(Element{AtomKind::M("a")});
  CHECK(qcard(q) == 4);
  CHECK(qcard(QSet{}) == 0);
  CHECK(qcard(classical_set({"1", "2", "3"})) == 3);
}

TEST_CASE("weak singleton separates by kind") {
  QSet z = QSet::of_kind(electron, 3);
  z.add_m(proton, 1);
  QSet result = weak_singleton(electron, z);
  CHECK(result == QSet::of_kind(electron, 3));
  CHECK(result.is_pure());

  CHECK(weak_singleton(electron, QSet::of_kind(electron, 1)) == QSet::of_kind(electron, 1));
  CHECK_THROWS_AS(weak_singleton(muon, QSet::of_kind(electron, 3)), NotAMember);
}

TEST_CASE("weak singleton of an M-atom") {
  QSet z = classical_set({"a", "b"});
  QSet result = weak_singleton(AtomKind::M("a"), z);
  CHECK(result == classical_set({"a"}));
  CHECK_THROWS_AS(weak_singleton(AtomKind::M("c"), z), NotAMember);
}

TEST_CASE("strong singleton has quasi-cardinal one") {
  PureQSet s = strong_singleton(electron, QSet::of_kind(electron, 3));
  CHECK(s.qcard() == 1);
  CHECK(s.kind() == electron);
  CHECK(strong_singleton(electron, QSet::of_kind(electron, 1)).qcard() == 1);
  CHECK_THROWS_AS(strong_singleton(proton, QSet::of_kind(electron, 3)), NotAMember);
}

TEST_CASE("weak pair") {
  QSet z = QSet::of_kind(electron, 2);
  z.add_m(proton, 1);

  SUBCASE("same kind collapses to the weak singleton") {
    CHECK(weak_pair(electron, electron, z) == QSet::of_kind(electron, 2));
  }
  SUBCASE("distinct kinds merge their filters") {
    QSet expected = QSet::of_kind(electron, 2);
    expected.add_m(proton, 1);
    CHECK(weak_pair(electron, proton, z) == expected);
  }
  SUBCASE("the pair may hold many atoms") {
    CHECK(weak_pair(electron, electron, QSet::of_kind(electron, 5)) ==
          QSet::of_kind(electron, 5));
  }
  SUBCASE("no matching kind at all") {
    CHECK_THROWS_AS(weak_pair(muon, muon, z), NotAMember);
  }
}

TEST_CASE("weak ordered pair") {
  SUBCASE("same-kind m-atoms collapse and are symmetric") {
    QSet z = QSet::of_kind(electron, 2);
    QSet pair = weak_ordered_pair(electron, electron, z);
    // [[x]_z, [x,y]_z] with both components equal to {electron:2}
    QSet expected;
    expected.add(Element{QSet::of_kind(electron, 2)});
    CHECK(pair == expected);
    CHECK(qcard(pair) == 1);
    CHECK(weak_ordered_pair(electron, electron, z) == weak_ordered_pair(electron, electron, z));
  }
  SUBCASE("same kind pool, swapped arguments, equal structure") {
    QSet z = QSet::of_kind(electron, 3);
    CHECK(weak_ordered_pair(electron, electron, z) ==
          weak_ordered_pair(electron, electron, z));
  }
  SUBCASE("only the second argument matches") {
    QSet z = QSet::of_kind(proton, 2);
    QSet pair = weak_ordered_pair(muon, proton, z);
    // [muon]_z is empty, [muon,proton]_z is the proton pool
    QSet expected;
    expected.add(Element{QSet{}});
    expected.add(Element{QSet::of_kind(proton, 2)});
    CHECK(pair == expected);
    CHECK_THROWS_AS(weak_ordered_pair(muon, muon, z), NotAMember);
  }
  SUBCASE("M-atoms give the classical nesting and order matters") {
    QSet z = classical_set({"a", "b"});
    AtomKind a = AtomKind::M("a");
    AtomKind b = AtomKind::M("b");
    QSet ab = weak_ordered_pair(a, b, z);
    QSet ba = weak_ordered_pair(b, a, z);
    CHECK(ab != ba);
    // {{a},{a,b}}
    QSet expected;
    expected.add(Element{classical_set({"a"})});
    expected.add(Element{classical_set({"a", "b"})});
    CHECK(ab == expected);
  }
}

TEST_CASE("quasi-function validation") {
  Element e{electron};
  Element image_a{QSet::of_kind(AtomKind::m("a"), 2)};
  Element image_b{QSet::of_kind(AtomKind::m("b"), 1)};

  CHECK(validate_quasi_function({{e, image_a}, {e, image_a}}));
  CHECK_FALSE(validate_quasi_function({{e, image_a}, {e, image_b}}));
  // classical functions are quasi-functions
  CHECK(validate_quasi_function({{Element{AtomKind::M("1")}, Element{AtomKind::M("2")}},
                                 {Element{AtomKind::M("3")}, Element{AtomKind::M("4")}}}));

  CHECK_THROWS_AS(QuasiFunction({{e, image_a}, {e, image_b}}), InvalidQuasiFunction);
  CHECK_NOTHROW(QuasiFunction({{e, image_a}, {e, image_a}}));
}

TEST_CASE("permutation swap leaves the q-set structurally equal") {
  SUBCASE("pure pool") {
    QSet x = QSet::of_kind(electron, 2);
    QSet t = QSet::of_kind(electron, 3);
    QSet swapped = permutation_swap(x, electron, t);
    CHECK(swapped == x);
    CHECK(indistinguishable(Element{swapped}, Element{x}));
  }
  SUBCASE("mixed q-set") {
    QSet x = QSet::of_kind(electron, 1);
    x.add_m(proton, 1);
    QSet t = QSet::of_kind(electron, 2);
    t.add_m(proton, 1);
    CHECK(permutation_swap(x, electron, t) == x);
  }
  SUBCASE("no atom outside x") {
    QSet x = QSet::of_kind(electron, 2);
    CHECK_THROWS_AS(permutation_swap(x, electron, QSet::of_kind(electron, 2)),
                    PreconditionFailed);
  }
  SUBCASE("kind absent from x") {
    CHECK_THROWS_AS(
        permutation_swap(QSet::of_kind(electron, 1), proton, QSet::of_kind(proton, 2)),
        PreconditionFailed);
  }
}

TEST_CASE("permutation swap exhaustive over small multisets") {
  const char* kinds[] = {"a", "b", "c"};
  // all multisets over three kinds with total count <= 5
  for (std::uint64_t na = 0; na <= 5; ++na) {
    for (std::uint64_t nb = 0; na + nb <= 5; ++nb) {
      for (std::uint64_t nc = 0; na + nb + nc <= 5; ++nc) {
        QSet x;
        if (na) x.add_m(AtomKind::m(kinds[0]), na);
        if (nb) x.add_m(AtomKind::m(kinds[1]), nb);
        if (nc) x.add_m(AtomKind::m(kinds[2]), nc);
        for (const auto& [kind_id, count] : x.m_part()) {
          for (std::uint64_t extra = 1; extra <= 2; ++extra) {
            QSet t = x;
            t.add_m(AtomKind::m(kind_id), extra);
            CHECK(permutation_swap(x, AtomKind::m(kind_id), t) == x);
          }
        }
      }
    }
  }
}

TEST_CASE("is_classical scans the transitive closure") {
  QSet good;
  good.add(Element{AtomKind::M("a")});
  good.add(Element{classical_set({"1", "2"})});
  CHECK(is_classical(good));

  CHECK_FALSE(is_classical(QSet::of_kind(electron, 1)));

  QSet wrapper;
  wrapper.add(Element{QSet::of_kind(electron, 1)});
  CHECK_FALSE(is_classical(wrapper));
}

TEST_CASE("indistinguishability is an equivalence relation") {
  std::mt19937 rng(0);
  std::vector<Element> pool;
  for (int i = 0; i < 40; ++i) pool.push_back(random_element(rng, 2));
  for (const Element& a : pool) {
    CHECK(indistinguishable(a, a));
    for (const Element& b : pool) {
      CHECK(indistinguishable(a, b) == indistinguishable(b, a));
      for (const Element& c : pool) {
        if (indistinguishable(a, b) && indistinguishable(b, c)) {
          CHECK(indistinguishable(a, c));
        }
      }
    }
  }
}

TEST_CASE("identical and indistinguishable coincide on classical things") {
  std::mt19937 rng(1);
  std::vector<Element> pool;
  for (int i = 0; i < 60; ++i) {
    Element e = random_element(rng, 2);
    if (is_classical(e)) pool.push_back(e);
  }
  pool.push_back(Element{classical_set({"1", "2"})});
  pool.push_back(Element{classical_set({"2", "1"})});
  for (const Element& a : pool) {
    for (const Element& b : pool) {
      CHECK(identical(a, b) == indistinguishable(a, b));
    }
  }
}

TEST_CASE("indistinguishability does not respect membership") {
  // x and y of the same kind, yet their weak singletons in different hosts
  // have different quasi-cardinals: nothing lets us move x from z1 to z2.
  QSet z1 = QSet::of_kind(electron, 1);
  QSet z2 = QSet::of_kind(electron, 5);
  CHECK(weak_singleton(electron, z1).qcard() != weak_singleton(electron, z2).qcard());
}

TEST_CASE("disjoint union adds quasi-cardinals") {
  QSet a = QSet::of_kind(electron, 2);
  a.add(Element{AtomKind::M("x")});
  QSet b = QSet::of_kind(proton, 3);
  b.add(Element{AtomKind::M("y")});
  CHECK(qcard(disjoint_union(a, b)) == qcard(a) + qcard(b));
  CHECK_THROWS_AS(disjoint_union(a, QSet::of_kind(electron, 1)), PreconditionFailed);
}

TEST_CASE("singleton outputs on m-atoms are pure") {
  std::mt19937 rng(2);
  for (int i = 0; i < 50; ++i) {
    QSet z = random_qset(rng, 1);
    for (const auto& [kind_id, count] : z.m_part()) {
      QSet weak = weak_singleton(AtomKind::m(kind_id), z);
      CHECK(weak.is_pure());
      CHECK(weak.qcard() == count);
      PureQSet strong = strong_singleton(AtomKind::m(kind_id), z);
      CHECK(strong.qcard() == 1);
      CHECK(strong.as_qset().is_pure());
    }
  }
}

TEST_CASE("m-atoms cannot enter the classical part") {
  QSet q;
  CHECK_THROWS_AS(q.add(Element{electron}), PreconditionFailed);
  CHECK_THROWS_AS(q.add_m(AtomKind::M("a")), PreconditionFailed);
}
