#pragma once

// A concrete finite model of quasi-set theory: collections whose "micro"
// members carry no identity, only a kind and a multiplicity.
//
// Two sorts of atoms exist. m-atoms (Flavor::m) model quantum objects:
// the only observables are their kind label and how many of that kind a
// collection holds. Asking whether two m-atoms are *identical* is a type
// error, enforced at runtime by identical(). M-atoms (Flavor::M) are
// ordinary urelements with decidable identity (label equality).
//
// A QSet stores its m-atom content as a kind -> count multiset and its
// remaining members (M-atoms and nested q-sets) as a structurally ordered,
// deduplicated sequence. There is deliberately no way to iterate m-atoms
// one by one: iteration would impose an ordering, i.e. labels. Because a
// pure q-set *is* its (kind, count) pair, permuting indistinguishable atoms
// in and out of a collection is literally a structural no-op, which is what
// permutation_swap() demonstrates.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qspace/error.hpp"

namespace qspace::qset {

class IdentityUndefined : public Error {
 public:
  using Error::Error;
};
class NotAMember : public Error {
 public:
  using Error::Error;
};
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};
class InvalidQuasiFunction : public Error {
 public:
  using Error::Error;
};

enum class Flavor { m, M };

// An atom as it appears in the API. For Flavor::m the label names the kind
// ("electron"); equality of two m-flavored AtomKinds reads "same kind",
// never "same individual". For Flavor::M the label is the atom's identity.
class AtomKind {
 public:
  AtomKind(std::string id, Flavor flavor) : id_(std::move(id)), flavor_(flavor) {}

  static AtomKind m(std::string id) { return AtomKind(std::move(id), Flavor::m); }
  static AtomKind M(std::string id) { return AtomKind(std::move(id), Flavor::M); }

  const std::string& id() const { return id_; }
  Flavor flavor() const { return flavor_; }
  bool is_micro() const { return flavor_ == Flavor::m; }
  bool is_classical() const { return flavor_ == Flavor::M; }

  friend bool operator==(const AtomKind& a, const AtomKind& b) {
    return a.flavor_ == b.flavor_ && a.id_ == b.id_;
  }
  friend bool operator<(const AtomKind& a, const AtomKind& b) {
    if (a.flavor_ != b.flavor_) return a.flavor_ < b.flavor_;
    return a.id_ < b.id_;
  }

 private:
  std::string id_;
  Flavor flavor_;
};

class QSet;

// A thing the kernel operations can talk about: an atom or a q-set.
using Element = std::variant<AtomKind, QSet>;

class QSet {
 public:
  QSet() = default;

  // The pure q-set of `count` m-atoms of one kind. count == 0 gives the
  // empty q-set.
  static QSet of_kind(const AtomKind& kind, std::uint64_t count);

  // Adds `count` m-atoms of `kind`. Throws PreconditionFailed for M-flavor.
  QSet& add_m(const AtomKind& kind, std::uint64_t count = 1);
  // Removes `count` m-atoms of `kind`; throws NotAMember if fewer are present.
  QSet& remove_m(const AtomKind& kind, std::uint64_t count = 1);
  // Adds an M-atom or a nested q-set. Members are kept structurally ordered
  // and deduplicated. Throws PreconditionFailed for an m-flavored atom.
  QSet& add(Element member);

  // kind id -> count, counts always >= 1.
  const std::map<std::string, std::uint64_t>& m_part() const { return m_part_; }
  // M-atoms and nested q-sets, sorted, no structural duplicates.
  const std::vector<Element>& classical_part() const { return classical_part_; }

  std::uint64_t m_count(const AtomKind& kind) const;
  bool has_member(const Element& member) const;

  std::uint64_t qcard() const;
  bool empty() const { return m_part_.empty() && classical_part_.empty(); }

  // True when every member is an m-atom of a single kind (the empty q-set
  // counts as pure).
  bool is_pure() const;

 private:
  std::map<std::string, std::uint64_t> m_part_;
  std::vector<Element> classical_part_;
};

// A finite pure q-set: one kind, one quasi-cardinal, nothing else to know.
class PureQSet {
 public:
  PureQSet(AtomKind kind, std::uint64_t qcard);

  const AtomKind& kind() const { return kind_; }
  std::uint64_t qcard() const { return qcard_; }
  QSet as_qset() const { return QSet::of_kind(kind_, qcard_); }

 private:
  AtomKind kind_;
  std::uint64_t qcard_;
};

// Total structural order; the basis for canonical member storage.
int compare(const QSet& a, const QSet& b);
int compare(const Element& a, const Element& b);

bool operator==(const QSet& a, const QSet& b);
inline bool operator!=(const QSet& a, const QSet& b) { return !(a == b); }
inline bool operator<(const QSet& a, const QSet& b) { return compare(a, b) < 0; }

// The indistinguishability relation. Atoms: same kind (m) or same label (M).
// Q-sets: equal m-multisets and structurally equal remaining members. An
// equivalence relation; coincides with identical() on classical things.
bool indistinguishable(const Element& a, const Element& b);

// Identity, defined for classical things only: label equality for M-atoms,
// extensional equality for q-sets with no m-atoms in their transitive
// closure. Throws IdentityUndefined whenever an m-atom is involved.
bool identical(const Element& a, const Element& b);

// True iff no m-atom occurs in the transitive closure.
bool is_classical(const QSet& q);
bool is_classical(const Element& e);

std::uint64_t qcard(const QSet& q);

// The sub-q-set [x]_z of everything in z indistinguishable from x.
// Throws NotAMember when nothing in z matches.
QSet weak_singleton(const AtomKind& x, const QSet& z);

// A sub-q-set of z with quasi-cardinal exactly 1 holding *some* atom of the
// given kind. Which one is unknowable; only kind and count are observable.
PureQSet strong_singleton(const AtomKind& kind, const QSet& z);

// The weak pair [x, y]_z: everything in z indistinguishable from x or y.
// Collapses to [x]_z when x and y are indistinguishable. Throws NotAMember
// when neither matches anything in z.
QSet weak_pair(const AtomKind& x, const AtomKind& y, const QSet& z);

// <x, y>_z as the nested q-set [[x]_z, [x,y]_z]. For same-kind m-atoms the
// two components coincide and the structure collapses, making
// <x, y>_z == <y, x>_z a structural fact.
QSet weak_ordered_pair(const AtomKind& x, const AtomKind& y, const QSet& z);

// True iff indistinguishable arguments always map to indistinguishable
// values.
bool validate_quasi_function(const std::vector<std::pair<Element, Element>>& pairs);

// A validated argument -> value pair list. Construction enforces the
// quasi-function condition.
class QuasiFunction {
 public:
  explicit QuasiFunction(std::vector<std::pair<Element, Element>> pairs);

  const std::vector<std::pair<Element, Element>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<Element, Element>> pairs_;
};

// Swaps one `kind` atom of x against an indistinguishable one from t that is
// not accounted for in x: (x - [[z]]_t) u [[w]]_t. The result is structurally
// equal to x. Requires kind to occur in x and t to hold more of it than x.
QSet permutation_swap(const QSet& x, const AtomKind& kind, const QSet& t);

// Union of q-sets with no kind or member in common; quasi-cardinals add.
// Throws PreconditionFailed when the arguments overlap: in a label-free
// model an overlapping same-kind union has no well-defined count.
QSet disjoint_union(const QSet& a, const QSet& b);

}  // namespace qspace::qset
