#include "qspace/qset.hpp"

#include <algorithm>

namespace qspace::qset {

QSet QSet::of_kind(const AtomKind& kind, std::uint64_t count) {
  QSet q;
  if (count > 0) q.add_m(kind, count);
  return q;
}

QSet& QSet::add_m(const AtomKind& kind, std::uint64_t count) {
  if (!kind.is_micro()) {
    throw PreconditionFailed("add_m: '" + kind.id() + "' is not an m-atom kind");
  }
  if (count > 0) m_part_[kind.id()] += count;
  return *this;
}

QSet& QSet::remove_m(const AtomKind& kind, std::uint64_t count) {
  auto it = m_part_.find(kind.id());
  if (it == m_part_.end() || it->second < count) {
    throw NotAMember("remove_m: fewer than " + std::to_string(count) + " atoms of kind '" +
                     kind.id() + "' present");
  }
  it->second -= count;
  if (it->second == 0) m_part_.erase(it);
  return *this;
}

QSet& QSet::add(Element member) {
  if (const auto* atom = std::get_if<AtomKind>(&member); atom && atom->is_micro()) {
    throw PreconditionFailed("add: m-atoms enter a q-set only via add_m");
  }
  auto pos = std::lower_bound(classical_part_.begin(), classical_part_.end(), member,
                              [](const Element& a, const Element& b) { return compare(a, b) < 0; });
  if (pos == classical_part_.end() || compare(*pos, member) != 0) {
    classical_part_.insert(pos, std::move(member));
  }
  return *this;
}

std::uint64_t QSet::m_count(const AtomKind& kind) const {
  if (!kind.is_micro()) return 0;
  auto it = m_part_.find(kind.id());
  return it == m_part_.end() ? 0 : it->second;
}

bool QSet::has_member(const Element& member) const {
  return std::any_of(classical_part_.begin(), classical_part_.end(),
                     [&](const Element& e) { return compare(e, member) == 0; });
}

std::uint64_t QSet::qcard() const {
  std::uint64_t total = classical_part_.size();
  for (const auto& [kind, count] : m_part_) total += count;
  return total;
}

bool QSet::is_pure() const {
  return classical_part_.empty() && m_part_.size() <= 1;
}

PureQSet::PureQSet(AtomKind kind, std::uint64_t qc) : kind_(std::move(kind)), qcard_(qc) {
  if (!kind_.is_micro()) {
    throw PreconditionFailed("PureQSet: kind '" + kind_.id() + "' is not an m-atom kind");
  }
}

int compare(const QSet& a, const QSet& b) {
  if (a.m_part() != b.m_part()) return a.m_part() < b.m_part() ? -1 : 1;
  const auto& ca = a.classical_part();
  const auto& cb = b.classical_part();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  }
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

int compare(const Element& a, const Element& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (const auto* atom = std::get_if<AtomKind>(&a)) {
    const auto& other = std::get<AtomKind>(b);
    if (*atom == other) return 0;
    return *atom < other ? -1 : 1;
  }
  return compare(std::get<QSet>(a), std::get<QSet>(b));
}

bool operator==(const QSet& a, const QSet& b) { return compare(a, b) == 0; }

bool indistinguishable(const Element& a, const Element& b) {
  // In this model both clauses reduce to structural equality: m-atoms *are*
  // their kinds, and q-sets are their (multiset, members) content.
  return compare(a, b) == 0;
}

bool is_classical(const QSet& q) {
  if (!q.m_part().empty()) return false;
  for (const auto& member : q.classical_part()) {
    if (const auto* nested = std::get_if<QSet>(&member); nested && !is_classical(*nested)) {
      return false;
    }
  }
  return true;
}

bool is_classical(const Element& e) {
  if (const auto* atom = std::get_if<AtomKind>(&e)) return atom->is_classical();
  return is_classical(std::get<QSet>(e));
}

bool identical(const Element& a, const Element& b) {
  if (!is_classical(a) || !is_classical(b)) {
    throw IdentityUndefined("identity statements do not make sense for m-atoms");
  }
  if (a.index() != b.index()) return false;
  return compare(a, b) == 0;
}

std::uint64_t qcard(const QSet& q) { return q.qcard(); }

namespace {

// Everything in z indistinguishable from the atom x; may be empty.
QSet separate_like(const AtomKind& x, const QSet& z) {
  QSet out;
  if (x.is_micro()) {
    if (std::uint64_t n = z.m_count(x); n > 0) out.add_m(x, n);
  } else if (z.has_member(Element{x})) {
    out.add(Element{x});
  }
  return out;
}

}  // namespace

QSet weak_singleton(const AtomKind& x, const QSet& z) {
  QSet out = separate_like(x, z);
  if (out.empty()) {
    throw NotAMember("weak_singleton: nothing in z is indistinguishable from '" + x.id() + "'");
  }
  return out;
}

PureQSet strong_singleton(const AtomKind& kind, const QSet& z) {
  if (!kind.is_micro()) {
    throw PreconditionFailed("strong_singleton: '" + kind.id() + "' is not an m-atom kind");
  }
  if (z.m_count(kind) == 0) {
    throw NotAMember("strong_singleton: no atom of kind '" + kind.id() + "' in z");
  }
  return PureQSet(kind, 1);
}

QSet weak_pair(const AtomKind& x, const AtomKind& y, const QSet& z) {
  QSet fx = separate_like(x, z);
  QSet fy = separate_like(y, z);
  if (fx.empty() && fy.empty()) {
    throw NotAMember("weak_pair: nothing in z is indistinguishable from '" + x.id() + "' or '" +
                     y.id() + "'");
  }
  // Both are sub-q-sets of z separated by kind, so merging never
  // double-counts: per kind the counts are equal or one side is absent.
  QSet out = fx;
  for (const auto& [kind, count] : fy.m_part()) {
    if (out.m_count(AtomKind::m(kind)) == 0) out.add_m(AtomKind::m(kind), count);
  }
  for (const auto& member : fy.classical_part()) out.add(member);
  return out;
}

QSet weak_ordered_pair(const AtomKind& x, const AtomKind& y, const QSet& z) {
  QSet second = weak_pair(x, y, z);  // throws when neither kind matches
  QSet first = separate_like(x, z);  // may be empty when only y matches
  QSet out;
  out.add(Element{first});
  out.add(Element{second});  // collapses when [x]_z == [x,y]_z
  return out;
}

bool validate_quasi_function(const std::vector<std::pair<Element, Element>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (indistinguishable(pairs[i].first, pairs[j].first) &&
          !indistinguishable(pairs[i].second, pairs[j].second)) {
        return false;
      }
    }
  }
  return true;
}

QuasiFunction::QuasiFunction(std::vector<std::pair<Element, Element>> pairs)
    : pairs_(std::move(pairs)) {
  if (!validate_quasi_function(pairs_)) {
    throw InvalidQuasiFunction("quasi-function maps indistinguishable arguments to distinguishable values");
  }
}

QSet permutation_swap(const QSet& x, const AtomKind& kind, const QSet& t) {
  if (!kind.is_micro()) {
    throw PreconditionFailed("permutation_swap: '" + kind.id() + "' is not an m-atom kind");
  }
  std::uint64_t in_x = x.m_count(kind);
  if (in_x == 0) {
    throw PreconditionFailed("permutation_swap: kind '" + kind.id() + "' does not occur in x");
  }
  if (t.m_count(kind) <= in_x) {
    throw PreconditionFailed("permutation_swap: t holds no atom of kind '" + kind.id() +
                             "' outside x");
  }
  // (x - [[z]]_t) u [[w]]_t, performed literally: remove one atom of the
  // kind, then adjoin an indistinguishable one from t.
  QSet out = x;
  out.remove_m(kind, 1);
  out.add_m(kind, 1);
  return out;
}

QSet disjoint_union(const QSet& a, const QSet& b) {
  QSet out = a;
  for (const auto& [kind, count] : b.m_part()) {
    if (out.m_count(AtomKind::m(kind)) > 0) {
      throw PreconditionFailed("disjoint_union: kind '" + kind + "' occurs on both sides");
    }
    out.add_m(AtomKind::m(kind), count);
  }
  for (const auto& member : b.classical_part()) {
    if (out.has_member(member)) {
      throw PreconditionFailed("disjoint_union: shared classical member");
    }
    out.add(member);
  }
  return out;
}

}  // namespace qspace::qset
