#include "qspace/json_io.hpp"

#include <charconv>

namespace qspace::io {

using nlohmann::json;

json to_json(const qset::QSet& q) {
  json m = json::object();
  for (const auto& [kind, count] : q.m_part()) m[kind] = count;
  json classical = json::array();
  for (const auto& member : q.classical_part()) {
    if (const auto* atom = std::get_if<qset::AtomKind>(&member)) {
      classical.push_back(atom->id());
    } else {
      classical.push_back(to_json(std::get<qset::QSet>(member)));
    }
  }
  return json{{"m", std::move(m)}, {"classical", std::move(classical)}};
}

qset::QSet qset_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("q-set: expected an object");
  qset::QSet out;
  if (j.contains("m")) {
    const json& m = j.at("m");
    if (!m.is_object()) throw ParseError("q-set: \"m\" must map kinds to counts");
    for (const auto& [kind, count] : m.items()) {
      if (!count.is_number_unsigned() || count.get<std::uint64_t>() == 0) {
        throw ParseError("q-set: count for kind '" + kind + "' must be a positive integer");
      }
      out.add_m(qset::AtomKind::m(kind), count.get<std::uint64_t>());
    }
  }
  if (j.contains("classical")) {
    const json& classical = j.at("classical");
    if (!classical.is_array()) throw ParseError("q-set: \"classical\" must be an array");
    for (const json& entry : classical) {
      if (entry.is_string()) {
        out.add(qset::Element{qset::AtomKind::M(entry.get<std::string>())});
      } else if (entry.is_object()) {
        out.add(qset::Element{qset_from_json(entry)});
      } else {
        throw ParseError("q-set: classical members are labels or nested q-sets");
      }
    }
  }
  return out;
}

std::string statistics_name(fock::Statistics kind) {
  return kind == fock::Statistics::boson ? "boson" : "fermion";
}

fock::Statistics statistics_from_name(const std::string& name) {
  if (name == "boson") return fock::Statistics::boson;
  if (name == "fermion") return fock::Statistics::fermion;
  throw ParseError("unknown statistics '" + name + "' (expected boson or fermion)");
}

json to_json(fock::Statistics kind, const fock::FockVector& v) {
  json terms = json::array();
  for (const auto& [occ, coeff] : v.terms()) {
    json occ_json = json::object();
    for (const auto& [index, count] : occ.support()) {
      occ_json[std::to_string(index)] = count;
    }
    terms.push_back(json{{"coeff", {coeff.real(), coeff.imag()}}, {"occ", std::move(occ_json)}});
  }
  return json{{"kind", statistics_name(kind)}, {"terms", std::move(terms)}};
}

std::pair<fock::Statistics, fock::FockVector> fock_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("terms")) {
    throw ParseError("state vector: expected {\"kind\": ..., \"terms\": [...]}");
  }
  fock::Statistics kind = statistics_from_name(j.at("kind").get<std::string>());
  fock::FockVector v;
  for (const json& term : j.at("terms")) {
    if (!term.contains("coeff") || !term.contains("occ")) {
      throw ParseError("state vector: each term needs \"coeff\" and \"occ\"");
    }
    const json& coeff = term.at("coeff");
    if (!coeff.is_array() || coeff.size() != 2) {
      throw ParseError("state vector: \"coeff\" must be [re, im]");
    }
    std::map<fock::LevelIndex, std::uint32_t> counts;
    for (const auto& [key, count] : term.at("occ").items()) {
      fock::LevelIndex index = 0;
      auto [end, err] = std::from_chars(key.data(), key.data() + key.size(), index);
      if (err != std::errc() || end != key.data() + key.size()) {
        throw ParseError("state vector: occupation key '" + key + "' is not a level index");
      }
      if (!count.is_number_unsigned()) {
        throw ParseError("state vector: occupation counts must be positive integers");
      }
      counts[index] = count.get<std::uint32_t>();
    }
    v.accumulate(fock::OccupationMap::from_counts(counts),
                 fock::Complex(coeff[0].get<double>(), coeff[1].get<double>()));
  }
  return {kind, std::move(v)};
}

}  // namespace qspace::io
