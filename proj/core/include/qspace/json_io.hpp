#pragma once

// JSON codecs for the on-disk schemas.
//
// QSet:       {"m": {"<kind>": count, ...}, "classical": [<label> | <qset>, ...]}
// FockVector: {"kind": "boson"|"fermion",
//              "terms": [{"coeff": [re, im], "occ": {"<levelIndex>": count, ...}}, ...]}

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

#include "qspace/error.hpp"
#include "qspace/fock.hpp"
#include "qspace/qset.hpp"

namespace qspace::io {

class ParseError : public Error {
 public:
  using Error::Error;
};

nlohmann::json to_json(const qset::QSet& q);
qset::QSet qset_from_json(const nlohmann::json& j);

nlohmann::json to_json(fock::Statistics kind, const fock::FockVector& v);
std::pair<fock::Statistics, fock::FockVector> fock_from_json(const nlohmann::json& j);

std::string statistics_name(fock::Statistics kind);
fock::Statistics statistics_from_name(const std::string& name);

}  // namespace qspace::io
