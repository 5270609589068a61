#pragma once

#include <variant>

#include <json.hpp>

#include "finord/distributor.hpp"

namespace finord {

using json = nlohmann::ordered_json;

// Canonical serialisation: element lists sorted lexicographically, orders
// presented by their cover pairs, relation pair lists sorted. Loading a
// saved document reproduces the same mathematical object (the carrier order
// of a non-canonical input may change to the sorted one).

json poset_to_json(const FinitePoset& p);
json lattice_to_json(const FinDistLattice& l);
json distributor_to_json(const Distributor& r);
json map_to_json(const MonotoneMap& f);

// `base_dir` resolves nested path references ("source": "other.json").
FinitePoset poset_from_json(const json& doc, const std::string& base_dir = {});
FinDistLattice lattice_from_json(const json& doc, const std::string& base_dir = {});
Distributor distributor_from_json(const json& doc, const std::string& base_dir = {});
MonotoneMap map_from_json(const json& doc, const std::string& base_dir = {});

using Document = std::variant<FinitePoset, FinDistLattice, Distributor, MonotoneMap>;

Document load_document(const std::string& path);
json document_to_json(const Document& doc);

/// dump(2) with a trailing newline; the byte-stable output format.
std::string to_canonical_text(const json& doc);

}  // namespace finord
