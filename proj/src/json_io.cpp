#include "finord/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace finord {

namespace {

std::vector<std::string> sorted_labels(const FinitePoset& p) {
  std::vector<std::string> out = p.labels();
  std::sort(out.begin(), out.end());
  return out;
}

json order_to_json(const FinitePoset& p, const char* kind) {
  json doc;
  doc["kind"] = kind;
  doc["elements"] = sorted_labels(p);
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [x, y] : p.hasse()) covers.emplace_back(p.label(x), p.label(y));
  std::sort(covers.begin(), covers.end());
  json leq = json::array();
  for (const auto& [a, b] : covers) leq.push_back(json::array({a, b}));
  doc["leq"] = leq;
  return doc;
}

const json& require_field(const json& doc, const char* field, const char* where) {
  auto it = doc.find(field);
  if (it == doc.end())
    fail(errc::parse_error, std::string(where) + ": missing field \"" + field + "\"");
  return *it;
}

std::string require_kind(const json& doc, const char* where) {
  if (!doc.is_object()) fail(errc::parse_error, std::string(where) + ": expected an object");
  const json& kind = require_field(doc, "kind", where);
  if (!kind.is_string()) fail(errc::parse_error, std::string(where) + ": field \"kind\" must be a string");
  return kind.get<std::string>();
}

std::vector<std::string> parse_elements(const json& doc, const char* where) {
  const json& elements = require_field(doc, "elements", where);
  if (!elements.is_array())
    fail(errc::parse_error, std::string(where) + ": field \"elements\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : elements) {
    if (!e.is_string())
      fail(errc::parse_error, std::string(where) + ": element labels must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const json& value,
                                                             const char* field,
                                                             const char* where) {
  if (!value.is_array())
    fail(errc::parse_error, std::string(where) + ": field \"" + field + "\" must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      fail(errc::parse_error,
           std::string(where) + ": field \"" + field + "\" must hold [label, label] pairs");
    out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return out;
}

FinitePoset order_from_json(const json& doc, const char* where) {
  return FinitePoset::from_pairs(parse_elements(doc, where),
                                 parse_pairs(require_field(doc, "leq", where), "leq", where));
}

// A nested object is either an inline document or a path string.
FinitePoset nested_poset(const json& value, const std::string& base_dir, const char* where) {
  if (value.is_string()) {
    std::filesystem::path path(value.get<std::string>());
    if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
    Document doc = load_document(path.string());
    if (auto* p = std::get_if<FinitePoset>(&doc)) return *p;
    if (auto* l = std::get_if<FinDistLattice>(&doc)) return l->order();
    fail(errc::parse_error, std::string(where) + ": referenced document is not a poset");
  }
  std::string kind = require_kind(value, where);
  if (kind == "poset") return poset_from_json(value, base_dir);
  if (kind == "lattice") return lattice_from_json(value, base_dir).order();
  fail(errc::parse_error, std::string(where) + ": expected a poset, got kind \"" + kind + "\"");
}

}  // namespace

json poset_to_json(const FinitePoset& p) { return order_to_json(p, "poset"); }

json lattice_to_json(const FinDistLattice& l) { return order_to_json(l.order(), "lattice"); }

json distributor_to_json(const Distributor& r) {
  json doc;
  doc["kind"] = "distributor";
  doc["source"] = poset_to_json(r.source());
  doc["target"] = poset_to_json(r.target());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int x = 0; x < r.source().size(); ++x)
    for (int y = 0; y < r.target().size(); ++y)
      if (r.at(x, y)) pairs.emplace_back(r.source().label(x), r.target().label(y));
  std::sort(pairs.begin(), pairs.end());
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back(json::array({a, b}));
  doc["pairs"] = out;
  doc["mode"] = "strict";
  return doc;
}

json map_to_json(const MonotoneMap& f) {
  json doc;
  doc["kind"] = "map";
  doc["source"] = poset_to_json(f.source());
  doc["target"] = poset_to_json(f.target());
  std::vector<std::pair<std::string, std::string>> entries;
  for (int i = 0; i < f.source().size(); ++i)
    entries.emplace_back(f.source().label(i), f.target().label(f(i)));
  std::sort(entries.begin(), entries.end());
  json assignment = json::object();
  for (const auto& [from, to] : entries) assignment[from] = to;
  doc["assignment"] = assignment;
  return doc;
}

FinitePoset poset_from_json(const json& doc, const std::string&) {
  std::string kind = require_kind(doc, "poset document");
  if (kind != "poset")
    fail(errc::parse_error, "poset document: field \"kind\" is \"" + kind + "\", expected \"poset\"");
  return order_from_json(doc, "poset document");
}

FinDistLattice lattice_from_json(const json& doc, const std::string&) {
  std::string kind = require_kind(doc, "lattice document");
  if (kind != "lattice")
    fail(errc::parse_error,
         "lattice document: field \"kind\" is \"" + kind + "\", expected \"lattice\"");
  return FinDistLattice::from_poset(order_from_json(doc, "lattice document"));
}

Distributor distributor_from_json(const json& doc, const std::string& base_dir) {
  std::string kind = require_kind(doc, "distributor document");
  if (kind != "distributor")
    fail(errc::parse_error,
         "distributor document: field \"kind\" is \"" + kind + "\", expected \"distributor\"");
  FinitePoset source = nested_poset(require_field(doc, "source", "distributor document"),
                                    base_dir, "distributor source");
  FinitePoset target = nested_poset(require_field(doc, "target", "distributor document"),
                                    base_dir, "distributor target");
  auto pairs = parse_pairs(require_field(doc, "pairs", "distributor document"), "pairs",
                           "distributor document");
  Distributor::Mode mode = Distributor::Mode::strict;
  if (auto it = doc.find("mode"); it != doc.end()) {
    if (!it->is_string() || (*it != "strict" && *it != "closure"))
      fail(errc::parse_error,
           "distributor document: field \"mode\" must be \"strict\" or \"closure\"");
    if (*it == "closure") mode = Distributor::Mode::closure;
  }
  return Distributor::validate_labels(source, target, pairs, mode);
}

MonotoneMap map_from_json(const json& doc, const std::string& base_dir) {
  std::string kind = require_kind(doc, "map document");
  if (kind != "map")
    fail(errc::parse_error, "map document: field \"kind\" is \"" + kind + "\", expected \"map\"");
  FinitePoset source =
      nested_poset(require_field(doc, "source", "map document"), base_dir, "map source");
  FinitePoset target =
      nested_poset(require_field(doc, "target", "map document"), base_dir, "map target");
  const json& assignment = require_field(doc, "assignment", "map document");
  if (!assignment.is_object())
    fail(errc::parse_error, "map document: field \"assignment\" must be an object");
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& [from, to] : assignment.items()) {
    if (!to.is_string())
      fail(errc::parse_error, "map document: assignment values must be strings");
    entries.emplace_back(from, to.get<std::string>());
  }
  return MonotoneMap::from_labels(source, target, entries);
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
  std::string base_dir = std::filesystem::path(path).parent_path().string();
  std::string kind = require_kind(doc, "document");
  if (kind == "poset") return poset_from_json(doc, base_dir);
  if (kind == "lattice") return lattice_from_json(doc, base_dir);
  if (kind == "distributor") return distributor_from_json(doc, base_dir);
  if (kind == "map") return map_from_json(doc, base_dir);
  fail(errc::parse_error, "document: unknown kind \"" + kind + "\"");
}

json document_to_json(const Document& doc) {
  return std::visit(
      [](const auto& value) -> json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, FinitePoset>) return poset_to_json(value);
        else if constexpr (std::is_same_v<T, FinDistLattice>) return lattice_to_json(value);
        else if constexpr (std::is_same_v<T, Distributor>) return distributor_to_json(value);
        else return map_to_json(value);
      },
      doc);
}

std::string to_canonical_text(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace finord
