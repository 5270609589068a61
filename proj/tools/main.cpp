// Command-line front end: JSON documents in, JSON/DOT/reports out.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "finord/dot.hpp"
#include "finord/json_io.hpp"
#include "finord/karoubi.hpp"
#include "finord/verify.hpp"

namespace {

using namespace finord;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailure = 3;

FinitePoset load_poset(const std::string& path) {
  Document doc = load_document(path);
  if (auto* p = std::get_if<FinitePoset>(&doc)) return *p;
  if (auto* l = std::get_if<FinDistLattice>(&doc)) return l->order();
  fail(errc::parse_error, path + ": expected a poset document");
}

FinDistLattice load_lattice(const std::string& path) {
  Document doc = load_document(path);
  if (auto* l = std::get_if<FinDistLattice>(&doc)) return *l;
  if (auto* p = std::get_if<FinitePoset>(&doc)) return FinDistLattice::from_poset(*p);
  fail(errc::parse_error, path + ": expected a lattice document");
}

// `mode_override` replaces the document's validation mode when nonempty.
Distributor load_distributor(const std::string& path, const std::string& mode_override = {}) {
  if (!mode_override.empty()) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open file: " + path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      fail(errc::parse_error, path + ": " + e.what());
    }
    doc["mode"] = mode_override;
    return distributor_from_json(doc, std::filesystem::path(path).parent_path().string());
  }
  Document doc = load_document(path);
  if (auto* r = std::get_if<Distributor>(&doc)) return *r;
  fail(errc::parse_error, path + ": expected a distributor document");
}

MonotoneMap load_map(const std::string& path) {
  Document doc = load_document(path);
  if (auto* f = std::get_if<MonotoneMap>(&doc)) return *f;
  fail(errc::parse_error, path + ": expected a map document");
}

void emit(const json& doc) { std::cout << to_canonical_text(doc); }

json witness_array(const FinitePoset& p, const std::pair<int, int>& w) {
  return json::array({p.label(w.first), p.label(w.second)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finord: finite posets, distributive lattices, and monotone relations"};
  app.require_subcommand(1);

  std::string in_path, second_path, left_label, right_label;
  std::string mode;
  int bound = 16;
  int max_size = 3;
  std::uint64_t seed = 0;
  int exit_code = kExitOk;

  auto limits = [&bound] {
    SizeLimits l;
    l.max_base = bound;
    return l;
  };

  auto* spec_cmd = app.add_subcommand("spec", "poset of join-irreducibles of a lattice");
  spec_cmd->add_option("lattice", in_path, "lattice document")->required();
  spec_cmd->callback([&] { emit(poset_to_json(join_irreducibles(load_lattice(in_path)))); });

  auto* downsets_cmd = app.add_subcommand("downsets", "lattice of down-sets of a poset");
  downsets_cmd->add_option("poset", in_path, "poset document")->required();
  downsets_cmd->add_option("--bound", bound, "largest allowed carrier");
  downsets_cmd->callback(
      [&] { emit(lattice_to_json(downset_lattice(load_poset(in_path), limits()).lattice)); });

  auto* boole_cmd = app.add_subcommand("booleanize", "embed a lattice into a Boolean algebra");
  boole_cmd->add_option("lattice", in_path, "lattice document")->required();
  boole_cmd->add_option("--bound", bound, "largest allowed carrier");
  boole_cmd->callback([&] {
    Booleanization b = booleanize(load_lattice(in_path), limits());
    json doc;
    doc["kind"] = "booleanization";
    doc["base"] = lattice_to_json(b.base);
    doc["boole"] = lattice_to_json(b.boole.lattice);
    json embed = json::object();
    json retract = json::object();
    std::vector<std::string> base_labels = b.base.order().labels();
    std::sort(base_labels.begin(), base_labels.end());
    for (const std::string& l : base_labels)
      embed[l] = b.boole.lattice.label(b.embed(b.base.index_of(l)));
    std::vector<std::string> boole_labels = b.boole.lattice.order().labels();
    std::sort(boole_labels.begin(), boole_labels.end());
    for (const std::string& l : boole_labels)
      retract[l] = b.base.label(b.retract(b.boole.lattice.index_of(l)));
    doc["embed"] = embed;
    doc["retract"] = retract;
    emit(doc);
  });

  auto* subtract_cmd =
      app.add_subcommand("subtract", "co-Heyting subtraction subtract(x, y) in a lattice");
  subtract_cmd->add_option("lattice", in_path, "lattice document")->required();
  subtract_cmd->add_option("x", left_label, "element to subtract")->required();
  subtract_cmd->add_option("y", right_label, "element to subtract from")->required();
  subtract_cmd->callback([&] {
    FinDistLattice l = load_lattice(in_path);
    int x = l.index_of(left_label);
    int y = l.index_of(right_label);
    int via_boole = coheyting_via_split(l, x, y);
    if (via_boole != coheyting_subtract_bruteforce(l, x, y))
      fail(errc::internal_verification_failure, "the two subtraction routes disagree");
    json doc;
    doc["kind"] = "result";
    doc["op"] = "subtract";
    doc["left"] = left_label;
    doc["right"] = right_label;
    doc["value"] = l.label(via_boole);
    emit(doc);
  });

  auto* compose_cmd = app.add_subcommand("compose", "relational composite of two distributors");
  compose_cmd->add_option("first", in_path, "distributor document")->required();
  compose_cmd->add_option("second", second_path, "distributor document")->required();
  compose_cmd->add_option("--mode", mode, "override the documents' validation mode")
      ->check(CLI::IsMember({"strict", "closure"}));
  compose_cmd->callback([&] {
    emit(distributor_to_json(
        compose(load_distributor(in_path, mode), load_distributor(second_path, mode))));
  });

  auto* adjoint_cmd =
      app.add_subcommand("check-adjoint", "is the first distributor left adjoint to the second");
  adjoint_cmd->add_option("left", in_path, "distributor document")->required();
  adjoint_cmd->add_option("right", second_path, "distributor document")->required();
  adjoint_cmd->add_option("--mode", mode, "override the documents' validation mode")
      ->check(CLI::IsMember({"strict", "closure"}));
  adjoint_cmd->callback([&] {
    Distributor phi = load_distributor(in_path, mode);
    Distributor psi = load_distributor(second_path, mode);
    AdjointReport report = check_adjoint(phi, psi);
    json doc;
    doc["kind"] = "report";
    doc["check"] = "adjoint";
    doc["adjoint"] = report.adjoint;
    if (report.unit_witness)
      doc["unit_witness"] = witness_array(phi.source(), *report.unit_witness);
    if (report.counit_witness)
      doc["counit_witness"] = witness_array(phi.target(), *report.counit_witness);
    emit(doc);
  });

  auto* split_cmd = app.add_subcommand("split", "split an idempotent distributor through a poset");
  split_cmd->add_option("distributor", in_path, "distributor document")->required();
  split_cmd->add_option("--bound", bound, "largest allowed carrier");
  split_cmd->add_option("--mode", mode, "override the document's validation mode")
      ->check(CLI::IsMember({"strict", "closure"}));
  split_cmd->callback([&] {
    SplitTriple triple = split_idempotent(load_distributor(in_path, mode), limits());
    json doc;
    doc["kind"] = "split";
    doc["idempotent"] = distributor_to_json(triple.idem);
    doc["mid"] = poset_to_json(triple.mid);
    doc["forward"] = distributor_to_json(triple.forward);
    doc["backward"] = distributor_to_json(triple.backward);
    emit(doc);
  });

  auto* patch_cmd = app.add_subcommand("patch", "discretisation of a poset with its inclusion");
  patch_cmd->add_option("poset", in_path, "poset document")->required();
  patch_cmd->callback([&] {
    PatchPresentation p = patch(load_poset(in_path));
    json doc;
    doc["kind"] = "patch";
    doc["space"] = poset_to_json(p.space);
    doc["inclusion"] = map_to_json(p.inclusion);
    emit(doc);
  });

  auto* vietoris_cmd = app.add_subcommand("vietoris", "up-sets of a poset under reverse inclusion");
  vietoris_cmd->add_option("poset", in_path, "poset document")->required();
  vietoris_cmd->add_option("--bound", bound, "largest allowed carrier");
  vietoris_cmd->callback(
      [&] { emit(poset_to_json(vietoris(load_poset(in_path), limits()).poset)); });

  auto* pmorphism_cmd = app.add_subcommand("pmorphism", "bounded-morphism check for a map");
  pmorphism_cmd->add_option("map", in_path, "map document")->required();
  pmorphism_cmd->callback([&] {
    MonotoneMap g = load_map(in_path);
    PMorphismReport report = p_morphism_check(g);
    json doc;
    doc["kind"] = "report";
    doc["check"] = "pmorphism";
    doc["pmorphism"] = report.is_p_morphism;
    if (report.witness) {
      doc["witness"] = json::array(
          {g.source().label(report.witness->first), g.target().label(report.witness->second)});
    }
    emit(doc);
  });

  auto* dot_cmd = app.add_subcommand("dot", "cover-pair diagram of a poset or lattice as DOT");
  dot_cmd->add_option("document", in_path, "poset or lattice document")->required();
  dot_cmd->callback([&] { std::cout << dot_emit(load_poset(in_path)); });

  auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive property suites");
  verify_cmd->add_option("--max-size", max_size, "largest carrier (0..5)");
  verify_cmd->add_option("--seed", seed, "seed for the randomised suites");
  verify_cmd->callback([&] {
    VerifyReport report = verify_suite(max_size, seed);
    std::cout << format_report(report, max_size, seed);
    if (!report.all_passed()) exit_code = kExitVerifyFailure;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return exit_code;
}
