#include "finord/dot.hpp"

#include <sstream>

namespace finord {

namespace {

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string dot_emit(const FinitePoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i) out << "  " << quoted(p.label(i)) << ";\n";
  for (auto [x, y] : p.hasse())
    out << "  " << quoted(p.label(x)) << " -> " << quoted(p.label(y)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_emit(const FinDistLattice& l) { return dot_emit(l.order()); }

}  // namespace finord
