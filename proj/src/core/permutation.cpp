#include "core/permutation.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"

namespace esat {

void Permutation::add_mapping(Lit a, Lit b) {
  if (a == 0 || b == 0) throw Error("permutation: literal 0");
  auto put = [&](Lit from, Lit to) {
    auto [it, fresh] = map_.emplace(from, to);
    if (!fresh && it->second != to)
      throw Error("permutation: literal " + std::to_string(from) + " mapped twice");
  };
  put(a, b);
  put(-a, -b);
}

Clause Permutation::apply(const Clause& c) const {
  Clause out;
  out.reserve(c.size());
  for (Lit l : c) out.push_back(apply(l));
  return out;
}

void Permutation::validate() const {
  std::unordered_set<Lit> targets;
  for (const auto& [from, to] : map_) {
    (void)from;
    if (!targets.insert(to).second)
      throw Error("permutation: two literals map to " + std::to_string(to));
  }
}

std::vector<Permutation> parse_generators(std::string_view text) {
  std::vector<Permutation> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string norm;
    norm.reserve(line.size() + 8);
    for (char ch : line) {
      if (ch == ',') ch = ' ';
      if (ch == '(') ch = '[';
      if (ch == ')') ch = ']';
      if (ch == '[' || ch == ']') {
        norm += ' ';
        norm += ch;
        norm += ' ';
      } else {
        norm += ch;
      }
    }
    std::istringstream ls(norm);
    std::string tok;
    Permutation p;
    std::vector<Lit> cycle;
    bool in_cycle = false, any = false;
    while (ls >> tok) {
      if (tok == "c" && !in_cycle && !any) break;  // comment line
      if (tok == "[") {
        if (in_cycle) throw Error("parse_generators: nested cycle");
        in_cycle = true;
        cycle.clear();
        continue;
      }
      if (tok == "]") {
        if (!in_cycle) throw Error("parse_generators: stray ']'");
        if (cycle.size() >= 2)
          for (size_t i = 0; i < cycle.size(); ++i) p.add_mapping(cycle[i], cycle[(i + 1) % cycle.size()]);
        in_cycle = false;
        any = true;
        continue;
      }
      long v = 0;
      try {
        size_t pos = 0;
        v = std::stol(tok, &pos);
        if (pos != tok.size() || v == 0) throw Error("x");
      } catch (const std::exception&) {
        throw Error("parse_generators: bad token '" + tok + "'");
      }
      if (!in_cycle) throw Error("parse_generators: literal outside cycle");
      cycle.push_back(static_cast<Lit>(v));
    }
    if (in_cycle) throw Error("parse_generators: unterminated cycle");
    if (!any) continue;  // blank or comment line
    p.validate();
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Permutation> parse_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generators(buf.str());
}

}  // namespace esat
