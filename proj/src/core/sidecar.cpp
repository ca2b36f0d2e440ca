#include "core/sidecar.hpp"

#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace esat {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

void load_sidecar(Formula& f, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  size_t row = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank line
    if (kind == "c") continue;    // comment row
    if (row >= f.num_clauses())
      throw Error("load_sidecar: more rows than clauses (" + std::to_string(f.num_clauses()) + ")");
    ClauseMeta m;
    if (kind == "-") {
      m.symmetric = false;
    } else if (kind == "g") {
      GlideBounds gb;
      if (!(ls >> gb.toward_zero >> gb.away) || gb.toward_zero < 0 || gb.away < 0)
        throw Error("load_sidecar: malformed 'g' row " + std::to_string(row + 1));
      m.glide = gb;
    } else if (kind == "p") {
      ScaleCore sc;
      if (!(ls >> sc.gcd >> sc.maxvar) || sc.gcd <= 0 || sc.maxvar <= 0)
        throw Error("load_sidecar: malformed 'p' row " + std::to_string(row + 1));
      m.scale = sc;
    } else {
      throw Error("load_sidecar: unknown row kind '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra) throw Error("load_sidecar: trailing tokens on row " + std::to_string(row + 1));
    f.meta(row) = m;
    ++row;
  }
  if (row != f.num_clauses())
    throw Error("load_sidecar: " + std::to_string(row) + " rows for " +
                std::to_string(f.num_clauses()) + " clauses");
}

void load_sidecar_file(Formula& f, const std::string& path) { load_sidecar(f, slurp(path)); }

std::string write_sidecar(const Formula& f) {
  std::ostringstream out;
  for (size_t i = 0; i < f.num_clauses(); ++i) {
    const ClauseMeta& m = f.meta(i);
    if (m.glide)
      out << "g " << m.glide->toward_zero << ' ' << m.glide->away << '\n';
    else if (m.scale)
      out << "p " << m.scale->gcd << ' ' << m.scale->maxvar << '\n';
    else
      out << "-\n";
  }
  return out.str();
}

void write_sidecar_file(const Formula& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << write_sidecar(f);
  if (!out) throw Error("write failed for '" + path + "'");
}

void append_nonsym(Formula& f, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Clause cur;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    long v = 0;
    try {
      size_t pos = 0;
      v = std::stol(tok, &pos);
      if (pos != tok.size()) throw Error("append_nonsym: bad token '" + tok + "'");
    } catch (const std::exception&) {
      throw Error("append_nonsym: bad token '" + tok + "'");
    }
    if (v == 0) {
      ClauseMeta m;
      m.symmetric = false;
      f.add_clause(cur, m);
      cur.clear();
    } else {
      cur.push_back(static_cast<Lit>(v));
    }
  }
  if (!cur.empty()) throw Error("append_nonsym: unterminated clause");
}

void append_nonsym_file(Formula& f, const std::string& path) { append_nonsym(f, slurp(path)); }

}  // namespace esat
