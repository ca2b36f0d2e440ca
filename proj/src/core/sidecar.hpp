#pragma once

#include <string>
#include <string_view>

#include "core/formula.hpp"

namespace esat {

// Sidecar metadata files carry one row per clause, in clause order:
//   g <toward_zero> <away>   gliding bounds, clause marked symmetric
//   p <gcd> <maxvar>         scaling core data, clause marked symmetric
//   -                        no metadata: a non-symmetric clause
// Row count must equal the formula's clause count.
void load_sidecar(Formula& f, std::string_view text);
void load_sidecar_file(Formula& f, const std::string& path);
std::string write_sidecar(const Formula& f);
void write_sidecar_file(const Formula& f, const std::string& path);

// Headerless DIMACS clause lines (zero-terminated literal runs). Every
// clause is appended to f marked non-symmetric.
void append_nonsym(Formula& f, std::string_view text);
void append_nonsym_file(Formula& f, const std::string& path);

}  // namespace esat
