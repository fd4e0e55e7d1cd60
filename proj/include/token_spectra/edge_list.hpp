#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "token_spectra/graph.hpp"

namespace token_spectra {

// Edge-list text format: "n m" then m lines "u v" (0-indexed, u < v), LF
// line endings. Lines starting with '#' are comments and are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
Graph parse_edge_list(const std::string& text);

// Writes the canonical form, preceded by the given comment lines ("# ...").
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace token_spectra
