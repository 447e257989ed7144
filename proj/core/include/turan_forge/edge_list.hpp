#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "turan_forge/graph.hpp"

namespace turan_forge::edge_list {

struct EdgeListData {
  BipartiteGraph graph;
  std::uint64_t p = 0;
  std::string family;
};

// Format:
//   turan-forge v1
//   p=<p> left=<n> right=<n> family=<name>
//   <u> <v>        (0-based, sorted by u then v)
void write(std::ostream& out, const BipartiteGraph& g,
           const std::string& family, std::uint64_t p);

// Throws std::runtime_error with a one-line description on malformed input.
EdgeListData read(std::istream& in);

void write_file(const std::string& path, const BipartiteGraph& g,
                const std::string& family, std::uint64_t p);
EdgeListData read_file(const std::string& path);

}  // namespace turan_forge::edge_list
