#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "driverset/graph.hpp"

namespace driverset {

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

// Edge-list format: first data line "n m", then m lines "i j" with 1-based
// endpoints.  Lines starting with '#' are comments.  Parsing is strict:
// loops, duplicates, out-of-range endpoints and count mismatches are errors.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("edge list, line " + std::to_string(line_no) + ": " + msg);
  };

  int n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n >> m) || (ls >> extra)) fail("expected header 'n m'");
    if (n < 1) fail("vertex count must be positive");
    if (m < 0) fail("edge count must be non-negative");
    break;
  }
  if (n < 0) throw std::invalid_argument("edge list: missing header line");

  std::vector<std::pair<int, int>> edges;
  while (static_cast<int>(edges.size()) < m && std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    int i = 0, j = 0;
    std::string extra;
    if (!(ls >> i >> j) || (ls >> extra)) fail("expected edge 'i j'");
    if (i < 1 || i > n || j < 1 || j > n) fail("endpoint out of range");
    if (i == j) fail("self-loop");
    edges.push_back({i, j});
  }
  if (static_cast<int>(edges.size()) < m)
    throw std::invalid_argument("edge list: fewer edges than declared");
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::is_blank_or_comment(line)) fail("trailing data after declared edges");
  }
  try {
    return Graph(n, std::move(edges), GraphFamily::kCustom);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("edge list: ") + e.what());
  }
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
  return read_edge_list(in);
}

}  // namespace driverset
