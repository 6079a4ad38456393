#pragma once

// Cayley table text format.
//
//   line 1:        the order n
//   lines 2..n+1:  n space-separated element indices per line
//   optional:      a trailing "# name" comment line
//
// write_cayley(read_cayley(text)) reproduces the input byte for byte
// (including the comment when present).

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "finalg/group.hpp"

namespace finalg {

struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline FiniteGroup read_cayley(std::istream& in, int cap = kGroupOrderCap) {
  std::string line;
  if (!std::getline(in, line)) throw format_error("cayley: empty input");
  int n = 0;
  {
    std::istringstream h(line);
    if (!(h >> n) || n < 1) throw format_error("cayley: bad order line");
    std::string rest;
    if (h >> rest) throw format_error("cayley: trailing tokens on order line");
  }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw format_error("cayley: missing row " + std::to_string(i));
    std::istringstream r(line);
    for (int j = 0; j < n; ++j)
      if (!(r >> rows[i][j]))
        throw format_error("cayley: short row " + std::to_string(i));
    std::string rest;
    if (r >> rest) throw format_error("cayley: long row " + std::to_string(i));
  }
  std::string name;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') throw format_error("cayley: unexpected trailing line");
    size_t s = line.find_first_not_of(" \t", 1);
    name = s == std::string::npos ? "" : line.substr(s);
  }
  return validate_group(rows, name, cap);
}

inline FiniteGroup read_cayley(const std::string& text, int cap = kGroupOrderCap) {
  std::istringstream in(text);
  return read_cayley(in, cap);
}

inline void write_cayley(std::ostream& out, const FiniteGroup& G) {
  out << G.n << "\n";
  for (int i = 0; i < G.n; ++i) {
    for (int j = 0; j < G.n; ++j) {
      if (j) out << ' ';
      out << G.op(i, j);
    }
    out << "\n";
  }
  if (!G.name.empty()) out << "# " << G.name << "\n";
}

inline std::string write_cayley(const FiniteGroup& G) {
  std::ostringstream out;
  write_cayley(out, G);
  return out.str();
}

}  // namespace finalg
