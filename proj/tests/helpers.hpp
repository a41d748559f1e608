#pragma once

#include "knotfold/diagram.hpp"
#include "knotfold/error.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace test {

inline std::string data(const std::string& name) { return std::string(KNOTFOLD_TEST_DATA) + "/" + name; }

// Non-comment lines split on ';'.
inline std::vector<std::vector<std::string>> read_rows(const std::string& name) {
  std::ifstream in(data(name));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const auto at = line.find(';', start);
      f.push_back(line.substr(start, at == std::string::npos ? std::string::npos : at - start));
      if (at == std::string::npos) break;
      start = at + 1;
    }
    rows.push_back(std::move(f));
  }
  return rows;
}

struct NamedDiagram {
  std::string name;
  int crossings;
  knotfold::PlanarDiagram diagram;
};

inline std::vector<NamedDiagram> small_knot_diagrams() {
  std::vector<NamedDiagram> out;
  for (const auto& r : read_rows("knots_le6.dt"))
    out.push_back({r[0], std::stoi(r[1]), knotfold::realize_dt(knotfold::parse_dt(r[2]))});
  return out;
}

// Every `step`-th knot of the <= 13 table with at most `max_crossings`.
inline std::vector<NamedDiagram> table_sample(int max_crossings, std::size_t step) {
  std::vector<NamedDiagram> out;
  std::size_t i = 0;
  for (const auto& r : read_rows("knots_le13.dt")) {
    const int n = std::stoi(r[1]);
    if (n > max_crossings || i++ % step) continue;
    out.push_back({r[0], n, knotfold::realize_dt(knotfold::parse_dt(r[2]))});
  }
  return out;
}

template <class F>
knotfold::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const knotfold::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a knotfold::Error");
}

}  // namespace test
