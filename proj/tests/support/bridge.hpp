#pragma once

#include <vector>

#include "oracle.hpp"
#include "wucalc/complex.hpp"

namespace bridge {

inline wucalc::Complex to_complex(const std::vector<oracle::Cell>& facets) {
  std::vector<std::vector<wucalc::Vertex>> f;
  for (const auto& c : facets) f.emplace_back(c.begin(), c.end());
  return wucalc::generate_complex(f);
}

inline oracle::Cells to_cells(const wucalc::Complex& c) {
  oracle::Cells out;
  for (const auto& s : c.simplices()) out.emplace_back(s.vertices().begin(), s.vertices().end());
  return out;
}

inline wucalc::Graph to_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  wucalc::Graph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(static_cast<wucalc::Vertex>(v));
  for (auto [a, b] : edges) g.add_edge(static_cast<wucalc::Vertex>(a), static_cast<wucalc::Vertex>(b));
  return g;
}

}  // namespace bridge
