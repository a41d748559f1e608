#pragma once

#include "knotfold/diagram.hpp"

#include <cstddef>
#include <vector>

namespace knotfold {

/// Assembles a PD code from unoriented crossings and wiring.
///
/// Each crossing exposes four ports in counterclockwise order; the
/// over-strand runs either through ports {0, 2} or {1, 3}. Ports and free
/// junction nodes are wired together; build() orients every component,
/// labels arcs in traversal order and emits the PD tuples.
class DiagramBuilder {
 public:
  using Node = std::size_t;

  std::size_t add_crossing(bool over_on_even_ports);
  Node port(std::size_t crossing, int position) const { return 4 * crossing + static_cast<std::size_t>(position); }
  Node junction();
  void connect(Node a, Node b);

  std::size_t crossing_count() const noexcept { return over_even_.size(); }

  /// Throws Error(Disconnected) when a port is left unwired or a crossingless
  /// loop is present.
  PlanarDiagram build() const;

 private:
  std::vector<bool> over_even_;
  std::vector<std::vector<Node>> junction_edges_;
  std::vector<Node> port_edge_;  // partner node of each port, or npos
};

/// Closure of a braid word: entry +i / -i is sigma_i / sigma_i^-1 acting on
/// positions i-1 and i; positive generators give positive crossings.
PlanarDiagram closed_braid(int strands, const std::vector<int>& word);

/// Standard torus diagram: closure of (sigma_1 ... sigma_{p-1})^q.
PlanarDiagram torus_diagram(int p, int q);

/// Double twist diagram: a twist region of `m` half-twists followed by one of
/// `n` half-twists at right angles, closed up into a two-bridge knot or link
/// with m + n crossings and determinant |m*n - 1|. When m and n are both even
/// every crossing is positive. A zero parameter leaves a kinked unknot.
PlanarDiagram double_twist_diagram(int m, int n);

}  // namespace knotfold
