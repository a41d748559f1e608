#include "knotfold/diagram_builder.hpp"

#include "knotfold/error.hpp"

#include <cstdlib>
#include <limits>

namespace knotfold {

namespace {

constexpr std::size_t kJunctionBit = std::size_t{1} << (std::numeric_limits<std::size_t>::digits - 1);
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool is_junction(std::size_t node) { return (node & kJunctionBit) != 0; }

}  // namespace

std::size_t DiagramBuilder::add_crossing(bool over_on_even_ports) {
  over_even_.push_back(over_on_even_ports);
  port_edge_.insert(port_edge_.end(), 4, kNone);
  return over_even_.size() - 1;
}

DiagramBuilder::Node DiagramBuilder::junction() {
  junction_edges_.emplace_back();
  return kJunctionBit | (junction_edges_.size() - 1);
}

void DiagramBuilder::connect(Node a, Node b) {
  auto attach = [&](Node at, Node to) {
    if (is_junction(at)) {
      auto& edges = junction_edges_.at(at & ~kJunctionBit);
      if (edges.size() >= 2) throw Error(ErrorKind::MalformedInput, "junction wired more than twice");
      edges.push_back(to);
    } else {
      auto& slot = port_edge_.at(at);
      if (slot != kNone) throw Error(ErrorKind::MalformedInput, "port wired more than once");
      slot = to;
    }
  };
  attach(a, b);
  attach(b, a);
}

PlanarDiagram DiagramBuilder::build() const {
  const std::size_t ports = port_edge_.size();
  if (ports == 0) return PlanarDiagram();
  for (const auto& edges : junction_edges_)
    if (edges.size() != 2) throw Error(ErrorKind::Disconnected, "junction left dangling");

  // Port at the far end of the wire leaving `port`.
  std::vector<bool> junction_used(junction_edges_.size(), false);
  auto partner = [&](std::size_t port) {
    std::size_t prev = port;
    std::size_t at = port_edge_[port];
    if (at == kNone) throw Error(ErrorKind::Disconnected, "crossing port left unwired");
    while (is_junction(at)) {
      const std::size_t j = at & ~kJunctionBit;
      junction_used[j] = true;
      const auto& edges = junction_edges_[j];
      // Self-loops on a junction are crossingless circles.
      const std::size_t next = edges[0] == prev ? edges[1] : edges[0];
      prev = at;
      at = next;
    }
    return at;
  };

  std::vector<std::size_t> far(ports);
  for (std::size_t p = 0; p < ports; ++p) far[p] = partner(p);
  for (bool used : junction_used)
    if (!used) throw Error(ErrorKind::Disconnected, "crossingless loop in diagram");

  std::vector<int> label(ports, 0);
  std::vector<bool> entry(ports, false);
  int next_label = 1;
  for (std::size_t start = 0; start < ports; ++start) {
    if (label[start] != 0) continue;
    std::size_t at = start;
    do {
      entry[at] = true;
      const std::size_t exit = (at / 4) * 4 + (at % 4 + 2) % 4;
      const std::size_t into = far[exit];
      label[exit] = next_label;
      label[into] = next_label;
      ++next_label;
      at = into;
    } while (at != start);
  }

  std::vector<Crossing> crossings;
  crossings.reserve(over_even_.size());
  for (std::size_t c = 0; c < over_even_.size(); ++c) {
    const std::size_t base = 4 * c;
    const std::size_t under = over_even_[c] ? 1 : 0;
    const std::size_t in = entry[base + under] ? under : under + 2;
    Crossing x;
    for (std::size_t k = 0; k < 4; ++k) x.arcs[k] = label[base + (in + k) % 4];
    crossings.push_back(x);
  }
  return PlanarDiagram(std::move(crossings));
}

PlanarDiagram closed_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(ErrorKind::MalformedInput, "braid needs at least one strand");
  DiagramBuilder b;
  std::vector<DiagramBuilder::Node> bottom(static_cast<std::size_t>(strands));
  for (auto& node : bottom) node = b.junction();
  auto top = bottom;
  for (int g : word) {
    const int i = std::abs(g);
    if (i < 1 || i >= strands) throw Error(ErrorKind::MalformedInput, "braid generator out of range");
    const std::size_t left = static_cast<std::size_t>(i - 1);
    const std::size_t right = static_cast<std::size_t>(i);
    // Ports: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left.
    const std::size_t c = b.add_crossing(g > 0);
    b.connect(top[left], b.port(c, 0));
    b.connect(top[right], b.port(c, 1));
    top[right] = b.port(c, 2);
    top[left] = b.port(c, 3);
  }
  for (std::size_t p = 0; p < bottom.size(); ++p) b.connect(top[p], bottom[p]);
  return b.build();
}

PlanarDiagram torus_diagram(int p, int q) {
  if (p < 2 || q < 1) throw Error(ErrorKind::MalformedInput, "torus diagram needs p >= 2, q >= 1");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>((p - 1) * q));
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) word.push_back(i);
  return closed_braid(p, word);
}

PlanarDiagram double_twist_diagram(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorKind::MalformedInput, "twist counts must be nonnegative");
  if (m == 0 && n == 0) return PlanarDiagram();
  // Four-ended tangle, starting from two parallel horizontal arcs.
  DiagramBuilder b;
  DiagramBuilder::Node nw = b.junction(), ne = b.junction(), sw = b.junction(), se = b.junction();
  b.connect(nw, ne);
  b.connect(sw, se);
  // m half-twists of the two right-hand ends.
  for (int i = 0; i < m; ++i) {
    const std::size_t c = b.add_crossing(true);
    b.connect(ne, b.port(c, 3));
    b.connect(se, b.port(c, 0));
    ne = b.port(c, 2);
    se = b.port(c, 1);
  }
  // n half-twists of the two bottom ends.
  for (int i = 0; i < n; ++i) {
    const std::size_t c = b.add_crossing(false);
    b.connect(sw, b.port(c, 3));
    b.connect(se, b.port(c, 2));
    sw = b.port(c, 0);
    se = b.port(c, 1);
  }
  // Denominator closure.
  b.connect(nw, sw);
  b.connect(ne, se);
  return b.build();
}

}  // namespace knotfold
