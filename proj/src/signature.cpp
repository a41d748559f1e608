#include "knotfold/signature.hpp"

#include "knotfold/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <queue>

namespace knotfold {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Corner p of a crossing is the quadrant between positions p and p+1.
struct Faces {
  std::vector<int> corner_face;  // 4 * crossing + corner -> face id
  int count = 0;
};

Faces trace_faces(const PlanarDiagram& d) {
  const std::size_t n = d.crossing_count();
  std::map<int, std::vector<std::size_t>> ends;  // label -> slots 4c+p
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t p = 0; p < 4; ++p) ends[d.crossings()[c].arcs[p]].push_back(4 * c + p);
  auto far_end = [&](std::size_t slot) {
    const auto& e = ends.at(d.crossings()[slot / 4].arcs[slot % 4]);
    return e[0] == slot ? e[1] : e[0];
  };

  Faces f;
  f.corner_face.assign(4 * n, -1);
  for (std::size_t start = 0; start < 4 * n; ++start) {
    if (f.corner_face[start] != -1) continue;
    std::size_t corner = start;
    while (f.corner_face[corner] == -1) {
      f.corner_face[corner] = f.count;
      const std::size_t arc = (corner / 4) * 4 + (corner % 4 + 1) % 4;
      corner = far_end(arc);
    }
    ++f.count;
  }
  return f;
}

// 2-colouring of the faces; faces on either side of an arc differ.
std::vector<int> checkerboard(const PlanarDiagram& d, const Faces& f) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(f.count));
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    for (std::size_t p = 0; p < 4; ++p) {
      const int a = f.corner_face[4 * c + p];
      const int b = f.corner_face[4 * c + (p + 3) % 4];
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
  }
  std::vector<int> colour(static_cast<std::size_t>(f.count), -1);
  for (int s = 0; s < f.count; ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (colour[static_cast<std::size_t>(v)] == -1) {
          colour[static_cast<std::size_t>(v)] = 1 - colour[static_cast<std::size_t>(u)];
          todo.push(v);
        } else if (colour[static_cast<std::size_t>(v)] == colour[static_cast<std::size_t>(u)]) {
          throw Error(ErrorKind::Disconnected, "diagram faces admit no checkerboard colouring");
        }
      }
    }
  }
  return colour;
}

// Signature of a symmetric rational matrix by congruent elimination.
int inertia_signature(std::vector<std::vector<Rational>> m) {
  int sig = 0;
  std::size_t size = m.size();
  while (size > 0) {
    std::size_t pivot = size;
    for (std::size_t i = 0; i < size; ++i)
      if (m[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == size) {
      // Zero diagonal: add a row/column with a nonzero coupling.
      std::size_t i = size, j = size;
      for (std::size_t a = 0; a < size && i == size; ++a)
        for (std::size_t b = a + 1; b < size; ++b)
          if (m[a][b] != 0) {
            i = a;
            j = b;
            break;
          }
      if (i == size) break;  // remaining block is zero
      for (std::size_t k = 0; k < size; ++k) m[i][k] += m[j][k];
      for (std::size_t k = 0; k < size; ++k) m[k][i] += m[k][j];
      pivot = i;
    }
    const Rational p = m[pivot][pivot];
    sig += p > 0 ? 1 : -1;
    for (std::size_t i = 0; i < size; ++i) {
      if (i == pivot || m[i][pivot] == 0) continue;
      const Rational factor = m[i][pivot] / p;
      for (std::size_t k = 0; k < size; ++k) m[i][k] -= factor * m[pivot][k];
    }
    // Drop the pivot row and column (its column is now zero off the pivot).
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pivot));
    --size;
  }
  return sig;
}

int signature_for_colour(const PlanarDiagram& d, const Faces& f, const std::vector<int>& colour, int white) {
  std::vector<int> index(static_cast<std::size_t>(f.count), -1);
  int whites = 0;
  for (int face = 0; face < f.count; ++face)
    if (colour[static_cast<std::size_t>(face)] == white) index[static_cast<std::size_t>(face)] = whites++;

  std::vector<std::vector<Rational>> g(static_cast<std::size_t>(whites),
                                       std::vector<Rational>(static_cast<std::size_t>(whites), 0));
  int mu = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    // Corners 1 and 3 are the quadrants merged by the A-smoothing.
    const bool a_white = colour[static_cast<std::size_t>(f.corner_face[4 * c + 1])] == white;
    const int eta = a_white ? 1 : -1;
    const int wa = index[static_cast<std::size_t>(f.corner_face[4 * c + (a_white ? 1 : 0)])];
    const int wb = index[static_cast<std::size_t>(f.corner_face[4 * c + (a_white ? 3 : 2)])];
    if (wa != wb) {
      g[static_cast<std::size_t>(wa)][static_cast<std::size_t>(wb)] -= eta;
      g[static_cast<std::size_t>(wb)][static_cast<std::size_t>(wa)] -= eta;
    }
    // The oriented smoothing is the A-smoothing at positive crossings. It is
    // of type II when it merges the shaded quadrants.
    const bool oriented_merges_a = d.sign(c) > 0;
    if (oriented_merges_a != a_white) mu += eta;
  }
  for (std::size_t a = 0; a < g.size(); ++a) {
    Rational row = 0;
    for (std::size_t b = 0; b < g.size(); ++b)
      if (a != b) row += g[a][b];
    g[a][a] = -row;
  }
  g.erase(g.begin());
  for (auto& row : g) row.erase(row.begin());
  return inertia_signature(std::move(g)) - mu;
}

}  // namespace

int signature_from_diagram(const PlanarDiagram& d) {
  if (d.component_count() != 1) throw Error(ErrorKind::Unsupported, "signature is computed for knots only");
  if (d.crossing_count() == 0) return 0;
  const Faces f = trace_faces(d);
  const auto colour = checkerboard(d, f);
  const int s0 = signature_for_colour(d, f, colour, 0);
  const int s1 = signature_for_colour(d, f, colour, 1);
  if (s0 != s1) throw Error(ErrorKind::Unsupported, "checkerboard colourings disagree on the signature");
  return s0;
}

}  // namespace knotfold
