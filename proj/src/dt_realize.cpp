// Planar realization of DT codes.
//
// The curve is drawn incrementally as a combinatorial map (rotation system).
// The path so far ends in a dangling tip that sits inside one face. A first
// visit to a crossing just subdivides the path. A second visit has to reach
// the crossing from inside the current face, so the face must touch one of
// the crossing's two corners; the corner taken decides from which side the
// second strand passes. When the face touches both corners the search
// branches (left corner first); the first complete embedding that closes up
// through the starting tip wins. Every inserted edge stays inside a face, so
// any completed map is planar, and exhausting all branches proves the code
// is not realizable.

#include "knotfold/diagram.hpp"
#include "knotfold/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace knotfold {

namespace {

struct Dart {
  int vertex = -1;
  int twin = -1;
  int next = -1;  // successor in the rotation around `vertex`
  int visit = 0;  // 1-based visit index of the strand through this dart
  bool outgoing = false;
};

struct MapState {
  std::vector<Dart> darts;
  int start_dart = -1;  // dart at the starting tip
  int tip_dart = -1;    // dart at the current dangling tip, pointing back
};

class Realizer {
 public:
  explicit Realizer(const DTSequence& code) : n_(code.crossing_count()) {
    crossing_of_.assign(2 * n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      crossing_of_[2 * i + 1] = static_cast<int>(i);
      crossing_of_[static_cast<std::size_t>(std::abs(code.entries[i]))] = static_cast<int>(i);
    }
  }

  std::optional<MapState> run() {
    MapState s;
    // Edge from the starting tip to the current tip.
    s.darts.push_back({tip_vertex(), 1, 0, 0, false});
    s.darts.push_back({tip_vertex(), 0, 1, 1, true});
    s.start_dart = 0;
    s.tip_dart = 1;
    seen_.assign(n_, false);
    return extend(std::move(s), 1);
  }

 private:
  int tip_vertex() const { return static_cast<int>(n_); }

  std::vector<int> face_of(const MapState& s, int dart) const {
    std::vector<int> orbit;
    int d = dart;
    do {
      orbit.push_back(d);
      d = s.darts[static_cast<std::size_t>(s.darts[static_cast<std::size_t>(d)].twin)].next;
    } while (d != dart);
    return orbit;
  }

  // Appends a new dangling edge leaving `vertex` at dart index `out`.
  static int add_dangling(MapState& s, int vertex, int visit) {
    const int out = static_cast<int>(s.darts.size());
    s.darts.push_back({vertex, out + 1, out, visit, true});
    s.darts.push_back({-1, out, out + 1, visit + 1, false});
    return out;
  }

  std::optional<MapState> extend(MapState s, std::size_t visit) {
    if (visit > 2 * n_) {
      // Close up: the tip must share a face with the starting tip.
      for (int d : face_of(s, s.tip_dart))
        if (s.darts[static_cast<std::size_t>(d)].twin == s.start_dart) return s;
      return std::nullopt;
    }
    const int c = crossing_of_[visit];
    const int in = s.tip_dart;
    auto& in_dart = s.darts[static_cast<std::size_t>(in)];
    in_dart.visit = static_cast<int>(visit);
    in_dart.outgoing = false;

    if (!seen_[static_cast<std::size_t>(c)]) {
      seen_[static_cast<std::size_t>(c)] = true;
      in_dart.vertex = c;
      const int out = add_dangling(s, c, static_cast<int>(visit));
      s.darts[static_cast<std::size_t>(in)].next = out;
      s.darts[static_cast<std::size_t>(out)].next = in;
      s.tip_dart = out + 1;
      auto result = extend(std::move(s), visit + 1);
      if (!result) seen_[static_cast<std::size_t>(c)] = false;
      return result;
    }

    // Corners of crossing c that lie on the tip's face, in rotation order.
    std::vector<int> corners;
    for (int d : face_of(s, in)) {
      const int t = s.darts[static_cast<std::size_t>(d)].twin;
      if (s.darts[static_cast<std::size_t>(t)].vertex == c) corners.push_back(t);
    }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());

    for (int e : corners) {
      MapState branch = s;
      auto& darts = branch.darts;
      const int f = darts[static_cast<std::size_t>(e)].next;
      darts[static_cast<std::size_t>(in)].vertex = c;
      darts[static_cast<std::size_t>(e)].next = in;
      darts[static_cast<std::size_t>(in)].next = f;
      const int out = add_dangling(branch, c, static_cast<int>(visit));
      branch.darts[static_cast<std::size_t>(f)].next = out;
      branch.darts[static_cast<std::size_t>(out)].next = e;
      branch.tip_dart = out + 1;
      if (auto result = extend(std::move(branch), visit + 1)) return result;
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::vector<int> crossing_of_;
  std::vector<bool> seen_;
};

}  // namespace

PlanarDiagram realize_dt(const DTSequence& code, DtSignConvention convention) {
  const std::size_t n = code.crossing_count();
  if (n == 0) return PlanarDiagram();

  Realizer realizer(code);
  const auto embedded = realizer.run();
  if (!embedded) throw Error(ErrorKind::NotRealizable, "DT sequence admits no planar embedding");

  const int arcs = static_cast<int>(2 * n);
  auto label = [&](const Dart& d) {
    // Arc t enters visit t; the strand leaving visit t runs along arc t+1.
    return d.outgoing ? (d.visit % arcs) + 1 : d.visit;
  };

  std::vector<int> even_visit(n, 0);
  std::vector<bool> negative(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    even_visit[i] = std::abs(code.entries[i]);
    negative[i] = code.entries[i] < 0;
  }

  std::vector<Crossing> crossings;
  crossings.reserve(n);
  const auto& darts = embedded->darts;
  for (std::size_t c = 0; c < n; ++c) {
    const bool even_over = convention == DtSignConvention::a ? negative[c] : !negative[c];
    const int under_visit = even_over ? static_cast<int>(2 * c + 1) : even_visit[c];
    int start = -1;
    for (std::size_t d = 0; d < darts.size(); ++d) {
      if (darts[d].vertex == static_cast<int>(c) && !darts[d].outgoing && darts[d].visit == under_visit)
        start = static_cast<int>(d);
    }
    Crossing x;
    int d = start;
    for (std::size_t p = 0; p < 4; ++p) {
      x.arcs[p] = label(darts[static_cast<std::size_t>(d)]);
      d = darts[static_cast<std::size_t>(d)].next;
    }
    crossings.push_back(x);
  }
  return PlanarDiagram(std::move(crossings));
}

}  // namespace knotfold
