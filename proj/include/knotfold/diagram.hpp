#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace knotfold {

/// Dowker-Thistlethwaite code: entry i is the even label paired with the odd
/// label 2i+1. A negative entry marks a crossing whose over/under status is
/// flipped relative to the positive case; which strand that means is set by
/// DtSignConvention.
struct DTSequence {
  std::vector<int> entries;

  std::size_t crossing_count() const noexcept { return entries.size(); }
  friend bool operator==(const DTSequence&, const DTSequence&) = default;
};

/// a: a negative entry means the even-labelled visit is the over-strand
///    (the usual table convention). b: the reverse.
enum class DtSignConvention { a, b };

/// Four arc labels in counterclockwise order, starting from the incoming
/// under-strand (PD convention). Position 2 is the outgoing under-strand and
/// positions 1/3 carry the over-strand.
struct Crossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Visit of an oriented strand to a crossing: which crossing, and the
/// position (0..3) through which the strand enters it.
struct Visit {
  std::size_t crossing = 0;
  int entry = 0;
  bool over() const noexcept { return entry % 2 == 1; }
};

/// Validated planar diagram of a knot or link.
///
/// Crossings are held in ascending order of their first (incoming under)
/// label, so two diagrams with the same crossing tuples compare equal
/// regardless of input order. Over-strand orientations are recovered by
/// tracing components; a component that never passes under is oriented from
/// its lowest arc label.
class PlanarDiagram {
 public:
  /// The 0-crossing unknot.
  PlanarDiagram() = default;
  /// Throws Error(BadArcMultiplicity) or Error(Disconnected).
  explicit PlanarDiagram(std::vector<Crossing> crossings);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int component_count() const noexcept { return components_; }

  /// +1 or -1 under the usual right-hand rule.
  int sign(std::size_t crossing) const { return incoming_over_[crossing] == 3 ? 1 : -1; }
  /// 1 or 3.
  int incoming_over_position(std::size_t crossing) const { return incoming_over_[crossing]; }

  /// Visits of every component in traversal order; each component starts at
  /// the head of its lowest arc label and components are ordered by that label.
  const std::vector<std::vector<Visit>>& traversals() const noexcept { return traversals_; }

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings_ == b.crossings_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> incoming_over_;
  std::vector<std::vector<Visit>> traversals_;
  int components_ = 1;
};

DTSequence parse_dt(std::string_view text);
PlanarDiagram realize_dt(const DTSequence& code, DtSignConvention convention = DtSignConvention::a);
/// DT code of a knot diagram, tracing from the head of the lowest arc label.
DTSequence dt_from_pd(const PlanarDiagram& d, DtSignConvention convention = DtSignConvention::a);

/// Accepts `X(a,b,c,d) X(...)`, square brackets and a `PD[...]` wrapper.
PlanarDiagram parse_pd(std::string_view text);
std::string serialize_pd(const PlanarDiagram& d);

PlanarDiagram mirror(const PlanarDiagram& d);
int writhe(const PlanarDiagram& d);
/// True iff every arc runs from an under-passage to an over-passage.
bool is_alternating(const PlanarDiagram& d);

}  // namespace knotfold
