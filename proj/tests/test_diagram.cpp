#include "doctest.h"
#include "helpers.hpp"

#include "knotfold/diagram.hpp"
#include "knotfold/diagram_builder.hpp"
#include "knotfold/jones.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using namespace knotfold;

namespace {

// Realizability by exhaustion: the curve is a 4-valent map with n vertices
// and 2n edges; try every rotation that keeps each strand straight and look
// for one with n + 2 faces.
bool planar_by_exhaustion(const std::vector<int>& evens) {
  const int n = static_cast<int>(evens.size());
  if (n == 0) return true;
  std::vector<int> crossing_of(2 * n);
  for (int i = 0; i < n; ++i) {
    crossing_of[2 * i] = i;              // odd label 2i+1
    crossing_of[std::abs(evens[i]) - 1] = i;  // even label
  }
  std::vector<std::array<int, 2>> visits(n, {-1, -1});
  for (int v = 0; v < 2 * n; ++v) {
    auto& slot = visits[crossing_of[v]];
    slot[slot[0] < 0 ? 0 : 1] = v;
  }
  // dart 2v leaves visit v forward, dart 2v+1 leaves visit v+1 backward
  auto out_dart = [&](int v) { return 2 * v; };
  auto in_dart = [&](int v) { return 2 * ((v + 2 * n - 1) % (2 * n)) + 1; };
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> next(4 * n);
    for (int c = 0; c < n; ++c) {
      const int a = visits[c][0], b = visits[c][1];
      std::array<int, 4> rot = (mask >> c & 1) ? std::array{in_dart(a), in_dart(b), out_dart(a), out_dart(b)}
                                                : std::array{in_dart(a), out_dart(b), out_dart(a), in_dart(b)};
      for (int k = 0; k < 4; ++k) next[rot[k]] = rot[(k + 1) % 4];
    }
    std::vector<bool> seen(4 * n, false);
    int faces = 0;
    for (int d = 0; d < 4 * n; ++d) {
      if (seen[d]) continue;
      ++faces;
      for (int e = d; !seen[e]; e = next[e ^ 1]) seen[e] = true;
    }
    if (faces == n + 2) return true;
  }
  return false;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += std::to_string(x) + " ";
  return s;
}

void check_arc_multiplicity(const PlanarDiagram& d) {
  std::map<int, int> count;
  for (const auto& c : d.crossings())
    for (int a : c.arcs) ++count[a];
  CHECK(count.size() == 2 * d.crossing_count());
  for (const auto& [label, k] : count) CHECK(k == 2);
}

}  // namespace

TEST_CASE("parse_dt validates entries") {
  CHECK(parse_dt("4 6 2").entries == std::vector<int>{4, 6, 2});
  CHECK(parse_dt("  4  -6 2 ").entries == std::vector<int>{4, -6, 2});
  CHECK(parse_dt("").entries.empty());
  CHECK(test::error_kind([] { parse_dt("4 x 2"); }) == ErrorKind::NonInteger);
  CHECK(test::error_kind([] { parse_dt("4 5 2"); }) == ErrorKind::OddEntry);
  CHECK(test::error_kind([] { parse_dt("4 4 2"); }) == ErrorKind::DuplicateOrGap);
  CHECK(test::error_kind([] { parse_dt("4 6 10"); }) == ErrorKind::DuplicateOrGap);
}

TEST_CASE("realize_dt agrees with exhaustive planarity up to six crossings") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> evens(n);
    std::iota(evens.begin(), evens.end(), 1);
    for (int& e : evens) e *= 2;
    int planar = 0;
    do {
      const bool expected = planar_by_exhaustion(evens);
      bool realized = true;
      try {
        check_arc_multiplicity(realize_dt(DTSequence{evens}));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRealizable);
        realized = false;
      }
      INFO("code ", join(evens));
      CHECK(realized == expected);
      planar += expected;
    } while (std::next_permutation(evens.begin(), evens.end()));
    CHECK(planar > 0);
  }
}

TEST_CASE("non-realizable fixture is rejected") {
  CHECK_FALSE(planar_by_exhaustion({4, 6, 8, 10, 2}));
  CHECK(test::error_kind([] { realize_dt(parse_dt("4 6 8 10 2")); }) == ErrorKind::NotRealizable);
}

TEST_CASE("codec operations keep every arc label on exactly two crossing slots") {
  for (const auto& k : test::small_knot_diagrams()) {
    INFO(k.name);
    check_arc_multiplicity(k.diagram);
    check_arc_multiplicity(mirror(k.diagram));
    check_arc_multiplicity(parse_pd(serialize_pd(k.diagram)));
    CHECK(parse_pd(serialize_pd(k.diagram)) == k.diagram);
    CHECK(mirror(mirror(k.diagram)) == k.diagram);
    CHECK(writhe(mirror(k.diagram)) == -writhe(k.diagram));
    CHECK(static_cast<int>(k.diagram.crossing_count()) == k.crossings);
    CHECK(k.diagram.component_count() == 1);
  }
}

TEST_CASE("dt_from_pd inverts realize_dt") {
  for (const auto& k : test::table_sample(13, 97)) {
    INFO(k.name);
    const DTSequence code = dt_from_pd(k.diagram);
    CHECK(realize_dt(code) == k.diagram);
    CHECK(jones(realize_dt(dt_from_pd(mirror(k.diagram)))) == jones(mirror(k.diagram)));
  }
}

TEST_CASE("the two DT sign conventions differ by a mirror") {
  for (const auto& r : test::read_rows("knots_le13.dt")) {
    if (r[0].find('n') == std::string::npos || std::stoi(r[1]) > 9) continue;
    const auto code = parse_dt(r[2]);
    INFO(r[0]);
    CHECK(jones(realize_dt(code, DtSignConvention::b)) == jones(realize_dt(code, DtSignConvention::a)).substitute_inverse());
  }
}

TEST_CASE("parse_pd rejects broken codes") {
  CHECK(test::error_kind([] { parse_pd("X(1,2,3,4)"); }) == ErrorKind::BadArcMultiplicity);
  CHECK(test::error_kind([] { parse_pd("X(6,3,5,2) X(4,2,5,1) X(6,4,1,3)"); }) == ErrorKind::Disconnected);
  CHECK(test::error_kind([] { parse_pd("X(1,5,2"); }) == ErrorKind::MalformedInput);
  CHECK(parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]") == parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"));
}

TEST_CASE("alternation flag matches the table names") {
  std::size_t checked = 0;
  for (const auto& r : test::read_rows("knots_le13.dt")) {
    const bool named_alternating = r[0].find('a') != std::string::npos;
    const auto d = realize_dt(parse_dt(r[2]));
    if (is_alternating(d) != named_alternating) FAIL_CHECK(r[0]);
    ++checked;
  }
  CHECK(checked == 12965);
  CHECK(is_alternating(PlanarDiagram()));
}

TEST_CASE("builder diagrams") {
  const auto t23 = torus_diagram(2, 3);
  CHECK(t23.crossing_count() == 3);
  CHECK(writhe(t23) == 3);
  CHECK(closed_braid(2, {1, 1, 1}) == t23);
  CHECK(closed_braid(3, {1, -2, 1, -2}).component_count() == 1);
  CHECK(torus_diagram(2, 4).component_count() == 2);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      if (m + n == 0) continue;
      const auto d = double_twist_diagram(m, n);
      INFO(m, ",", n);
      CHECK(static_cast<int>(d.crossing_count()) == m + n);
      if (m % 2 == 0 && n % 2 == 0 && m > 0 && n > 0) {
        CHECK(writhe(d) == m + n);
      }
    }
}
