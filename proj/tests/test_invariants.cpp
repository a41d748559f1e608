#include "doctest.h"
#include "helpers.hpp"

#include "knotfold/bracket.hpp"
#include "knotfold/diagram_builder.hpp"
#include "knotfold/families.hpp"
#include "knotfold/jones.hpp"
#include "knotfold/pointcloud.hpp"
#include "knotfold/signature.hpp"

#include <numeric>

using namespace knotfold;

namespace {

LaurentPolynomial P(const std::string& s) { return LaurentPolynomial::parse(s); }

BigInt at_minus_one(const LaurentPolynomial& j) {
  BigInt v = 0;
  for (const auto& [e, c] : j.terms()) v += (e / 4) % 2 == 0 ? c : BigInt(-c);
  return v;
}

LaurentPolynomial canonical_jones(const PlanarDiagram& d) {
  KnotRecord r;
  r.jones = jones(d);
  return canonical_orientation(r, {false, false}).jones;
}

}  // namespace

TEST_CASE("six-crossing polynomials from both bracket evaluators") {
  const auto expected = test::read_rows("knots_le6_expected.txt");
  const auto knots = test::small_knot_diagrams();
  REQUIRE(expected.size() == knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    INFO(knots[i].name);
    const auto j = jones(knots[i].diagram);
    CHECK(j == jones(knots[i].diagram, BracketMode::statesum));
    const auto want = P(expected[i][1]);
    CHECK((j == want || j == want.substitute_inverse()));
  }
}

TEST_CASE("right-handed trefoil normalization") {
  CHECK(jones(torus_diagram(2, 3)) == P("q+q^3-q^4"));
  CHECK(jones(PlanarDiagram()) == P("1"));
  CHECK(kauffman_bracket(PlanarDiagram()) == LaurentPolynomial::constant(Variable::A, 1));
}

TEST_CASE("statesum and sweep agree on table knots up to twelve crossings") {
  std::size_t n = 0;
  for (const auto& k : test::table_sample(12, 41)) {
    INFO(k.name);
    CHECK(kauffman_bracket(k.diagram, BracketMode::statesum) == kauffman_bracket(k.diagram, BracketMode::sweep));
    ++n;
  }
  CHECK(n > 50);
}

TEST_CASE("evaluator limits") {
  const auto d = torus_diagram(2, 25);
  CHECK(test::error_kind([&] { kauffman_bracket(d, BracketMode::statesum); }) == ErrorKind::CapExceeded);
  BracketOptions tight;
  tight.max_states = 1;
  const auto k = realize_dt(parse_dt("4 10 14 12 2 8 6"));
  CHECK(test::error_kind([&] { kauffman_bracket(k, BracketMode::sweep, tight); }) == ErrorKind::WidthOverflow);
}

TEST_CASE("skein relation on the crossing-change triple") {
  const auto rows = test::read_rows("skein_triple.pd");
  REQUIRE(rows.size() == 3);
  const auto jp = jones(parse_pd(rows[0][1]));
  const auto jm = jones(parse_pd(rows[1][1]));
  const auto j0 = jones(parse_pd(rows[2][1]));
  CHECK(jp == P("q+q^3-q^4"));
  CHECK(jm == P("1"));
  CHECK(parse_pd(rows[2][1]).component_count() == 2);
  CHECK(skein_check(jp, jm, j0));
  CHECK_FALSE(skein_check(jm, jp, j0));
}

TEST_CASE("skein relation on braid-generated triples") {
  // sigma_1^k words differ at one crossing: k+1 (plus), k-1 (minus), k (zero)
  for (int k = 1; k <= 6; ++k) {
    auto word = [](int len) { return std::vector<int>(static_cast<std::size_t>(len), 1); };
    const auto jp = jones(closed_braid(2, word(k + 1)));
    const auto jm = k == 1 ? jones(closed_braid(2, {1, -1})) : jones(closed_braid(2, word(k - 1)));
    const auto j0 = jones(closed_braid(2, word(k)));
    CHECK(skein_check(jp, jm, j0));
  }
}

TEST_CASE("mirror image inverts q") {
  for (const auto& k : test::table_sample(13, 53)) {
    INFO(k.name);
    CHECK(jones(mirror(k.diagram)) == jones(k.diagram).substitute_inverse());
  }
}

TEST_CASE("torus closed form matches the braid closure") {
  for (int m = 2; m <= 4; ++m)
    for (int n = m + 1; n <= 9; ++n) {
      if (std::gcd(m, n) != 1) continue;
      INFO(m, ",", n);
      CHECK(jones_torus(m, n) == jones(torus_diagram(m, n)));
    }
  CHECK(test::error_kind([] { jones_torus(2, 4); }) == ErrorKind::NotAKnot);
}

TEST_CASE("double twist recursion matches the sweep and the state sum") {
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; m + n <= 12; ++n) {
      if (m + n == 0) continue;
      INFO(m, ",", n);
      const auto d = double_twist_diagram(m, n);
      CHECK(double_twist_bracket(m, n) == kauffman_bracket(d));
      if (m + n <= 10 && d.component_count() == 1)
        CHECK(jones_double_twist(m, n) == jones(d, BracketMode::statesum));
    }
  const auto rows = test::small_knot_diagrams();
  CHECK(canonical_jones(double_twist_diagram(2, 2)) == canonical_jones(rows[1].diagram));
  CHECK(canonical_jones(double_twist_diagram(2, 4)) == canonical_jones(rows[4].diagram));
}

TEST_CASE("different diagrams of one knot give one canonical polynomial") {
  const auto t = test::small_knot_diagrams();
  const auto extra = test::read_rows("extras.pd");
  CHECK(canonical_jones(parse_pd(extra[0][2])) == canonical_jones(t[1].diagram));
  CHECK(canonical_jones(torus_diagram(2, 3)) == canonical_jones(t[1].diagram));
  CHECK(canonical_jones(torus_diagram(2, 5)) == canonical_jones(t[3].diagram));
  CHECK(canonical_jones(mirror(t[7].diagram)) == canonical_jones(t[7].diagram));
  CHECK(canonical_jones(closed_braid(3, {1, -2, 1, -2})) == canonical_jones(t[2].diagram));
}

TEST_CASE("signature of known knots") {
  CHECK(signature_from_diagram(PlanarDiagram()) == 0);
  CHECK(signature_from_diagram(torus_diagram(2, 3)) == 2);
  CHECK(signature_from_diagram(torus_diagram(2, 7)) == 6);
  CHECK(signature_from_diagram(torus_diagram(3, 4)) == 6);
  CHECK(signature_from_diagram(torus_diagram(3, 5)) == 8);
  CHECK(test::error_kind([] { signature_from_diagram(torus_diagram(2, 4)); }) == ErrorKind::Unsupported);

  // Seifert matrix of the right-handed trefoil: V + V^T = [[-2, 1], [1, -2]]
  // is negative definite, so |sigma| = 2 for either handedness.
  CHECK(std::abs(signature_from_diagram(realize_dt(parse_dt("4 6 2")))) == 2);

  const std::vector<int> expected_abs = {0, 2, 0, 4, 2, 0, 2, 0};
  const auto t = test::small_knot_diagrams();
  for (std::size_t i = 0; i < t.size(); ++i) {
    KnotRecord r;
    r.jones = jones(t[i].diagram);
    r.diagram = t[i].diagram;
    r.sigma = signature_from_diagram(t[i].diagram);
    CHECK(std::abs(*r.sigma) == expected_abs[i]);
  }
}

TEST_CASE("signature agrees with the alternating state formula and the determinant") {
  // Reduced alternating diagrams: sigma = n_+ + 1 - s_A, where s_A is the
  // loop count of the all-A state, read off the top bracket degree.
  for (const auto& k : test::table_sample(13, 7)) {
    const int sigma = signature_from_diagram(k.diagram);
    INFO(k.name);
    CHECK(signature_from_diagram(mirror(k.diagram)) == -sigma);
    const auto j = jones(k.diagram);
    const BigInt det = abs(at_minus_one(j));
    CHECK((sigma % 4 == 0) == (det % 4 == 1));
    if (k.name.find('a') != std::string::npos) {
      const int n = static_cast<int>(k.diagram.crossing_count());
      int positive = 0;
      for (int c = 0; c < n; ++c) positive += k.diagram.sign(static_cast<std::size_t>(c)) > 0;
      const int top = kauffman_bracket(k.diagram).max_quarter_exponent() / 4;
      const int s_a = (top - n + 2) / 2;
      CHECK(sigma == positive + 1 - s_a);
    }
  }
}
