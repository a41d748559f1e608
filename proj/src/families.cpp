#include "knotfold/families.hpp"

#include "knotfold/bracket.hpp"
#include "knotfold/diagram_builder.hpp"
#include "knotfold/error.hpp"
#include "knotfold/jones.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace knotfold {

int FamilySpec::crossing_number() const { return kind == FamilyKind::torus ? n * (m - 1) : m + n; }

std::string FamilySpec::id() const {
  return (kind == FamilyKind::torus ? "T" : "D") + std::to_string(m) + "_" + std::to_string(n);
}

std::string FamilySpec::payload() const {
  return (kind == FamilyKind::torus ? "torus:" : "double_twist:") + std::to_string(m) + "," + std::to_string(n);
}

bool FamilySpec::alternating() const { return kind == FamilyKind::double_twist || m == 2; }

std::vector<FamilySpec> enumerate_family(FamilyKind kind, int limit) {
  std::vector<FamilySpec> out;
  if (kind == FamilyKind::torus) {
    for (int m = 2; m <= limit; ++m)
      for (int n = m + 1; n * (m - 1) <= limit; ++n)
        if (std::gcd(m, n) == 1) out.push_back({kind, m, n});
  } else {
    for (int a = 1; 4 * a <= limit; ++a)
      for (int b = a; 2 * a + 2 * b <= limit; ++b) out.push_back({kind, 2 * a, 2 * b});
  }
  std::stable_sort(out.begin(), out.end(), [](const FamilySpec& x, const FamilySpec& y) {
    return x.crossing_number() < y.crossing_number();
  });
  return out;
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "torus") return FamilyKind::torus;
  if (text == "double_twist" || text == "double-twist") return FamilyKind::double_twist;
  throw Error(ErrorKind::UnknownFormat, "unknown family '" + std::string(text) + "'");
}

FamilySpec parse_family_payload(std::string_view text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',');
  if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon)
    throw Error(ErrorKind::UnknownFormat, "family payload must look like kind:m,n");
  FamilySpec spec;
  spec.kind = parse_family_kind(text.substr(0, colon));
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw Error(ErrorKind::NonInteger, "family parameter '" + std::string(s) + "' is not an integer");
    return v;
  };
  spec.m = number(text.substr(colon + 1, comma - colon - 1));
  spec.n = number(text.substr(comma + 1));
  return spec;
}

LaurentPolynomial double_twist_bracket(int m, int n) {
  if (m < 0 || n < 0) throw Error(ErrorKind::MalformedInput, "twist counts must be nonnegative");
  const LaurentPolynomial a = LaurentPolynomial::monomial(Variable::A, 1, 1);
  const LaurentPolynomial a_inv = LaurentPolynomial::monomial(Variable::A, 1, -1);
  const LaurentPolynomial& delta = loop_value();
  const LaurentPolynomial keep = a_inv + a * delta;
  // x, y: coefficients of the two basis tangles (horizontal and vertical arcs).
  LaurentPolynomial x = LaurentPolynomial::constant(Variable::A, 1);
  LaurentPolynomial y(Variable::A);
  for (int i = 0; i < m; ++i) {
    LaurentPolynomial nx = a_inv * x;
    y = a * x + keep * y;
    x = std::move(nx);
  }
  for (int i = 0; i < n; ++i) {
    LaurentPolynomial nx = keep * x + a * y;
    y = a_inv * y;
    x = std::move(nx);
  }
  return x + y * delta;
}

LaurentPolynomial family_jones(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::torus) return jones_torus(spec.m, spec.n);
  const int w = writhe(double_twist_diagram(spec.m, spec.n));
  return jones_from_bracket(double_twist_bracket(spec.m, spec.n), w);
}

}  // namespace knotfold
