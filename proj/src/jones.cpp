#include "knotfold/jones.hpp"

#include "knotfold/diagram_builder.hpp"
#include "knotfold/error.hpp"

#include <numeric>

namespace knotfold {

LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int w) {
  // (-A^3)^(-w) = (-1)^w A^(-3w).
  LaurentPolynomial normalized = bracket.shifted(-12 * w);
  if (w % 2 != 0) normalized = -normalized;
  // A^k = q^(-k/4): a stored A exponent 4k becomes a stored q exponent -k.
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(normalized.term_count());
  for (const auto& [e, c] : normalized.terms()) {
    if (e % 4 != 0) throw Error(ErrorKind::HalfIntegerExponent, "bracket with fractional A exponent");
    terms.emplace_back(-e / 4, c);
  }
  return LaurentPolynomial::from_terms(Variable::q, std::move(terms));
}

LaurentPolynomial jones(const PlanarDiagram& d, BracketMode mode, const BracketOptions& options) {
  return jones_from_bracket(kauffman_bracket(d, mode, options), writhe(d));
}

bool skein_check(const LaurentPolynomial& jp, const LaurentPolynomial& jm, const LaurentPolynomial& j0) {
  if (jp.variable() != Variable::q || jm.variable() != Variable::q || j0.variable() != Variable::q) return false;
  const LaurentPolynomial lhs = j0.shifted(2) - j0.shifted(-2);
  const LaurentPolynomial rhs = jp.shifted(-4) - jm.shifted(4);
  return lhs == rhs;
}

LaurentPolynomial jones_torus(int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorKind::MalformedInput, "torus parameters must be >= 2");
  if (std::gcd(m, n) != 1) throw Error(ErrorKind::NotAKnot, "T(" + std::to_string(m) + "," + std::to_string(n) +
                                                                ") has more than one component");
  const auto mono = [](long c, int e) { return LaurentPolynomial::monomial(Variable::q, c, e); };
  const LaurentPolynomial numerator = mono(1, 0) - mono(1, m + 1) - mono(1, n + 1) + mono(1, m + n);
  const LaurentPolynomial denominator = mono(1, 0) - mono(1, 2);
  return numerator.divide_exact(denominator).shifted(4 * ((m - 1) * (n - 1) / 2));
}

LaurentPolynomial jones_double_twist(int m, int n) {
  return jones(double_twist_diagram(m, n), BracketMode::sweep);
}

}  // namespace knotfold
