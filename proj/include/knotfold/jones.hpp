#pragma once

#include "knotfold/bracket.hpp"
#include "knotfold/diagram.hpp"
#include "knotfold/laurent.hpp"

namespace knotfold {

/// J(q) = (-A^3)^(-w) <D> with A = q^(-1/4). With this choice the
/// right-handed trefoil (all crossings positive) gives q + q^3 - q^4.
LaurentPolynomial jones(const PlanarDiagram& d, BracketMode mode = BracketMode::sweep,
                        const BracketOptions& options = {});

/// Bracket-to-Jones normalization on its own, for callers that evaluate the
/// bracket some other way.
LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe);

/// (q^(1/2) - q^(-1/2)) J0 == q^-1 J+ - q J-, exactly.
bool skein_check(const LaurentPolynomial& jp, const LaurentPolynomial& jm, const LaurentPolynomial& j0);

/// Closed form for the torus knot T(m, n). Throws Error(NotAKnot) when
/// gcd(m, n) > 1.
LaurentPolynomial jones_torus(int m, int n);

/// Jones polynomial of double_twist_diagram(m, n), evaluated by the sweep.
LaurentPolynomial jones_double_twist(int m, int n);

}  // namespace knotfold
