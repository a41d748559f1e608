#pragma once

#include "knotfold/diagram.hpp"

namespace knotfold {

/// Knot signature from the Goeritz matrix of a checkerboard coloring with the
/// Gordon-Litherland correction term. Sign convention: positive knots (for
/// example the right-handed trefoil, Jones q + q^3 - q^4) get a positive
/// signature. Throws Error(Unsupported) on links.
int signature_from_diagram(const PlanarDiagram& d);

}  // namespace knotfold
