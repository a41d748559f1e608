#pragma once

#include "knotfold/diagram.hpp"
#include "knotfold/laurent.hpp"

#include <cstddef>

namespace knotfold {

enum class BracketMode { statesum, sweep };

struct BracketOptions {
  std::size_t statesum_cap = 24;      // crossings
  std::size_t max_states = 1u << 20;  // boundary matchings held at once by the sweep
};

/// Kauffman bracket in A, normalized so the 0-crossing unknot evaluates to 1.
/// Throws Error(CapExceeded) or Error(WidthOverflow).
LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, BracketMode mode = BracketMode::sweep,
                                   const BracketOptions& options = {});

/// The loop value -A^2 - A^-2.
const LaurentPolynomial& loop_value();

}  // namespace knotfold
