#pragma once

#include "knotfold/laurent.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace knotfold {

enum class FamilyKind { torus, double_twist };

/// torus: T(m, n) with 2 <= m < n coprime, crossing number n(m - 1).
/// double_twist: twist regions of m = 2a and n = 2b half-twists, 1 <= a <= b,
/// whose standard diagram has all m + n crossings positive.
struct FamilySpec {
  FamilyKind kind = FamilyKind::torus;
  int m = 0;
  int n = 0;

  int crossing_number() const;
  std::string id() const;       // T2_3, D2_4
  std::string payload() const;  // torus:2,3, double_twist:2,4
  /// Tag used for the class split: the knot type is alternating (T(2, n) and
  /// every two-bridge knot).
  bool alternating() const;
};

/// Members with crossing number <= limit, ordered by (crossing number, m, n).
std::vector<FamilySpec> enumerate_family(FamilyKind kind, int limit);

/// Parses `torus:m,n` or `double_twist:m,n`. Throws Error(UnknownFormat).
FamilySpec parse_family_payload(std::string_view text);
FamilyKind parse_family_kind(std::string_view text);

/// Closed form for torus knots; two-state tangle recursion for double twists.
LaurentPolynomial family_jones(const FamilySpec& spec);

/// Bracket of double_twist_diagram(m, n), from the linear recursion on the
/// two basis tangles. Linear in m + n; agrees with the sweep.
LaurentPolynomial double_twist_bracket(int m, int n);

}  // namespace knotfold
