#pragma once

#include "knotfold/diagram.hpp"
#include "knotfold/laurent.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace knotfold {

struct KnotRecord {
  std::string id;
  int crossing_number = 0;
  PlanarDiagram diagram;
  bool alternating = true;
  std::optional<int> sigma;
  std::optional<int> s_invariant;
  LaurentPolynomial jones{Variable::q};
  bool mirror_applied = false;
};

/// Which metadata the orientation rule may consult, in order. Skipped or
/// unknown criteria fall through to the next one; the extreme-degree rule is
/// always last.
struct OrientationRule {
  bool use_sigma = true;
  bool use_s = true;
};

/// Returns `r` or its mirror: positive sigma wins, then positive s, then the
/// Jones extreme degree of larger magnitude being positive. Palindromic
/// polynomials keep the input orientation.
KnotRecord canonical_orientation(const KnotRecord& r, const OrientationRule& rule = {});

struct CoefficientVector {
  int min_degree = 0;
  std::vector<std::int64_t> coefficients;

  int max_degree() const { return min_degree + static_cast<int>(coefficients.size()) - 1; }
  LaurentPolynomial to_polynomial() const;
  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// Throws Error(HalfIntegerExponent), Error(VariableMismatch) for A-polynomials
/// and Error(CoefficientOverflow) beyond 64 bits. The zero polynomial maps to
/// an empty vector.
CoefficientVector coeff_vector(const LaurentPolynomial& p);

struct CloudRow {
  std::string id;
  int crossing_number = 0;
  CoefficientVector coefficients;
  bool alternating = true;
  std::optional<int> sigma;
};

CloudRow cloud_row(const KnotRecord& canonical);

/// Inclusive degree range of an aligned cloud.
struct DegreeWindow {
  int min_degree = 0;
  int max_degree = 0;
  std::size_t width() const { return static_cast<std::size_t>(max_degree - min_degree + 1); }
  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

struct AlignedCloud {
  std::vector<std::string> row_ids;
  std::vector<int> crossing_numbers;
  DegreeWindow window;
  std::vector<std::int64_t> matrix;  // row-major, rows() x dimension()
  std::vector<double> norms;
  std::vector<bool> class_flags;  // alternating
  std::vector<std::optional<int>> sigma_values;

  std::size_t rows() const { return row_ids.size(); }
  std::size_t dimension() const { return window.width(); }
  /// -min_degree; may fall outside [0, dimension) when q^0 is not in the window.
  int q0_column() const { return -window.min_degree; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {matrix.data() + i * dimension(), dimension()};
  }
};

/// Family-wide window is the union of the row windows. Throws Error(EmptyFamily).
AlignedCloud align(const std::vector<CloudRow>& family);
/// Aligns into a fixed window. Throws Error(WindowOverflow).
AlignedCloud align(const std::vector<CloudRow>& family, const DegreeWindow& window);
/// Subset of rows, keeping the parent window.
AlignedCloud select_rows(const AlignedCloud& cloud, const std::vector<std::size_t>& indices);

/// Zero-padded copy of `row` in `target`. Throws Error(WindowOverflow).
std::vector<std::int64_t> embed(const CoefficientVector& row, const DegreeWindow& target);
/// Re-embeds an aligned row (or any vector over `from`) into a wider window.
std::vector<double> embed(std::span<const double> values, const DegreeWindow& from, const DegreeWindow& to);

double l2_norm(std::span<const std::int64_t> row);

/// `# min_degree=<m> q0_column=<c>` line, header, then one line per row.
void write_cloud_csv(std::ostream& out, const AlignedCloud& cloud);

}  // namespace knotfold
