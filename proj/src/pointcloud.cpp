#include "knotfold/pointcloud.hpp"

#include "knotfold/error.hpp"
#include "knotfold/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace knotfold {

KnotRecord canonical_orientation(const KnotRecord& r, const OrientationRule& rule) {
  bool flip = false;
  bool decided = false;
  if (rule.use_sigma && r.sigma && *r.sigma != 0) {
    flip = *r.sigma < 0;
    decided = true;
  }
  if (!decided && rule.use_s && r.s_invariant && *r.s_invariant != 0) {
    flip = *r.s_invariant < 0;
    decided = true;
  }
  if (!decided && !r.jones.is_zero()) {
    const int lo = r.jones.min_quarter_exponent();
    const int hi = r.jones.max_quarter_exponent();
    flip = -lo > hi;
  }
  if (!flip) return r;

  KnotRecord m = r;
  m.diagram = mirror(r.diagram);
  m.jones = r.jones.substitute_inverse();
  if (m.sigma) m.sigma = -*m.sigma;
  if (m.s_invariant) m.s_invariant = -*m.s_invariant;
  m.mirror_applied = !r.mirror_applied;
  return m;
}

LaurentPolynomial CoefficientVector::to_polynomial() const {
  return LaurentPolynomial::from_dense(Variable::q, min_degree, coefficients);
}

CoefficientVector coeff_vector(const LaurentPolynomial& p) {
  if (p.variable() != Variable::q) throw Error(ErrorKind::VariableMismatch, "coefficient vectors need a q-polynomial");
  if (!p.has_integral_exponents())
    throw Error(ErrorKind::HalfIntegerExponent, "polynomial has half-integer exponents: " + p.to_string());
  CoefficientVector v;
  if (p.is_zero()) return v;
  v.min_degree = p.min_quarter_exponent() / 4;
  v.coefficients.assign(static_cast<std::size_t>(p.max_quarter_exponent() / 4 - v.min_degree + 1), 0);
  for (const auto& [e, c] : p.terms()) {
    if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
      throw Error(ErrorKind::CoefficientOverflow, "coefficient does not fit in 64 bits");
    v.coefficients[static_cast<std::size_t>(e / 4 - v.min_degree)] = static_cast<std::int64_t>(c);
  }
  return v;
}

CloudRow cloud_row(const KnotRecord& r) {
  return {r.id, r.crossing_number, coeff_vector(r.jones), r.alternating, r.sigma};
}

std::vector<std::int64_t> embed(const CoefficientVector& row, const DegreeWindow& target) {
  std::vector<std::int64_t> out(target.width(), 0);
  if (row.coefficients.empty()) return out;
  if (row.min_degree < target.min_degree || row.max_degree() > target.max_degree)
    throw Error(ErrorKind::WindowOverflow, fmt::format("row degrees [{}, {}] outside window [{}, {}]", row.min_degree,
                                                       row.max_degree(), target.min_degree, target.max_degree));
  std::copy(row.coefficients.begin(), row.coefficients.end(),
            out.begin() + (row.min_degree - target.min_degree));
  return out;
}

std::vector<double> embed(std::span<const double> values, const DegreeWindow& from, const DegreeWindow& to) {
  if (values.size() != from.width()) throw Error(ErrorKind::DimensionMismatch, "vector does not match its window");
  if (from.min_degree < to.min_degree || from.max_degree > to.max_degree)
    throw Error(ErrorKind::WindowOverflow, fmt::format("window [{}, {}] does not fit in [{}, {}]", from.min_degree,
                                                       from.max_degree, to.min_degree, to.max_degree));
  std::vector<double> out(to.width(), 0.0);
  std::copy(values.begin(), values.end(), out.begin() + (from.min_degree - to.min_degree));
  return out;
}

double l2_norm(std::span<const std::int64_t> row) {
  double sum = 0.0;
  for (std::int64_t c : row) sum += static_cast<double>(c) * static_cast<double>(c);
  return std::sqrt(sum);
}

AlignedCloud align(const std::vector<CloudRow>& family) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "cannot align an empty family");
  DegreeWindow w{std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (const auto& r : family) {
    if (r.coefficients.coefficients.empty()) continue;
    w.min_degree = std::min(w.min_degree, r.coefficients.min_degree);
    w.max_degree = std::max(w.max_degree, r.coefficients.max_degree());
  }
  if (w.min_degree > w.max_degree) w = {0, 0};  // only zero polynomials
  return align(family, w);
}

AlignedCloud align(const std::vector<CloudRow>& family, const DegreeWindow& window) {
  AlignedCloud cloud;
  cloud.window = window;
  const std::size_t d = window.width();
  cloud.matrix.reserve(family.size() * d);
  for (const auto& r : family) {
    const auto padded = embed(r.coefficients, window);
    cloud.matrix.insert(cloud.matrix.end(), padded.begin(), padded.end());
    cloud.row_ids.push_back(r.id);
    cloud.crossing_numbers.push_back(r.crossing_number);
    cloud.norms.push_back(l2_norm(padded));
    cloud.class_flags.push_back(r.alternating);
    cloud.sigma_values.push_back(r.sigma);
  }
  return cloud;
}

AlignedCloud select_rows(const AlignedCloud& cloud, const std::vector<std::size_t>& indices) {
  AlignedCloud out;
  out.window = cloud.window;
  out.matrix.reserve(indices.size() * cloud.dimension());
  for (std::size_t i : indices) {
    const auto row = cloud.row(i);
    out.matrix.insert(out.matrix.end(), row.begin(), row.end());
    out.row_ids.push_back(cloud.row_ids[i]);
    out.crossing_numbers.push_back(cloud.crossing_numbers[i]);
    out.norms.push_back(cloud.norms[i]);
    out.class_flags.push_back(cloud.class_flags[i]);
    out.sigma_values.push_back(cloud.sigma_values[i]);
  }
  return out;
}

void write_cloud_csv(std::ostream& out, const AlignedCloud& cloud) {
  out << "# min_degree=" << cloud.window.min_degree << " q0_column=" << cloud.q0_column() << '\n';
  out << "id,crossing_number,alternating,sigma,norm";
  for (int e = cloud.window.min_degree; e <= cloud.window.max_degree; ++e) out << ",c_" << e;
  out << '\n';
  for (std::size_t i = 0; i < cloud.rows(); ++i) {
    out << cloud.row_ids[i] << ',' << cloud.crossing_numbers[i] << ',' << (cloud.class_flags[i] ? 1 : 0) << ','
        << (cloud.sigma_values[i] ? std::to_string(*cloud.sigma_values[i]) : std::string()) << ','
        << format_real(cloud.norms[i]);
    for (std::int64_t c : cloud.row(i)) out << ',' << c;
    out << '\n';
  }
}

}  // namespace knotfold
