// Symmetric eigensolvers. Small matrices use cyclic Jacobi rotations; larger
// ones are reduced to tridiagonal form by Householder reflections and then
// diagonalized by implicit-shift QL (the EISPACK tred2/tql2 pair). The QL
// path works on the transpose of the usual accumulator so every inner loop
// runs along a contiguous row.

#include "knotfold/error.hpp"
#include "knotfold/pca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace knotfold {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr int kMaxQlIterations = 60;

void check_symmetric(const Matrix& k) {
  if (k.rows != k.cols) throw Error(ErrorKind::NotSymmetric, "matrix is not square");
  double scale = 1.0;
  for (double v : k.data) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < k.rows; ++i)
    for (std::size_t j = i + 1; j < k.cols; ++j)
      if (std::abs(k(i, j) - k(j, i)) > 1e-9 * scale)
        throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric at (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ")");
}

// Returns eigenvalues; `w` receives eigenvectors as rows.
std::vector<double> jacobi(Matrix a, Matrix& w) {
  const std::size_t n = a.rows;
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  double frob = 0.0;
  for (double x : a.data) frob += x * x;
  const double tol = std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon() * frob;

  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= tol) break;
    if (sweep == kMaxJacobiSweeps) throw Error(ErrorKind::NoConvergence, "Jacobi sweep limit reached");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  w = Matrix(n, n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = a(i, i);
    for (std::size_t k = 0; k < n; ++k) w(i, k) = v(k, i);
  }
  return values;
}

// Householder tridiagonalization. On entry w holds the (symmetric) matrix; on
// exit w(j, .) is column j of the orthogonal transform, d the diagonal and e
// the subdiagonal (e[i] couples i-1 and i).
void tred2(Matrix& w, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = w.rows;
  for (std::size_t j = 0; j < n; ++j) d[j] = w(j, n - 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = w(j, i - 1);
        w(j, i) = 0.0;
        w(i, j) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        w(i, j) = f;
        g = e[j] + w(j, j) * f;
        double* wj = &w(j, 0);
        for (std::size_t k = j + 1; k < i; ++k) {
          g += wj[k] * d[k];
          e[k] += wj[k] * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        double* wj = &w(j, 0);
        for (std::size_t k = j; k < i; ++k) wj[k] -= f * e[k] + g * d[k];
        d[j] = wj[i - 1];
        wj[i] = 0.0;
      }
    }
    d[i] = h;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    w(i, n - 1) = w(i, i);
    w(i, i) = 1.0;
    const double h = d[i + 1];
    double* wn = &w(i + 1, 0);
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = wn[k] / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double* wj = &w(j, 0);
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += wn[k] * wj[k];
        for (std::size_t k = 0; k <= i; ++k) wj[k] -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) wn[k] = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = w(j, n - 1);
    w(j, n - 1) = 0.0;
  }
  w(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e); rotations are applied to the
// rows of w.
void tql2(Matrix& w, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = w.rows;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxQlIterations) throw Error(ErrorKind::NoConvergence, "QL iteration limit reached");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          double* wi = &w(i, 0);
          double* wi1 = &w(i + 1, 0);
          for (std::size_t k = 0; k < n; ++k) {
            const double t = wi1[k];
            wi1[k] = s * wi[k] + c * t;
            wi[k] = c * wi[k] - s * t;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

void fix_sign(std::span<double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  if (!v.empty() && v[best] < 0)
    for (double& x : v) x = -x;
}

}  // namespace

EigenSystem sym_eig(const Matrix& k) {
  check_symmetric(k);
  const std::size_t n = k.rows;
  EigenSystem es;
  if (n == 0) return es;

  Matrix w;
  std::vector<double> values;
  if (n <= kJacobiMaxDimension) {
    values = jacobi(k, w);
  } else {
    // Symmetrize exactly before reducing.
    w = k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) w(i, j) = w(j, i) = 0.5 * (k(i, j) + k(j, i));
    values.assign(n, 0.0);
    std::vector<double> e(n, 0.0);
    tred2(w, values, e);
    tql2(w, values, e);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  es.values.resize(n);
  es.vectors = Matrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    es.values[r] = values[order[r]];
    const auto src = w.row(order[r]);
    auto dst = es.vectors.row(r);
    std::copy(src.begin(), src.end(), dst.begin());
    fix_sign(dst);
  }
  return es;
}

}  // namespace knotfold
