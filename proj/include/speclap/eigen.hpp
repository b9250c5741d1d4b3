#pragma once

// Dense symmetric eigendecomposition and SVD by cyclic Jacobi rotations.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "speclap/error.hpp"
#include "speclap/matrix.hpp"

namespace speclap {

struct EigenOptions {
  double tol = 1e-12;  // relative to the Frobenius norm of the input
  int max_sweeps = 100;
};

/// Eigenvalues in ascending order; column k of `vectors` is the unit eigenvector of `values[k]`.
struct SymmetricEigen {
  Vector values;
  Matrix vectors;
};

struct SVDResult {
  Matrix U;  // m x m
  Vector S;  // min(m, n), descending
  Matrix V;  // n x n
};

namespace detail {

// Index of the largest-magnitude entry. Entries within a relative 1e-9 of the
// maximum count as ties and the lowest index wins.
inline Eigen::Index dominant_index(const Eigen::Ref<const Vector>& v) {
  const double peak = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= peak * (1.0 - 1e-9)) return i;
  }
  return 0;
}

inline void fix_column_sign(Matrix& m, Eigen::Index col, Matrix* partner = nullptr) {
  if (m.rows() == 0) return;
  if (m(dominant_index(m.col(col)), col) < 0) {
    m.col(col) = -m.col(col);
    if (partner != nullptr && col < partner->cols()) partner->col(col) = -partner->col(col);
  }
}

// Fills the columns of `u` flagged in `missing` with an orthonormal completion
// of the remaining columns.
inline void complete_basis(Matrix& u, const std::vector<bool>& missing) {
  const Eigen::Index m = u.rows();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    if (!missing[j]) kept.push_back(j);
  }
  Eigen::Index candidate = 0;
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    if (!missing[j]) continue;
    for (; candidate < m; ++candidate) {
      Vector v = Vector::Unit(m, candidate);
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index k : kept) v -= u.col(k).dot(v) * u.col(k);
      }
      const double len = v.norm();
      if (len > 1e-6) {
        u.col(j) = v / len;
        kept.push_back(j);
        ++candidate;
        break;
      }
    }
  }
}

inline SVDResult tall_svd(const Matrix& m, const EigenOptions& opts) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Matrix a = m;
  Matrix v = Matrix::Identity(cols, cols);
  // columns this small are rounding noise of a rank-deficient input; rotating them never settles
  const double negligible = 1e-28 * a.squaredNorm();

  bool converged = cols < 2;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < cols; ++p) {
      for (Eigen::Index q = p + 1; q < cols; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const double gamma = a.col(p).dot(a.col(q));
        if (gamma == 0.0 || std::abs(gamma) <= opts.tol * std::sqrt(alpha * beta)) continue;
        if (std::min(alpha, beta) <= negligible) continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        const Vector ap = a.col(p);
        a.col(p) = c * ap - s * a.col(q);
        a.col(q) = s * ap + c * a.col(q);
        const Vector vp = v.col(p);
        v.col(p) = c * vp - s * v.col(q);
        v.col(q) = s * vp + c * v.col(q);
        rotated = true;
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    fail(ErrorKind::NoConvergence,
         "one-sided Jacobi SVD did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
  }

  Vector sigma(cols);
  for (Eigen::Index j = 0; j < cols; ++j) sigma(j) = a.col(j).norm();
  std::vector<Eigen::Index> order(cols);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return sigma(x) > sigma(y); });

  SVDResult out;
  out.S.resize(cols);
  out.V.resize(cols, cols);
  out.U = Matrix::Zero(rows, rows);
  std::vector<bool> missing(rows, true);
  const double floor = (cols > 0 ? sigma.maxCoeff() : 0.0) * static_cast<double>(rows) * 1e-15;
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Eigen::Index src = order[j];
    out.S(j) = sigma(src);
    out.V.col(j) = v.col(src);
    if (sigma(src) > floor && sigma(src) > 0.0) {
      out.U.col(j) = a.col(src) / sigma(src);
      missing[j] = false;
    }
  }
  complete_basis(out.U, missing);
  for (Eigen::Index j = 0; j < rows; ++j) fix_column_sign(out.U, j, &out.V);
  return out;
}

}  // namespace detail

inline SymmetricEigen sym_eigen(const Matrix& s, const EigenOptions& opts = {}) {
  if (s.rows() != s.cols()) fail(ErrorKind::InvalidArgument, "sym_eigen needs a square matrix");
  const Eigen::Index n = s.rows();
  const double norm = s.norm();
  if (n > 0 && (s - s.transpose()).cwiseAbs().maxCoeff() > 1e-12 * norm) {
    fail(ErrorKind::NotSymmetric, "matrix is not symmetric");
  }

  Matrix a = 0.5 * (s + s.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double threshold = opts.tol * norm;

  auto off_diagonal_max = [&] {
    double worst = 0.0;
    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) worst = std::max(worst, std::abs(a(p, q)));
    }
    return worst;
  };

  int sweep = 0;
  while (off_diagonal_max() >= threshold && norm > 0.0) {
    if (sweep++ == opts.max_sweeps) {
      fail(ErrorKind::NoConvergence,
           "Jacobi eigensolver did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double sn = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
    detail::fix_column_sign(out.vectors, k);
  }
  return out;
}

inline SVDResult svd(const Matrix& m, const EigenOptions& opts = {}) {
  if (m.rows() >= m.cols()) return detail::tall_svd(m, opts);
  SVDResult t = detail::tall_svd(m.transpose(), opts);
  SVDResult out{std::move(t.V), std::move(t.S), std::move(t.U)};
  for (Eigen::Index j = 0; j < out.U.cols(); ++j) detail::fix_column_sign(out.U, j, &out.V);
  return out;
}

inline double rayleigh(const Matrix& s, const Vector& x) {
  const double xx = x.squaredNorm();
  if (xx == 0.0) fail(ErrorKind::ZeroVector, "Rayleigh quotient of the zero vector");
  return x.dot(s * x) / xx;
}

/// The k smallest eigenpairs.
inline SymmetricEigen smallest_k(const Matrix& s, Eigen::Index k, const EigenOptions& opts = {}) {
  if (k < 1 || k > s.rows()) {
    fail(ErrorKind::InvalidArgument, "k = " + std::to_string(k) + " outside [1, " +
                                         std::to_string(s.rows()) + "]");
  }
  SymmetricEigen full = sym_eigen(s, opts);
  return {full.values.head(k), full.vectors.leftCols(k)};
}

/// Moore-Penrose pseudo-inverse; singular values at or below `rel_tol` times the largest
/// are treated as zero.
inline Matrix pseudo_inverse(const Matrix& m, double rel_tol = 1e-12, const EigenOptions& opts = {}) {
  const SVDResult d = svd(m, opts);
  Matrix out = Matrix::Zero(m.cols(), m.rows());
  if (d.S.size() == 0 || d.S(0) == 0.0) return out;
  for (Eigen::Index j = 0; j < d.S.size(); ++j) {
    if (d.S(j) > rel_tol * d.S(0)) out += d.V.col(j) * d.U.col(j).transpose() / d.S(j);
  }
  return out;
}

/// Number of singular values above `rel_tol` times the largest one.
inline Eigen::Index numerical_rank(const Matrix& m, double rel_tol = 1e-9,
                                   const EigenOptions& opts = {}) {
  if (m.size() == 0) return 0;
  const Vector s = svd(m, opts).S;
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return (s.array() > rel_tol * s(0)).count();
}

}  // namespace speclap
