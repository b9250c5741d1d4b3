#pragma once

// K-way clustering by normalized, signed normalized, ratio and signed ratio cuts:
// continuous relaxation followed by alternating discrete rounding.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speclap/eigen.hpp"
#include "speclap/error.hpp"
#include "speclap/graph.hpp"
#include "speclap/laplacian.hpp"

namespace speclap {

enum class CutMode { ncut, rcut, signed_ncut, signed_rcut };

constexpr bool is_signed_mode(CutMode mode) {
  return mode == CutMode::signed_ncut || mode == CutMode::signed_rcut;
}

constexpr bool is_normalized_mode(CutMode mode) {
  return mode == CutMode::ncut || mode == CutMode::signed_ncut;
}

constexpr std::string_view mode_name(CutMode mode) {
  switch (mode) {
    case CutMode::ncut: return "ncut";
    case CutMode::rcut: return "rcut";
    case CutMode::signed_ncut: return "sncut";
    case CutMode::signed_rcut: return "srcut";
  }
  return "ncut";
}

enum class RescaleMethod { none, row_sum_ls, row_norm_ls, row_normalize };

/// Block label (0-based) for every node.
class Partition {
 public:
  Partition(std::size_t k, std::vector<std::size_t> labels) : k_(k), labels_(std::move(labels)) {
    if (k_ == 0) fail(ErrorKind::InvalidArgument, "a partition needs at least one block");
    for (std::size_t l : labels_) {
      if (l >= k_) fail(ErrorKind::InvalidArgument, "block label " + std::to_string(l) + " >= k");
    }
  }

  std::size_t k() const { return k_; }
  std::size_t node_count() const { return labels_.size(); }
  std::size_t label(std::size_t node) const { return labels_[node]; }
  const std::vector<std::size_t>& labels() const { return labels_; }

  std::size_t block_size(std::size_t j) const {
    return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), j));
  }

  NodeSubset block(std::size_t j) const {
    std::vector<bool> mask(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) mask[i] = labels_[i] == j;
    return NodeSubset::from_mask(std::move(mask));
  }

  /// Labels renumbered in order of first appearance; equal for partitions that differ
  /// only by block order.
  std::vector<std::size_t> canonical_labels() const {
    std::vector<std::size_t> remap(k_, k_);
    std::vector<std::size_t> out(labels_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      std::size_t& r = remap[labels_[i]];
      if (r == k_) r = next++;
      out[i] = r;
    }
    return out;
  }

  bool same_blocks(const Partition& other) const {
    return canonical_labels() == other.canonical_labels();
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t k_;
  std::vector<std::size_t> labels_;
};

/// N x K matrix with exactly one nonzero per row, every column hit, and one common
/// nonzero value per column.
class IndicatorMatrix {
 public:
  explicit IndicatorMatrix(Matrix x) : x_(std::move(x)) {
    const Eigen::Index n = x_.rows();
    const Eigen::Index k = x_.cols();
    scales_ = Vector::Zero(k);
    labels_.assign(static_cast<std::size_t>(n), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index hit = -1;
      for (Eigen::Index j = 0; j < k; ++j) {
        if (x_(i, j) == 0.0) continue;
        if (hit >= 0) fail(ErrorKind::InvalidArgument, "row " + std::to_string(i + 1) + " has two nonzeros");
        hit = j;
      }
      if (hit < 0) fail(ErrorKind::InvalidArgument, "row " + std::to_string(i + 1) + " is zero");
      const double v = x_(i, hit);
      if (scales_(hit) == 0.0) {
        scales_(hit) = v;
      } else if (std::abs(v - scales_(hit)) > 1e-12 * std::abs(scales_(hit))) {
        fail(ErrorKind::InvalidArgument, "column " + std::to_string(hit + 1) + " mixes nonzero values");
      }
      labels_[static_cast<std::size_t>(i)] = static_cast<std::size_t>(hit);
    }
    for (Eigen::Index j = 0; j < k; ++j) {
      if (scales_(j) == 0.0) fail(ErrorKind::InvalidArgument, "column " + std::to_string(j + 1) + " is zero");
    }
  }

  static IndicatorMatrix from_partition(const Partition& p, const Vector& scales) {
    if (static_cast<std::size_t>(scales.size()) != p.k()) {
      fail(ErrorKind::InvalidArgument, "need one scale per block");
    }
    Matrix x = Matrix::Zero(static_cast<Eigen::Index>(p.node_count()), scales.size());
    for (std::size_t i = 0; i < p.node_count(); ++i) {
      const auto j = static_cast<Eigen::Index>(p.label(i));
      x(static_cast<Eigen::Index>(i), j) = scales(j);
    }
    return IndicatorMatrix(std::move(x));
  }

  const Matrix& matrix() const { return x_; }
  const Vector& scales() const { return scales_; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  Partition partition() const { return Partition(static_cast<std::size_t>(x_.cols()), labels_); }

 private:
  Matrix x_;
  Vector scales_;
  std::vector<std::size_t> labels_;
};

/// Q = R * diag(lambda).
struct TransformQ {
  Matrix R;
  Vector lambda;

  Matrix Q() const { return R * lambda.asDiagonal(); }

  static TransformQ rotation(Matrix r) {
    const Eigen::Index k = r.cols();
    return {std::move(r), Vector::Ones(k)};
  }
};

struct ContinuousSolution {
  Matrix z;             // N x K, rescaled to `frobenius_norm`
  CutMode mode;
  double frobenius_norm = 100.0;
  double scale = 1.0;   // factor applied to the raw eigenvector solution
  Vector eigenvalues;   // the K smallest eigenvalues of the relaxed problem

  double relaxation_value() const { return eigenvalues.sum(); }
};

struct AlternationResult {
  IndicatorMatrix x;
  TransformQ q;
  std::size_t iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;              // one entry per accepted round
  std::vector<std::vector<std::size_t>> label_history;
};

struct KWayResult {
  Partition partition;
  double objective = 0.0;
  IndicatorMatrix x;
  ContinuousSolution z;
  TransformQ q;
  std::size_t iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;
  bool deformed_initialization = false;  // rows were normalized before rounding
};

struct ClusterOptions {
  RescaleMethod rescale = RescaleMethod::row_normalize;
  std::size_t max_iters = 100;
  std::size_t first_row = 0;  // seed row for the greedy rotation
  bool fit_scale = true;      // false: every refit keeps Lambda = I
  EigenOptions eigen{};
};

namespace detail {

inline void check_unsigned_mode(const Graph& g, CutMode mode) {
  if (!is_signed_mode(mode) && g.has_negative_edges()) {
    fail(ErrorKind::NegativeWeight, "graph has negative weights; use a signed mode");
  }
}

inline GraphKind graph_kind(CutMode mode) {
  return is_signed_mode(mode) ? GraphKind::signed_graph : GraphKind::unsigned_graph;
}

}  // namespace detail

/// Ncut and Rcut sum cut(A_j)/vol(A_j) and cut(A_j)/|A_j|. The signed variants use |w| in
/// cuts and volumes and add 2 links^-(A_j, A_j) to each numerator.
inline double objective(const Graph& g, const Partition& p, CutMode mode) {
  if (p.node_count() != g.size()) fail(ErrorKind::InvalidArgument, "partition size does not match graph");
  detail::check_unsigned_mode(g, mode);
  const GraphKind kind = detail::graph_kind(mode);
  double total = 0.0;
  for (std::size_t j = 0; j < p.k(); ++j) {
    const NodeSubset block = p.block(j);
    const std::size_t size = block.size();
    if (size == 0) fail(ErrorKind::EmptyBlock, "block " + std::to_string(j + 1) + " is empty");
    double numerator = cut(g, block, kind);
    if (is_signed_mode(mode)) numerator += 2.0 * links(g, block, block, SignFilter::negative_only);
    double denominator = static_cast<double>(size);
    if (is_normalized_mode(mode)) {
      denominator = volume(g, block, kind);
      if (!(denominator > 0.0)) {
        fail(ErrorKind::ZeroVolume, "block " + std::to_string(j + 1) + " has zero volume");
      }
    }
    total += numerator / denominator;
  }
  return total;
}

/// Sum over columns of x^T 𝕃 x / x^T 𝔻 x, with (𝕃, 𝔻) = (L, D), (L̄, D̄), (L, I) or (L̄, I).
inline double rayleigh_sum(const Graph& g, const IndicatorMatrix& x, CutMode mode) {
  detail::check_unsigned_mode(g, mode);
  const bool sgn = is_signed_mode(mode);
  const LaplacianMatrix lap =
      laplacian(g, sgn ? LaplacianKind::signed_unnormalized : LaplacianKind::unnormalized);
  const Matrix& xm = x.matrix();
  double total = 0.0;
  for (Eigen::Index j = 0; j < xm.cols(); ++j) {
    const Vector col = xm.col(j);
    const double num = col.dot(lap.matrix * col);
    const double den = is_normalized_mode(mode) ? col.dot(lap.degree.asDiagonal() * col) : col.squaredNorm();
    total += num / den;
  }
  return total;
}

/// K smallest eigenvectors of L_sym (mapped back by D^{-1/2}), L̄_sym (by D̄^{-1/2}), L or L̄,
/// rescaled to Frobenius norm 100.
inline ContinuousSolution solve_relaxed(const Graph& g, std::size_t k, CutMode mode,
                                        const EigenOptions& opts = {}) {
  if (k < 2 || k > g.size()) {
    fail(ErrorKind::InvalidArgument,
         "K = " + std::to_string(k) + " outside [2, " + std::to_string(g.size()) + "]");
  }
  detail::check_unsigned_mode(g, mode);
  const bool sgn = is_signed_mode(mode);
  const auto kk = static_cast<Eigen::Index>(k);
  Matrix z;
  Vector values;
  if (is_normalized_mode(mode)) {
    const LaplacianMatrix lap = laplacian(g, sgn ? LaplacianKind::signed_sym : LaplacianKind::sym);
    if (!sgn) {
      const Components comps = connected_components(g);
      if (comps.count != 1) {
        fail(ErrorKind::Disconnected, "graph has " + std::to_string(comps.count) + " components");
      }
    }
    const SymmetricEigen eig = smallest_k(lap.matrix, kk, opts);
    z = lap.degree.cwiseSqrt().cwiseInverse().asDiagonal() * eig.vectors;
    values = eig.values;
  } else {
    const LaplacianMatrix lap =
        laplacian(g, sgn ? LaplacianKind::signed_unnormalized : LaplacianKind::unnormalized);
    const SymmetricEigen eig = smallest_k(lap.matrix, kk, opts);
    z = eig.vectors;
    values = eig.values;
  }
  constexpr double kNorm = 100.0;
  const double scale = kNorm / z.norm();
  return {z * scale, mode, kNorm, scale, values};
}

/// Eigenvectors of Z^T Z; the columns of Z R are mutually orthogonal.
inline TransformQ init_rotation_R1(const Matrix& z, const EigenOptions& opts = {}) {
  const SymmetricEigen eig = sym_eigen(z.transpose() * z, opts);
  const double top = eig.values.size() ? eig.values.maxCoeff() : 0.0;
  if (!(top > 0.0) || eig.values.minCoeff() <= 1e-12 * top) {
    fail(ErrorKind::RankDeficient, "Z does not have full column rank");
  }
  return TransformQ::rotation(eig.vectors);
}

/// Greedy choice of K rows of Z that are as orthogonal as possible, starting from
/// `first_row`. Chosen rows leave the pool. Columns are normalized to unit length.
inline TransformQ init_rotation_R2(const Matrix& z, std::size_t first_row = 0) {
  const Eigen::Index n = z.rows();
  const Eigen::Index k = z.cols();
  if (n < k) fail(ErrorKind::InvalidArgument, "Z needs at least as many rows as columns");
  if (static_cast<Eigen::Index>(first_row) >= n) {
    fail(ErrorKind::IndexOutOfRange, "first row " + std::to_string(first_row + 1) + " outside Z");
  }
  Matrix r(k, k);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  r.col(0) = z.row(static_cast<Eigen::Index>(first_row)).transpose();
  taken[first_row] = true;
  Vector score = Vector::Zero(n);
  for (Eigen::Index c = 1; c < k; ++c) {
    score += (z * r.col(c - 1)).cwiseAbs();
    Eigen::Index pick = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      if (pick < 0 || score(i) < score(pick)) pick = i;
    }
    r.col(c) = z.row(pick).transpose();
    taken[static_cast<std::size_t>(pick)] = true;
  }
  for (Eigen::Index c = 0; c < k; ++c) {
    const double len = r.col(c).norm();
    if (len > 0.0) r.col(c) /= len;
  }
  return TransformQ::rotation(std::move(r));
}

/// Column scaling lambda with Z diag(lambda) having row sums close to 1 in the least-squares
/// sense. Empty when some |lambda_j| < 1e-6.
inline std::optional<Vector> row_sum_scaling(const Matrix& z) {
  const Vector lambda = pseudo_inverse(z) * Vector::Ones(z.rows());
  if ((lambda.array().abs() < 1e-6).any()) return std::nullopt;
  return lambda;
}

/// Column scaling lambda with the rows of Z diag(lambda) close to unit length in the
/// least-squares sense. Empty when a squared scale is negative or below 1e-12.
inline std::optional<Vector> row_norm_scaling(const Matrix& z) {
  const Vector squares = pseudo_inverse(z.cwiseProduct(z)) * Vector::Ones(z.rows());
  if ((squares.array() < 1e-12).any()) return std::nullopt;
  return squares.cwiseSqrt();
}

inline Matrix rescale_variant(const Matrix& z, RescaleMethod method) {
  switch (method) {
    case RescaleMethod::none:
      return z;
    case RescaleMethod::row_sum_ls: {
      const auto lambda = row_sum_scaling(z);
      return lambda ? Matrix(z * lambda->asDiagonal()) : z;
    }
    case RescaleMethod::row_norm_ls: {
      const auto lambda = row_norm_scaling(z);
      return lambda ? Matrix(z * lambda->asDiagonal()) : z;
    }
    case RescaleMethod::row_normalize: {
      Matrix out = z;
      for (Eigen::Index i = 0; i < out.rows(); ++i) {
        const double len = out.row(i).norm();
        if (len > 0.0) out.row(i) /= len;
      }
      return out;
    }
  }
  return z;
}

struct FlipResult {
  Matrix zq;  // ZR with flipped columns
  Matrix rp;  // diagonal of +-1
};

/// Negates every column whose mean is strictly negative.
inline FlipResult flip_columns(const Matrix& zr) {
  FlipResult out{zr, Matrix::Identity(zr.cols(), zr.cols())};
  for (Eigen::Index j = 0; j < zr.cols(); ++j) {
    if (zr.col(j).mean() < 0.0) {
      out.zq.col(j) = -out.zq.col(j);
      out.rp(j, j) = -1.0;
    }
  }
  return out;
}

/// Discrete step: each row of ZQ goes to its leftmost largest coordinate. Empty columns are
/// filled by moving the smallest-index row out of the leftmost fullest column. All nonzeros
/// share the value that gives ||X||_F = ||Z||_F.
inline IndicatorMatrix podx(const Matrix& z, const Matrix& q) {
  const Matrix y = z * q;
  const Eigen::Index n = y.rows();
  const Eigen::Index k = y.cols();
  if (k > n) fail(ErrorKind::InvalidArgument, "more blocks than rows");
  std::vector<Eigen::Index> column(static_cast<std::size_t>(n));
  std::vector<Eigen::Index> count(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index j = 1; j < k; ++j) {
      if (y(i, j) > y(i, best)) best = j;
    }
    column[static_cast<std::size_t>(i)] = best;
    ++count[static_cast<std::size_t>(best)];
  }
  for (;;) {
    const auto empty = std::find(count.begin(), count.end(), 0);
    if (empty == count.end()) break;
    const auto fullest = std::max_element(count.begin(), count.end());
    const auto from = static_cast<Eigen::Index>(fullest - count.begin());
    const auto to = static_cast<Eigen::Index>(empty - count.begin());
    const auto row = std::find(column.begin(), column.end(), from);
    *row = to;
    --*fullest;
    ++*empty;
  }
  const double a = n > 0 ? z.norm() / std::sqrt(static_cast<double>(n)) : 0.0;
  Matrix x = Matrix::Zero(n, k);
  for (Eigen::Index i = 0; i < n; ++i) x(i, column[static_cast<std::size_t>(i)]) = a;
  return IndicatorMatrix(std::move(x));
}

inline IndicatorMatrix podx(const Matrix& z, const TransformQ& q) { return podx(z, q.Q()); }

/// Diagonal lambda minimizing ||X - Z diag(lambda)||_F: lambda_j = (Z^T X)_jj / ||Z_j||^2.
/// Falls back to all ones when some |lambda_j| < 1e-9.
inline Vector optimal_scaling(const Matrix& x, const Matrix& z) {
  Vector lambda(z.cols());
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    const double zz = z.col(j).squaredNorm();
    lambda(j) = zz > 0.0 ? z.col(j).dot(x.col(j)) / zz : 0.0;
  }
  if ((lambda.array().abs() < 1e-9).any()) return Vector::Ones(z.cols());
  return lambda;
}

/// Continuous step: R = U V^T from the SVD of Z^T X, then the diagonal scaling fitted
/// against Z R (skipped when `fit_scale` is false).
inline TransformQ podr(const Matrix& x, const Matrix& z, const EigenOptions& opts = {},
                       bool fit_scale = true) {
  if (x.rows() != z.rows() || x.cols() != z.cols()) {
    fail(ErrorKind::InvalidArgument, "X and Z must have the same shape");
  }
  const SVDResult d = svd(z.transpose() * x, opts);
  Matrix r = d.U * d.V.transpose();
  if (!fit_scale) return TransformQ::rotation(std::move(r));
  Vector lambda = optimal_scaling(x, z * r);
  return {std::move(r), std::move(lambda)};
}

inline TransformQ podr(const IndicatorMatrix& x, const Matrix& z, const EigenOptions& opts = {},
                       bool fit_scale = true) {
  return podr(x.matrix(), z, opts, fit_scale);
}

/// Alternates discrete and continuous steps from `initial`. A round refits Q to the current
/// X and rounds again; it is kept only if ||X - ZQ||_F drops by at least 1e-12, and the
/// loop ends once X stops changing or `max_iters` rounds (the first included) are kept.
inline AlternationResult alternate(const Matrix& z, const TransformQ& initial, std::size_t max_iters = 100,
                                   const EigenOptions& opts = {}, bool fit_scale = true) {
  TransformQ q = initial;
  IndicatorMatrix x = podx(z, q);
  double phi = (x.matrix() - z * q.Q()).norm();
  AlternationResult out{x, q, 1, phi, {phi}, {x.labels()}};
  while (out.iterations < max_iters) {
    TransformQ next_q = podr(x, z, opts, fit_scale);
    IndicatorMatrix next_x = podx(z, next_q);
    const double next_phi = (next_x.matrix() - z * next_q.Q()).norm();
    if (phi - next_phi < 1e-12) break;
    const bool repeated = next_x.labels() == x.labels();
    x = std::move(next_x);
    q = std::move(next_q);
    phi = next_phi;
    ++out.iterations;
    out.residual_history.push_back(phi);
    out.label_history.push_back(x.labels());
    if (repeated) break;
  }
  out.x = std::move(x);
  out.q = std::move(q);
  out.residual = phi;
  return out;
}

/// Full pipeline: relaxation, candidate initial transforms, then alternation on the
/// relaxed solution.
inline KWayResult cluster(const Graph& g, std::size_t k, CutMode mode, const ClusterOptions& options = {}) {
  ContinuousSolution sol = solve_relaxed(g, k, mode, options.eigen);
  const Matrix& z1 = sol.z;
  const auto kk = static_cast<Eigen::Index>(k);
  const Matrix identity = Matrix::Identity(kk, kk);
  const Matrix r1 = init_rotation_R1(z1, options.eigen).R;

  std::optional<Matrix> best_q;
  double best_residual = 0.0;
  for (const Matrix* base : {&identity, &r1}) {
    const Matrix zb = z1 * *base;
    // Column scalings fold into the transform; row normalization only rescales rows and
    // leaves every row's argmax where it was.
    Matrix column_scale = identity;
    if (options.rescale == RescaleMethod::row_sum_ls) {
      if (auto l = row_sum_scaling(zb)) column_scale = l->asDiagonal();
    } else if (options.rescale == RescaleMethod::row_norm_ls) {
      if (auto l = row_norm_scaling(zb)) column_scale = l->asDiagonal();
    }
    const Matrix zi = rescale_variant(zb, options.rescale);
    const Matrix r2 = init_rotation_R2(zi, options.first_row).R;
    for (const Matrix* rot : {&identity, &r2}) {
      const Matrix zr = zi * *rot;
      const IndicatorMatrix x = podx(zi, *rot);
      const double plain = (x.matrix() - zr).norm();
      const FlipResult flipped = flip_columns(zr);
      const Matrix rot_flipped = *rot * flipped.rp;
      const IndicatorMatrix xp = podx(zi, rot_flipped);
      const double with_flip = (xp.matrix() - flipped.zq).norm();
      const bool use_flip = with_flip < plain;
      const double residual = use_flip ? with_flip : plain;
      if (!best_q || residual < best_residual) {
        best_residual = residual;
        best_q = *base * column_scale * (use_flip ? rot_flipped : *rot);
      }
    }
  }

  AlternationResult run =
      alternate(z1, TransformQ::rotation(std::move(*best_q)), options.max_iters, options.eigen,
                options.fit_scale);
  Partition part = run.x.partition();
  const double value = objective(g, part, mode);
  return {std::move(part),
          value,
          std::move(run.x),
          std::move(sol),
          std::move(run.q),
          run.iterations,
          run.residual,
          std::move(run.residual_history),
          options.rescale == RescaleMethod::row_normalize};
}

/// Angle between the lines spanned by x and y, in [0, pi/2].
inline double projective_distance(const Vector& x, const Vector& y) {
  const double nx = x.norm();
  const double ny = y.norm();
  if (nx == 0.0 || ny == 0.0) fail(ErrorKind::ZeroVector, "projective distance of a zero vector");
  const double c = std::clamp(std::abs(x.dot(y)) / (nx * ny), 0.0, 1.0);
  return std::acos(c);
}

/// Orthogonal R whose first column is (sqrt(vol(A_j) / vol(V)))_j, so that the first column
/// of X R is constant when the columns of X share the same D-norm. R is the Householder
/// reflection taking e_1 to that column.
inline TransformQ first_column_rotation(const Graph& g, const IndicatorMatrix& x) {
  const Matrix& xm = x.matrix();
  if (static_cast<std::size_t>(xm.rows()) != g.size()) {
    fail(ErrorKind::InvalidArgument, "indicator matrix size does not match graph");
  }
  const Vector d = degree_vector(g);
  const Partition p = x.partition();
  const Eigen::Index k = xm.cols();
  Vector vols(k);
  Vector dnorms(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    vols(j) = volume(g, p.block(static_cast<std::size_t>(j)));
    dnorms(j) = xm.col(j).dot(d.asDiagonal() * xm.col(j));
    if (!(vols(j) > 0.0)) fail(ErrorKind::PreconditionViolated, "block with zero volume");
  }
  if ((dnorms.array() - dnorms(0)).abs().maxCoeff() > 1e-9 * std::abs(dnorms(0))) {
    fail(ErrorKind::PreconditionViolated, "columns of X must share the same D-norm");
  }
  const Vector first = (vols / vols.sum()).cwiseSqrt();
  Vector v = -first;
  v(0) += 1.0;
  const double vv = v.squaredNorm();
  Matrix r = Matrix::Identity(k, k);
  if (vv > 1e-30) r -= 2.0 * v * v.transpose() / vv;
  return TransformQ::rotation(std::move(r));
}

}  // namespace speclap
