#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "speclap/eigen.hpp"
#include "speclap/error.hpp"
#include "speclap/graph.hpp"
#include "speclap/laplacian.hpp"

namespace speclap {

/// Two-level vector taking `a` on A and `-beta * a` on the complement, with
/// beta = vol(A) / (vol(V) - vol(A)) so that X^T D 1 = 0.
struct TwoWayIndicator {
  double a = 0.0;
  double beta = 0.0;
  std::vector<bool> in_a;

  Vector values() const {
    Vector x(static_cast<Eigen::Index>(in_a.size()));
    for (std::size_t i = 0; i < in_a.size(); ++i) {
      x(static_cast<Eigen::Index>(i)) = in_a[i] ? a : -beta * a;
    }
    return x;
  }
};

struct TwoWayResult {
  NodeSubset partition;  // A; the complement is the other block
  double ncut = 0.0;
  Vector z;
  TwoWayIndicator x;
  double residual = 0.0;  // ||X - Z||
};

/// cut(A) * (1/vol(A) + 1/vol(complement)).
inline double ncut2_value(const Graph& g, const NodeSubset& a) {
  const std::size_t size = a.size();
  if (size == 0 || size == g.size()) {
    fail(ErrorKind::DegenerateSubset, "a two-way cut needs a nonempty proper subset");
  }
  const double vol_a = volume(g, a);
  const double vol_b = volume(g, a.complement());
  if (!(vol_a > 0.0) || !(vol_b > 0.0)) {
    fail(ErrorKind::DegenerateSubset, "both sides of the cut need positive volume");
  }
  const double c = cut(g, a);
  return c / vol_a + c / vol_b;
}

/// Z = D^{-1/2} u_2(L_sym), with u_2 the unit eigenvector of the second smallest eigenvalue.
inline Vector solve_relaxed_2way(const Graph& g, const EigenOptions& opts = {}) {
  if (g.has_negative_edges()) fail(ErrorKind::NegativeWeight, "two-way Ncut needs nonnegative weights");
  if (g.size() < 2) fail(ErrorKind::InvalidArgument, "two-way Ncut needs at least two nodes");
  const LaplacianMatrix lsym = laplacian(g, LaplacianKind::sym);
  const Components comps = connected_components(g);
  if (comps.count != 1) {
    fail(ErrorKind::Disconnected, "graph has " + std::to_string(comps.count) +
                                      " components; cut each component separately");
  }
  const SymmetricEigen eig = sym_eigen(lsym.matrix, opts);
  return lsym.degree.cwiseSqrt().cwiseInverse().asDiagonal() * eig.vectors.col(1);
}

/// Negates Z when its positive entries are spread further from their mean than the
/// negative entries are from theirs.
inline Vector orient_sign(const Vector& z) {
  auto spread = [&](bool positive) {
    double sum = 0.0;
    Eigen::Index count = 0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      if (positive ? z(i) > 0.0 : z(i) < 0.0) {
        sum += z(i);
        ++count;
      }
    }
    if (count == 0) return 0.0;
    const double mean = sum / static_cast<double>(count);
    double sq = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      if (positive ? z(i) > 0.0 : z(i) < 0.0) sq += (z(i) - mean) * (z(i) - mean);
    }
    return std::sqrt(sq);
  };
  return spread(true) > spread(false) ? Vector(-z) : z;
}

namespace detail {

inline TwoWayIndicator two_level(const std::vector<bool>& in_a, double vol_a, double vol_total,
                                 double z_norm) {
  const auto n = static_cast<double>(in_a.size());
  double n_a = 0.0;
  for (bool b : in_a) n_a += b ? 1.0 : 0.0;
  const double beta = vol_a / (vol_total - vol_a);
  const double a = z_norm / std::sqrt(n_a + beta * beta * (n - n_a));
  return {a, beta, in_a};
}

inline TwoWayResult finish_2way(const Graph& g, const Vector& z, TwoWayIndicator x) {
  NodeSubset part = NodeSubset::from_mask(x.in_a);
  const double residual = (x.values() - z).norm();
  const double value = ncut2_value(g, part);
  return {std::move(part), value, z, std::move(x), residual};
}

struct SignClasses {
  std::vector<bool> positive;
  std::vector<std::size_t> zeros;
};

inline SignClasses classify(const Graph& g, const Vector& z, double zero_tol) {
  if (static_cast<std::size_t>(z.size()) != g.size()) {
    fail(ErrorKind::InvalidArgument, "Z length does not match node count");
  }
  const double threshold = zero_tol * (z.size() ? z.cwiseAbs().maxCoeff() : 0.0);
  SignClasses out{std::vector<bool>(g.size(), false), {}};
  bool any_pos = false;
  bool any_neg = false;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (z(i) > threshold) {
      out.positive[static_cast<std::size_t>(i)] = true;
      any_pos = true;
    } else if (z(i) < -threshold) {
      any_neg = true;
    } else {
      out.zeros.push_back(static_cast<std::size_t>(i));
    }
  }
  if (!any_pos || !any_neg) {
    fail(ErrorKind::AllOneSide, "Z needs both positive and negative entries");
  }
  return out;
}

}  // namespace detail

/// Rounds a relaxed two-way solution. Strictly positive entries start in A; entries
/// within `zero_tol * max|Z|` of zero are offered to A one at a time in ascending index
/// order and kept there only if the residual ||X - Z|| strictly drops.
inline TwoWayResult round_2way(const Graph& g, const Vector& z, double zero_tol = 1e-12) {
  const detail::SignClasses classes = detail::classify(g, z, zero_tol);
  const Vector d = degree_vector(g);
  const double total = d.sum();
  const double z_norm = z.norm();

  std::vector<bool> in_a = classes.positive;
  double vol_a = 0.0;
  for (std::size_t i = 0; i < in_a.size(); ++i) {
    if (in_a[i]) vol_a += d(static_cast<Eigen::Index>(i));
  }
  TwoWayIndicator best = detail::two_level(in_a, vol_a, total, z_norm);
  double best_residual = (best.values() - z).norm();

  for (std::size_t i : classes.zeros) {
    const double trial_vol = vol_a + d(static_cast<Eigen::Index>(i));
    if (!(trial_vol < total)) continue;
    std::vector<bool> trial_set = in_a;
    trial_set[i] = true;
    TwoWayIndicator trial = detail::two_level(trial_set, trial_vol, total, z_norm);
    const double trial_residual = (trial.values() - z).norm();
    if (trial_residual < best_residual) {
      in_a = std::move(trial_set);
      vol_a = trial_vol;
      best = std::move(trial);
      best_residual = trial_residual;
    }
  }
  return detail::finish_2way(g, z, std::move(best));
}

/// Baseline rounding that sends every zero entry to A.
inline TwoWayResult round_2way_naive(const Graph& g, const Vector& z, double zero_tol = 1e-12) {
  detail::SignClasses classes = detail::classify(g, z, zero_tol);
  for (std::size_t i : classes.zeros) classes.positive[i] = true;
  const Vector d = degree_vector(g);
  double vol_a = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (classes.positive[i]) vol_a += d(static_cast<Eigen::Index>(i));
  }
  return detail::finish_2way(g, z, detail::two_level(classes.positive, vol_a, d.sum(), z.norm()));
}

/// Relaxation, sign orientation and rounding in one call.
inline TwoWayResult ncut2(const Graph& g, const EigenOptions& opts = {}) {
  return round_2way(g, orient_sign(solve_relaxed_2way(g, opts)));
}

}  // namespace speclap
