#pragma once

#include <cmath>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "speclap/eigen.hpp"
#include "speclap/error.hpp"
#include "speclap/graph.hpp"

namespace speclap {

enum class LaplacianKind { unnormalized, sym, rw, signed_unnormalized, signed_sym };

constexpr bool is_signed_kind(LaplacianKind kind) {
  return kind == LaplacianKind::signed_unnormalized || kind == LaplacianKind::signed_sym;
}

constexpr bool is_symmetric_kind(LaplacianKind kind) { return kind != LaplacianKind::rw; }

struct LaplacianMatrix {
  LaplacianKind kind;
  Matrix matrix;
  Vector degree;  // D, or D̄ for the signed kinds
};

inline LaplacianMatrix laplacian(const Graph& g, LaplacianKind kind) {
  const GraphKind gk = is_signed_kind(kind) ? GraphKind::signed_graph : GraphKind::unsigned_graph;
  const Vector d = degree_vector(g, gk);
  Matrix l = Matrix(d.asDiagonal()) - g.weights();
  if (kind == LaplacianKind::unnormalized || kind == LaplacianKind::signed_unnormalized) {
    return {kind, std::move(l), d};
  }
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(d(i) > 0.0)) {
      fail(ErrorKind::IsolatedVertex,
           "node " + std::to_string(i + 1) + " has degree " + std::to_string(d(i)) +
               "; the normalized Laplacian is undefined");
    }
  }
  if (kind == LaplacianKind::rw) {
    return {kind, d.cwiseInverse().asDiagonal() * l, d};
  }
  const Vector s = d.cwiseSqrt().cwiseInverse();
  Matrix n = s.asDiagonal() * l * s.asDiagonal();
  // exact symmetry; the two triangles can differ in the last bit
  n = 0.5 * (n + n.transpose()).eval();
  return {kind, std::move(n), d};
}

/// Half the weighted sum of squared differences over ordered pairs.
/// The signed form compares x_i with sgn(w_ij) x_j and weights by |w_ij|.
inline double quadratic_form(const Graph& g, const Vector& x, GraphKind kind = GraphKind::unsigned_graph) {
  if (static_cast<std::size_t>(x.size()) != g.size()) {
    fail(ErrorKind::InvalidArgument, "vector length does not match node count");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) continue;
      const auto xi = x(static_cast<Eigen::Index>(i));
      const auto xj = x(static_cast<Eigen::Index>(j));
      if (kind == GraphKind::signed_graph && w < 0.0) {
        total += -w * (xi + xj) * (xi + xj);
      } else {
        total += w * (xi - xj) * (xi - xj);
      }
    }
  }
  return total;
}

/// Number of eigenvalues at or below `tol` times the largest eigenvalue.
inline Eigen::Index kernel_dimension(const LaplacianMatrix& lap, double tol = 1e-9,
                                     const EigenOptions& opts = {}) {
  if (!is_symmetric_kind(lap.kind)) {
    fail(ErrorKind::InvalidArgument, "kernel_dimension needs a symmetric Laplacian");
  }
  const Vector values = sym_eigen(lap.matrix, opts).values;
  if (values.size() == 0) return 0;
  const double top = values.maxCoeff();
  if (top <= 0.0) return values.size();
  return (values.array() <= tol * top).count();
}

struct BalanceReport {
  bool balanced = false;
  std::optional<std::vector<int>> bipartition;  // +1 / -1 per node
};

/// Propagates signs along a BFS tree and checks every remaining edge.
inline BalanceReport is_balanced(const Graph& g) {
  const Components comps = connected_components(g);
  if (comps.count != 1) {
    fail(ErrorKind::NotConnected,
         "balance is decided per component; graph has " + std::to_string(comps.count));
  }
  const std::size_t m = g.size();
  std::vector<int> side(m, 0);
  side[0] = 1;
  std::queue<std::size_t> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < m; ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) continue;
      const int expected = w > 0.0 ? side[i] : -side[i];
      if (side[j] == 0) {
        side[j] = expected;
        frontier.push(j);
      } else if (side[j] != expected) {
        return {false, std::nullopt};
      }
    }
  }
  return {true, std::move(side)};
}

struct UnsignedConjugate {
  Graph graph;    // weights |w_ij|
  Matrix signs;   // diag(x)
};

/// For a balanced graph with bipartition x, returns |W| and diag(x) so that
/// L̄(g) = diag(x) L(|W|) diag(x).
inline UnsignedConjugate unsign_conjugation(const Graph& g, const std::vector<int>& bipartition) {
  const std::size_t m = g.size();
  if (bipartition.size() != m) {
    fail(ErrorKind::InvalidArgument, "bipartition length does not match node count");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (bipartition[i] != 1 && bipartition[i] != -1) {
      fail(ErrorKind::InvalidArgument, "bipartition entries must be +1 or -1");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) continue;
      const int sign = w > 0.0 ? 1 : -1;
      if (sign != bipartition[i] * bipartition[j]) {
        fail(ErrorKind::InconsistentBipartition,
             "edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") disagrees with the bipartition");
      }
    }
  }
  Vector x(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) x(static_cast<Eigen::Index>(i)) = bipartition[i];
  return {Graph(g.weights().cwiseAbs()), Matrix(x.asDiagonal())};
}

}  // namespace speclap
