#pragma once

// Named graphs and random generators shared by the test suites.

#include <cstddef>
#include <initializer_list>
#include <random>
#include <vector>

#include "speclap/graph.hpp"

namespace speclap::testing {

inline Matrix rows(std::initializer_list<std::initializer_list<double>> r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  const auto m = static_cast<Eigen::Index>(r.begin()->size());
  Matrix out(n, m);
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (double v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

// 5 nodes, unit weights.
inline Graph five_node() {
  return Graph(rows({{0, 1, 1, 0, 0},
                     {1, 0, 1, 1, 1},
                     {1, 1, 0, 1, 0},
                     {0, 1, 1, 0, 1},
                     {0, 1, 0, 1, 0}}));
}

inline Matrix five_node_laplacian() {
  return rows({{2, -1, -1, 0, 0},
               {-1, 4, -1, -1, -1},
               {-1, -1, 3, -1, 0},
               {0, -1, -1, 3, -1},
               {0, -1, 0, -1, 2}});
}

inline Graph four_node() {
  return Graph(rows({{0, 3, 6, 3}, {3, 0, 0, 3}, {6, 0, 0, 3}, {3, 3, 3, 0}}));
}

// Incidence matrix of four_node() printed to four decimals.
inline Matrix four_node_incidence() {
  return rows({{1.7321, 2.4495, 1.7321, 0, 0},
               {-1.7321, 0, 0, 1.7321, 0},
               {0, -2.4495, 0, 0, 1.7321},
               {0, 0, -1.7321, -1.7321, -1.7321}});
}

inline Graph four_cycle() {
  return Graph(rows({{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}));
}

inline Graph ring(std::size_t n, double w = 1.0) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Eigen::Index>(i);
    const auto b = static_cast<Eigen::Index>((i + 1) % n);
    m(a, b) = w;
    m(b, a) = w;
  }
  return Graph(m);
}

inline Graph path(std::size_t n) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i + 1 < static_cast<Eigen::Index>(n); ++i) {
    m(i, i + 1) = 1.0;
    m(i + 1, i) = 1.0;
  }
  return Graph(m);
}

inline Graph complete(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return Graph(Matrix::Ones(k, k) - Matrix::Identity(k, k));
}

// Disjoint unit-weight cliques of the given sizes, listed consecutively.
inline Graph cliques(std::initializer_list<std::size_t> sizes) {
  std::size_t total = 0;
  for (std::size_t s : sizes) total += s;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
  Eigen::Index offset = 0;
  for (std::size_t s : sizes) {
    const auto k = static_cast<Eigen::Index>(s);
    m.block(offset, offset, k, k) = Matrix::Ones(k, k) - Matrix::Identity(k, k);
    offset += k;
  }
  return Graph(m);
}

// The 9-node graph used for the K-way runs.
inline Graph w1() {
  return Graph(rows({{0, 1, 0, 1, 0, 0, 0, 0, 0},
                     {1, 0, 0, 0, 1, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 1, 0, 0, 0},
                     {1, 0, 0, 0, 1, 0, 0, 0, 0},
                     {0, 1, 0, 1, 0, 0, 0, 0, 1},
                     {0, 0, 1, 0, 0, 0, 0, 0, 1},
                     {0, 0, 0, 0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 0, 1, 0, 1},
                     {0, 0, 0, 0, 1, 1, 0, 1, 0}}));
}

// Signed Laplacian of the balanced 9-node signed graph.
inline Matrix signed_g1_laplacian() {
  return rows({{2, -1, 0, -1, 0, 0, 0, 0, 0},
               {-1, 5, 1, -1, 1, 0, 0, -1, 0},
               {0, 1, 3, 0, -1, -1, 0, 0, 0},
               {-1, -1, 0, 5, 1, 0, -1, -1, 0},
               {0, 1, -1, 1, 6, -1, 0, 1, -1},
               {0, 0, -1, 0, -1, 4, 0, 1, -1},
               {0, 0, 0, -1, 0, 0, 2, -1, 0},
               {0, -1, 0, -1, 1, 1, -1, 6, 1},
               {0, 0, 0, 0, -1, -1, 0, 1, 3}});
}

// Signed Laplacian of the unbalanced 9-node signed graph.
inline Matrix signed_g2_laplacian() {
  return rows({{2, -1, 0, -1, 0, 0, 0, 0, 0},
               {-1, 5, 1, 1, -1, 0, 0, -1, 0},
               {0, 1, 3, 0, -1, -1, 0, 0, 0},
               {-1, 1, 0, 5, 1, 0, -1, -1, 0},
               {0, -1, -1, 1, 6, -1, 0, 1, -1},
               {0, 0, -1, 0, -1, 4, 0, 1, -1},
               {0, 0, 0, -1, 0, 0, 2, -1, 0},
               {0, -1, 0, -1, 1, 1, -1, 6, 1},
               {0, 0, 0, 0, -1, -1, 0, 1, 3}});
}

inline Graph from_signed_laplacian(const Matrix& lbar) {
  Matrix w = -lbar;
  w.diagonal().setZero();
  return Graph(w);
}

inline Graph signed_g1() { return from_signed_laplacian(signed_g1_laplacian()); }
inline Graph signed_g2() { return from_signed_laplacian(signed_g2_laplacian()); }

// 7-cycle with every edge negative.
inline Graph negative_seven_cycle() { return ring(7, -1.0); }

// 7-cycle with the single edge {1,2} negative.
inline Graph seven_cycle_one_negative() {
  Matrix w = ring(7).weights();
  w(0, 1) = -1.0;
  w(1, 0) = -1.0;
  return Graph(w);
}

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Connected graph: a random spanning tree plus extra edges with probability `density`.
// Weights are uniform in [0.1, 2]; each edge is negated with probability `negative_p`.
inline Graph random_connected(Rng& rng, std::size_t m, double density = 0.4, double negative_p = 0.0) {
  const auto n = static_cast<Eigen::Index>(m);
  Matrix w = Matrix::Zero(n, n);
  auto weight = [&] {
    double v = uniform(rng, 0.1, 2.0);
    if (uniform(rng, 0.0, 1.0) < negative_p) v = -v;
    return v;
  };
  for (Eigen::Index i = 1; i < n; ++i) {
    const auto parent = static_cast<Eigen::Index>(
        std::uniform_int_distribution<long>(0, static_cast<long>(i) - 1)(rng));
    w(i, parent) = w(parent, i) = weight();
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (w(i, j) == 0.0 && uniform(rng, 0.0, 1.0) < density) w(i, j) = w(j, i) = weight();
    }
  }
  return Graph(w);
}

// Random graph that may be disconnected; may contain isolated nodes.
inline Graph random_sparse(Rng& rng, std::size_t m, double density) {
  const auto n = static_cast<Eigen::Index>(m);
  Matrix w = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (uniform(rng, 0.0, 1.0) < density) w(i, j) = w(j, i) = uniform(rng, 0.1, 2.0);
    }
  }
  return Graph(w);
}

// Connected balanced signed graph: signs follow a random two-coloring; at least one
// negative edge whenever both colors occur.
inline Graph random_balanced(Rng& rng, std::size_t m, double density, std::vector<int>* coloring = nullptr) {
  const Graph base = random_connected(rng, m, density);
  std::vector<int> side(m);
  for (auto& s : side) s = uniform(rng, 0.0, 1.0) < 0.5 ? 1 : -1;
  side[0] = 1;
  side[m - 1] = -1;
  Matrix w = base.weights();
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      w(i, j) *= side[static_cast<std::size_t>(i)] * side[static_cast<std::size_t>(j)];
    }
  }
  if (coloring != nullptr) *coloring = side;
  return Graph(w);
}

inline Matrix random_symmetric(Rng& rng, Eigen::Index n) {
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) a(i, j) = a(j, i) = uniform(rng, -1.0, 1.0);
  }
  return a;
}

inline Matrix random_matrix(Rng& rng, Eigen::Index r, Eigen::Index c) {
  Matrix a(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) a(i, j) = uniform(rng, -1.0, 1.0);
  }
  return a;
}

// r x c matrix with orthonormal columns (Householder QR of a Gaussian matrix).
inline Matrix random_orthonormal(Rng& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> normal;
  Matrix a(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) a(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(r, c);
  return q;
}

inline Vector random_unit(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v.normalized();
}

}  // namespace speclap::testing
