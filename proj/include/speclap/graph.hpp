#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "speclap/error.hpp"
#include "speclap/matrix.hpp"

namespace speclap {

/// Selects plain degrees/cuts or the signed variants built from |w_ij|.
enum class GraphKind { unsigned_graph, signed_graph };

enum class SignFilter { all, positive_only, negative_only };

/// Undirected weighted graph on nodes 0..m-1. The weight matrix is symmetric with a zero
/// diagonal; an edge {i, j} exists iff w_ij != 0. Negative weights make the graph signed.
class Graph {
 public:
  explicit Graph(Matrix weights) : w_(std::move(weights)) {
    if (w_.rows() != w_.cols()) fail(ErrorKind::InvalidArgument, "weight matrix must be square");
    if (w_.rows() < 1) fail(ErrorKind::InvalidArgument, "graph needs at least one node");
    if (!w_.allFinite()) fail(ErrorKind::InvalidArgument, "weights must be finite");
    const Eigen::Index m = w_.rows();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (w_(i, i) != 0.0) {
        fail(ErrorKind::NonZeroDiagonal, "nonzero diagonal entry at node " + std::to_string(i + 1));
      }
      for (Eigen::Index j = i + 1; j < m; ++j) {
        if (w_(i, j) != w_(j, i)) {
          fail(ErrorKind::NotSymmetric, "w(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ") != w(" + std::to_string(j + 1) + "," +
                                            std::to_string(i + 1) + ")");
        }
      }
    }
  }

  std::size_t size() const { return static_cast<std::size_t>(w_.rows()); }
  const Matrix& weights() const { return w_; }
  double weight(std::size_t i, std::size_t j) const { return w_(i, j); }
  bool has_edge(std::size_t i, std::size_t j) const { return w_(i, j) != 0.0; }

  bool has_negative_edges() const { return (w_.array() < 0.0).any(); }

  std::size_t edge_count() const {
    return static_cast<std::size_t>((w_.array() != 0.0).count()) / 2;
  }

 private:
  Matrix w_;
};

/// Builds a graph from (W + W^T) / 2.
inline Graph symmetrize(const Matrix& w) { return Graph(0.5 * (w + w.transpose())); }

/// A set of node indices. Membership is validated against the node count.
class NodeSubset {
 public:
  NodeSubset(std::size_t node_count, std::span<const std::size_t> members)
      : mask_(node_count, false) {
    for (std::size_t v : members) {
      if (v >= node_count) {
        fail(ErrorKind::IndexOutOfRange, "node " + std::to_string(v + 1) + " outside graph of size " +
                                             std::to_string(node_count));
      }
      if (mask_[v]) fail(ErrorKind::InvalidArgument, "duplicate node " + std::to_string(v + 1));
      mask_[v] = true;
    }
  }

  NodeSubset(std::size_t node_count, std::initializer_list<std::size_t> members)
      : NodeSubset(node_count, std::span<const std::size_t>(members.begin(), members.size())) {}

  static NodeSubset from_mask(std::vector<bool> mask) {
    NodeSubset s(mask.size(), std::span<const std::size_t>{});
    s.mask_ = std::move(mask);
    return s;
  }

  static NodeSubset all(std::size_t node_count) {
    return from_mask(std::vector<bool>(node_count, true));
  }

  std::size_t node_count() const { return mask_.size(); }
  bool contains(std::size_t v) const { return mask_[v]; }
  const std::vector<bool>& mask() const { return mask_; }

  std::size_t size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }
  bool empty() const { return size() == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < mask_.size(); ++v) {
      if (mask_[v]) out.push_back(v);
    }
    return out;
  }

  NodeSubset complement() const {
    std::vector<bool> flipped(mask_.size());
    for (std::size_t v = 0; v < mask_.size(); ++v) flipped[v] = !mask_[v];
    return from_mask(std::move(flipped));
  }

  friend bool operator==(const NodeSubset&, const NodeSubset&) = default;

 private:
  std::vector<bool> mask_;
};

struct OrientedEdge {
  std::size_t source;
  std::size_t target;
  double weight;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

struct OrientedGraph {
  Graph base;
  std::vector<OrientedEdge> edges;
};

struct Components {
  std::vector<std::size_t> label;  // 1..count, in first-visit order
  std::size_t count = 0;
};

inline Vector degree_vector(const Graph& g, GraphKind kind = GraphKind::unsigned_graph) {
  if (kind == GraphKind::signed_graph) return g.weights().cwiseAbs().rowwise().sum();
  return g.weights().rowwise().sum();
}

namespace detail {

inline void check_subset(const Graph& g, const NodeSubset& a) {
  if (a.node_count() != g.size()) {
    fail(ErrorKind::InvalidArgument, "subset built for " + std::to_string(a.node_count()) +
                                         " nodes used on a graph of " + std::to_string(g.size()));
  }
}

}  // namespace detail

inline double volume(const Graph& g, const NodeSubset& a, GraphKind kind = GraphKind::unsigned_graph) {
  detail::check_subset(g, a);
  const Vector d = degree_vector(g, kind);
  double total = 0.0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (a.contains(v)) total += d(static_cast<Eigen::Index>(v));
  }
  return total;
}

/// Sum of w_ij over i in a, j in b. `negative_only` reports the (nonnegative) mass of -w_ij.
inline double links(const Graph& g, const NodeSubset& a, const NodeSubset& b,
                    SignFilter filter = SignFilter::all) {
  detail::check_subset(g, a);
  detail::check_subset(g, b);
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!a.contains(i)) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!b.contains(j)) continue;
      const double w = g.weight(i, j);
      switch (filter) {
        case SignFilter::all: total += w; break;
        case SignFilter::positive_only: if (w > 0.0) total += w; break;
        case SignFilter::negative_only: if (w < 0.0) total -= w; break;
      }
    }
  }
  return total;
}

inline double assoc(const Graph& g, const NodeSubset& a) { return links(g, a, a); }

inline double cut(const Graph& g, const NodeSubset& a, GraphKind kind = GraphKind::unsigned_graph) {
  detail::check_subset(g, a);
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!a.contains(i)) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (a.contains(j)) continue;
      total += kind == GraphKind::signed_graph ? std::abs(g.weight(i, j)) : g.weight(i, j);
    }
  }
  return total;
}

inline Components connected_components(const Graph& g) {
  const std::size_t m = g.size();
  Components out;
  out.label.assign(m, 0);
  for (std::size_t root = 0; root < m; ++root) {
    if (out.label[root] != 0) continue;
    out.label[root] = ++out.count;
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < m; ++j) {
        if (g.has_edge(i, j) && out.label[j] == 0) {
          out.label[j] = out.count;
          frontier.push(j);
        }
      }
    }
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count == 1; }

/// Orients every edge {i, j} with i < j as (i, j); edges listed lexicographically.
inline OrientedGraph orient(const Graph& g) {
  OrientedGraph out{g, {}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g.has_edge(i, j)) out.edges.push_back({i, j, g.weight(i, j)});
    }
  }
  return out;
}

/// Node-by-edge matrix with B B^T = D - W (unsigned) or D̄ - W (signed).
inline Matrix incidence_matrix(const OrientedGraph& og, GraphKind kind = GraphKind::unsigned_graph) {
  const auto m = static_cast<Eigen::Index>(og.base.size());
  Matrix b = Matrix::Zero(m, static_cast<Eigen::Index>(og.edges.size()));
  for (std::size_t e = 0; e < og.edges.size(); ++e) {
    const auto& [s, t, w] = og.edges[e];
    const auto col = static_cast<Eigen::Index>(e);
    if (w < 0.0) {
      if (kind != GraphKind::signed_graph) {
        fail(ErrorKind::NegativeWeight, "negative weight on edge (" + std::to_string(s + 1) + "," +
                                            std::to_string(t + 1) + ") in unsigned mode");
      }
      const double r = std::sqrt(-w);
      b(static_cast<Eigen::Index>(s), col) = r;
      b(static_cast<Eigen::Index>(t), col) = r;
    } else {
      const double r = std::sqrt(w);
      b(static_cast<Eigen::Index>(s), col) = r;
      b(static_cast<Eigen::Index>(t), col) = -r;
    }
  }
  return b;
}

inline Matrix adjacency_matrix(const Graph& g) {
  return (g.weights().array() != 0.0).cast<double>().matrix();
}

}  // namespace speclap
