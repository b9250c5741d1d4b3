#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "speclap/eigen.hpp"
#include "speclap/error.hpp"
#include "speclap/graph.hpp"
#include "speclap/laplacian.hpp"

namespace speclap {

/// Row i holds the coordinates of node i. `eigenvalues` lists the eigenvalues of the
/// columns that were used.
struct DrawingMatrix {
  Matrix coords;
  Vector eigenvalues;

  Eigen::Index dimension() const { return coords.cols(); }
};

enum class SignedLayout { nonbipartite, bipartite };

namespace detail {

inline void check_rows(const Graph& g, const Matrix& r) {
  if (static_cast<std::size_t>(r.rows()) != g.size()) {
    fail(ErrorKind::InvalidArgument, "drawing has " + std::to_string(r.rows()) +
                                         " rows for a graph of " + std::to_string(g.size()) + " nodes");
  }
}

inline DrawingMatrix take_columns(const SymmetricEigen& eig, Eigen::Index first, Eigen::Index n) {
  return {eig.vectors.middleCols(first, n), eig.values.segment(first, n)};
}

}  // namespace detail

/// Spring energy as a sum over edges of |w_ij| * ||r_i - sgn(w_ij) r_j||^2.
inline double edge_energy(const Graph& g, const Matrix& r, GraphKind kind = GraphKind::unsigned_graph) {
  detail::check_rows(g, r);
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) continue;
      const auto ri = r.row(static_cast<Eigen::Index>(i));
      const auto rj = r.row(static_cast<Eigen::Index>(j));
      if (kind == GraphKind::signed_graph && w < 0.0) {
        total += -w * (ri + rj).squaredNorm();
      } else {
        total += w * (ri - rj).squaredNorm();
      }
    }
  }
  return total;
}

/// tr(R^T L R), with L̄ in place of L for signed graphs.
inline double energy(const Graph& g, const Matrix& r, GraphKind kind = GraphKind::unsigned_graph) {
  detail::check_rows(g, r);
  const LaplacianKind lk =
      kind == GraphKind::signed_graph ? LaplacianKind::signed_unnormalized : LaplacianKind::unnormalized;
  return (r.transpose() * laplacian(g, lk).matrix * r).trace();
}

/// Balanced orthogonal drawing of minimal energy: eigenvectors u_2..u_{n+1} of L.
inline DrawingMatrix spectral_drawing(const Graph& g, Eigen::Index n, const EigenOptions& opts = {}) {
  if (g.has_negative_edges()) {
    fail(ErrorKind::NegativeWeight, "graph has negative weights; use signed_drawing");
  }
  if (n < 1) fail(ErrorKind::InvalidArgument, "drawing dimension must be at least 1");
  const auto m = static_cast<Eigen::Index>(g.size());
  if (n + 1 > m) {
    fail(ErrorKind::DimensionTooLarge, "dimension " + std::to_string(n) + " needs at least " +
                                           std::to_string(n + 1) + " nodes, graph has " +
                                           std::to_string(m));
  }
  const Components comps = connected_components(g);
  if (comps.count != 1) {
    fail(ErrorKind::Disconnected, "graph has " + std::to_string(comps.count) + " components");
  }
  const SymmetricEigen eig = sym_eigen(laplacian(g, LaplacianKind::unnormalized).matrix, opts);
  if (eig.values(1) <= 1e-9 * eig.values(m - 1)) {
    fail(ErrorKind::Disconnected, "second Laplacian eigenvalue is numerically zero");
  }
  return detail::take_columns(eig, 1, n);
}

/// Minimal-energy drawing of a signed graph from the eigenvectors of L̄.
/// Unbalanced graphs use u_1..u_n. Balanced graphs use u_2..u_{n+1}, or u_1, u_2
/// when `layout` is bipartite (n must be 2).
inline DrawingMatrix signed_drawing(const Graph& g, Eigen::Index n,
                                    SignedLayout layout = SignedLayout::nonbipartite,
                                    const EigenOptions& opts = {}) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "drawing dimension must be at least 1");
  const auto m = static_cast<Eigen::Index>(g.size());
  if (m < 3) fail(ErrorKind::InvalidArgument, "signed drawings need at least 3 nodes");
  const Components comps = connected_components(g);
  if (comps.count != 1) {
    fail(ErrorKind::Disconnected, "graph has " + std::to_string(comps.count) + " components");
  }
  if (!g.has_negative_edges()) {
    fail(ErrorKind::NoNegativeEdges, "graph has no negative edges; use spectral_drawing");
  }
  const SymmetricEigen eig = sym_eigen(laplacian(g, LaplacianKind::signed_unnormalized).matrix, opts);
  if (!is_balanced(g).balanced) {
    if (n > m) {
      fail(ErrorKind::DimensionTooLarge,
           "dimension " + std::to_string(n) + " exceeds node count " + std::to_string(m));
    }
    return detail::take_columns(eig, 0, n);
  }
  if (layout == SignedLayout::bipartite) {
    if (n != 2) fail(ErrorKind::InvalidArgument, "bipartite drawings are two-dimensional");
    return detail::take_columns(eig, 0, 2);
  }
  if (n + 1 > m) {
    fail(ErrorKind::DimensionTooLarge, "dimension " + std::to_string(n) + " needs at least " +
                                           std::to_string(n + 1) + " nodes, graph has " +
                                           std::to_string(m));
  }
  return detail::take_columns(eig, 1, n);
}

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

/// Writes columns `cx`, `cy` of the drawing as an SVG with a 1000x1000 viewBox.
inline void write_svg(std::ostream& out, const Graph& g, const Matrix& r, Eigen::Index cx = 0,
                      Eigen::Index cy = 1) {
  detail::check_rows(g, r);
  if (cx >= r.cols() || cy >= r.cols()) {
    fail(ErrorKind::InvalidArgument, "SVG output needs at least two coordinate columns");
  }
  constexpr double kSize = 1000.0;
  constexpr double kMargin = 50.0;
  const Vector xs = r.col(cx);
  const Vector ys = r.col(cy);
  const double xmin = xs.size() ? xs.minCoeff() : 0.0;
  const double xmax = xs.size() ? xs.maxCoeff() : 0.0;
  const double ymin = ys.size() ? ys.minCoeff() : 0.0;
  const double ymax = ys.size() ? ys.maxCoeff() : 0.0;
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double inner = kSize - 2.0 * kMargin;
  const double scale = span > 0.0 ? inner / span : 0.0;
  const double xoff = kMargin + (inner - (xmax - xmin) * scale) / 2.0;
  const double yoff = kMargin + (inner - (ymax - ymin) * scale) / 2.0;
  auto px = [&](Eigen::Index i) { return xoff + (xs(i) - xmin) * scale; };
  auto py = [&](Eigen::Index i) { return yoff + (ymax - ys(i)) * scale; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1000 1000\" "
         "width=\"1000\" height=\"1000\">\n"
      << "<style>\n"
      << "  .edge { stroke: #4d4d4d; stroke-width: 2; }\n"
      << "  .edge.negative { stroke: #c0392b; stroke-dasharray: 10 6; }\n"
      << "  .node { fill: #2a6fb0; stroke: #ffffff; stroke-width: 2; }\n"
      << "  .label { font: 14px sans-serif; fill: #222222; }\n"
      << "</style>\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) continue;
      const auto a = static_cast<Eigen::Index>(i);
      const auto b = static_cast<Eigen::Index>(j);
      out << "<line class=\"" << (w < 0.0 ? "edge negative" : "edge") << "\" x1=\"" << detail::fmt(px(a))
          << "\" y1=\"" << detail::fmt(py(a)) << "\" x2=\"" << detail::fmt(px(b)) << "\" y2=\""
          << detail::fmt(py(b)) << "\"/>\n";
    }
  }
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    out << "<circle class=\"node\" cx=\"" << detail::fmt(px(i)) << "\" cy=\"" << detail::fmt(py(i))
        << "\" r=\"10\"/>\n";
  }
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    out << "<text class=\"label\" x=\"" << detail::fmt(px(i) + 12.0) << "\" y=\""
        << detail::fmt(py(i) - 12.0) << "\">" << i + 1 << "</text>\n";
  }
  out << "</svg>\n";
}

/// Emits one SVG for a 2-d drawing. A 3-d drawing yields two files: columns 1-2 at
/// `path` and columns 1-3 at `<stem>_13<ext>`. Returns the files written.
inline std::vector<std::filesystem::path> emit_svg(const DrawingMatrix& drawing, const Graph& g,
                                                   const std::filesystem::path& path) {
  const Eigen::Index n = drawing.dimension();
  if (n != 2 && n != 3) fail(ErrorKind::InvalidArgument, "SVG output supports 2-d and 3-d drawings");
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::filesystem::path& target, Eigen::Index cy) {
    std::ofstream file(target);
    if (!file) fail(ErrorKind::IoError, "cannot open " + target.string() + " for writing");
    write_svg(file, g, drawing.coords, 0, cy);
    if (!file) fail(ErrorKind::IoError, "failed writing " + target.string());
    written.push_back(target);
  };
  emit(path, 1);
  if (n == 3) {
    std::filesystem::path second = path;
    second.replace_filename(path.stem().string() + "_13" + path.extension().string());
    emit(second, 2);
  }
  return written;
}

/// CSV with header `node,x1,...,xn` and 1-based node ids.
inline void write_csv(std::ostream& out, const Matrix& r) {
  out << "node";
  for (Eigen::Index c = 0; c < r.cols(); ++c) out << ",x" << c + 1;
  out << '\n';
  char buf[32];
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    out << i + 1;
    for (Eigen::Index c = 0; c < r.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", r(i, c));
      out << ',' << buf;
    }
    out << '\n';
  }
}

inline void emit_csv(const DrawingMatrix& drawing, const std::filesystem::path& path) {
  std::ofstream file(path);
  if (!file) fail(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  write_csv(file, drawing.coords);
  if (!file) fail(ErrorKind::IoError, "failed writing " + path.string());
}

}  // namespace speclap
