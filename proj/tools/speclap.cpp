// Command-line front end: spectral drawings, K-way clustering and balance checks on
// edge-list graph files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "speclap/drawing.hpp"
#include "speclap/io.hpp"
#include "speclap/kway.hpp"
#include "speclap/laplacian.hpp"
#include "speclap/ncut2.hpp"

namespace {

using nlohmann::json;
using namespace speclap;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

json to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

void print_error(std::string_view kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

std::optional<EigenOptions> eigen_options_from_env() {
  EigenOptions opts;
  if (const char* raw = std::getenv("SPECLAP_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) return std::nullopt;
    opts.tol = tol;
  }
  return opts;
}

struct DrawArgs {
  std::string graph;
  int dim = 2;
  bool signed_mode = false;
  bool bipartite = false;
  std::string svg;
  std::string csv;
};

int run_draw(const DrawArgs& args, const EigenOptions& opts) {
  const Graph g = parse_graph(std::filesystem::path(args.graph));
  if (!args.signed_mode && g.has_negative_edges()) {
    fail(ErrorKind::NegativeWeightInUnsignedMode, "graph has negative weights; pass --signed");
  }
  const DrawingMatrix drawing =
      args.signed_mode
          ? signed_drawing(g, args.dim, args.bipartite ? SignedLayout::bipartite : SignedLayout::nonbipartite,
                           opts)
          : spectral_drawing(g, args.dim, opts);
  const GraphKind kind = args.signed_mode ? GraphKind::signed_graph : GraphKind::unsigned_graph;
  json report{{"nodes", g.size()},
              {"dimension", drawing.dimension()},
              {"signed", args.signed_mode},
              {"energy", energy(g, drawing.coords, kind)},
              {"eigenvalues", to_json(drawing.eigenvalues)}};
  if (!args.svg.empty()) {
    if (drawing.dimension() == 3) {
      std::cerr << json{{"warning", "3-d drawing written as two projections (columns 1-2 and 1-3)"}}.dump()
                << '\n';
    }
    json files = json::array();
    for (const auto& p : emit_svg(drawing, g, args.svg)) files.push_back(p.string());
    report["svg"] = files;
  }
  if (!args.csv.empty()) {
    emit_csv(drawing, args.csv);
    report["csv"] = args.csv;
  }
  std::cout << report.dump() << '\n';
  return 0;
}

struct ClusterArgs {
  std::string graph;
  std::size_t k = 2;
  std::string mode = "ncut";
  std::string rescale = "rownorm";
  std::size_t max_iters = 100;
  bool rotation_only = false;
  std::string json_out;
};

const std::map<std::string, CutMode> kModes{{"ncut", CutMode::ncut},
                                            {"sncut", CutMode::signed_ncut},
                                            {"rcut", CutMode::rcut},
                                            {"srcut", CutMode::signed_rcut}};

const std::map<std::string, RescaleMethod> kRescale{{"none", RescaleMethod::none},
                                                    {"rowsum", RescaleMethod::row_sum_ls},
                                                    {"rownorm-ls", RescaleMethod::row_norm_ls},
                                                    {"rownorm", RescaleMethod::row_normalize}};

json assignments_json(const std::vector<std::size_t>& labels) {
  json out = json::array();
  for (std::size_t l : labels) out.push_back(l + 1);
  return out;
}

int run_cluster(const ClusterArgs& args, const EigenOptions& opts) {
  const Graph g = parse_graph(std::filesystem::path(args.graph));
  const CutMode mode = kModes.at(args.mode);
  if (!is_signed_mode(mode) && g.has_negative_edges()) {
    fail(ErrorKind::NegativeWeightInUnsignedMode,
         "graph has negative weights; use --mode sncut or --mode srcut");
  }
  ClusterOptions options;
  options.rescale = kRescale.at(args.rescale);
  options.max_iters = args.max_iters;
  options.fit_scale = !args.rotation_only;
  options.eigen = opts;
  const KWayResult result = cluster(g, args.k, mode, options);

  json report{{"k", args.k},
              {"mode", args.mode},
              {"rescale", args.rescale},
              {"rotation_only", args.rotation_only},
              {"assignments", assignments_json(result.partition.labels())},
              {"objective", result.objective},
              {"relaxation_value", result.z.relaxation_value()},
              {"iterations", result.iterations},
              {"residual", result.residual},
              {"deformed_initialization", result.deformed_initialization}};
  if (args.k == 2 && mode == CutMode::ncut) {
    const TwoWayResult two = ncut2(g, opts);
    std::vector<std::size_t> labels(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) labels[i] = two.partition.contains(i) ? 0 : 1;
    report["ncut2"] = {{"assignments", assignments_json(labels)},
                       {"objective", two.ncut},
                       {"residual", two.residual}};
  }
  const std::string text = report.dump();
  if (!args.json_out.empty()) {
    std::ofstream file(args.json_out);
    if (!(file << text << '\n')) fail(ErrorKind::IoError, "cannot write " + args.json_out);
  }
  std::cout << text << '\n';
  return 0;
}

int run_balance(const std::string& path, const EigenOptions& opts) {
  const Graph g = parse_graph(std::filesystem::path(path));
  const BalanceReport report = is_balanced(g);
  const Vector values = sym_eigen(laplacian(g, LaplacianKind::signed_unnormalized).matrix, opts).values;
  json out{{"balanced", report.balanced}};
  if (report.bipartition) out["bipartition"] = *report.bipartition;
  out["smallest_signed_laplacian_eigenvalue"] = values(0);
  std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral drawing and clustering of weighted and signed graphs"};
  app.require_subcommand(1);

  DrawArgs draw;
  auto* draw_cmd = app.add_subcommand("draw", "Spectral drawing; prints energy and eigenvalues as JSON");
  draw_cmd->add_option("graph", draw.graph, "Edge-list graph file")->required()->check(CLI::ExistingFile);
  draw_cmd->add_option("--dim", draw.dim, "Drawing dimension")->check(CLI::PositiveNumber);
  draw_cmd->add_flag("--signed", draw.signed_mode, "Use the signed Laplacian");
  draw_cmd->add_flag("--bipartite", draw.bipartite, "Balanced signed graphs: draw as bipartite (dim 2)");
  draw_cmd->add_option("--svg", draw.svg, "Write an SVG drawing");
  draw_cmd->add_option("--csv", draw.csv, "Write node coordinates as CSV");

  ClusterArgs clus;
  auto* cluster_cmd = app.add_subcommand("cluster", "K-way clustering; prints a JSON report");
  cluster_cmd->add_option("graph", clus.graph, "Edge-list graph file")->required()->check(CLI::ExistingFile);
  cluster_cmd->add_option("--k", clus.k, "Number of blocks")->required()->check(CLI::Range(2, 1 << 20));
  cluster_cmd->add_option("--mode", clus.mode, "ncut, sncut, rcut or srcut")
      ->check(CLI::IsMember({"ncut", "sncut", "rcut", "srcut"}));
  cluster_cmd->add_option("--rescale", clus.rescale, "rowsum, rownorm-ls, rownorm or none")
      ->check(CLI::IsMember({"rowsum", "rownorm-ls", "rownorm", "none"}));
  cluster_cmd->add_option("--max-iters", clus.max_iters, "Alternation cap")->check(CLI::PositiveNumber);
  cluster_cmd->add_flag("--rotation-only", clus.rotation_only, "Refit only the rotation (keep Lambda = I)");
  cluster_cmd->add_option("--json", clus.json_out, "Also write the report to this file");

  std::string balance_graph;
  auto* balance_cmd = app.add_subcommand("balance", "Balance check of a connected signed graph");
  balance_cmd->add_option("graph", balance_graph, "Edge-list graph file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return kExitUsage;
  }

  const auto opts = eigen_options_from_env();
  if (!opts) {
    print_error("UsageError", "SPECLAP_TOL must be a positive number");
    return kExitUsage;
  }

  try {
    if (*draw_cmd) return run_draw(draw, *opts);
    if (*cluster_cmd) return run_cluster(clus, *opts);
    return run_balance(balance_graph, *opts);
  } catch (const Error& e) {
    print_error(kind_name(e.kind()), e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return kExitDomain;
  }
}
