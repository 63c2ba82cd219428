// geostress: weighted stress embedding of finite metric spaces.
//
//   geostress gen-ring      --out ring.csv
//   geostress embed         --dist ring.csv.dist --weights tanh:10,0.5 --init isomap:0.5 --out x.csv
//   geostress sweep         --dist ring.csv.dist --out sweep.csv
//   geostress compare       --cloud-a a.csv --cloud-b b.csv --congruence
//   geostress rigidity-demo --etas 1,0.5,0.1,0
//
// Exit codes: 0 success, 2 input error, 3 disconnected neighbourhood graph,
// 4 optimizer did not converge (only with --strict).

#include "geostress/cli_options.hpp"
#include "geostress/compare.hpp"
#include "geostress/error.hpp"
#include "geostress/experiments.hpp"
#include "geostress/graph.hpp"
#include "geostress/io.hpp"
#include "geostress/optimize.hpp"
#include "geostress/weights.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace gs = geostress;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitNotConverged = 4;

struct OptimFlags {
  int max_iters = 2000;
  double grad_tol = 1e-8;
  double f_tol = 1e-12;
  int hops = 100;
  double step = 0.0;  // 0 = data-dependent default
  double temperature = 1.0;

  gs::OptimConfig config(std::uint64_t seed) const {
    gs::OptimConfig cfg;
    cfg.max_iters = max_iters;
    cfg.grad_tol = grad_tol;
    cfg.f_tol = f_tol;
    cfg.bh_hops = hops;
    if (step > 0.0) cfg.bh_step = step;
    cfg.bh_temperature = temperature;
    cfg.seed = seed;
    return cfg;
  }
};

void add_optim_flags(CLI::App* sub, OptimFlags& f) {
  sub->add_option("--max-iters", f.max_iters, "BFGS iteration limit")->capture_default_str();
  sub->add_option("--grad-tol", f.grad_tol, "gradient max-norm tolerance")->capture_default_str();
  sub->add_option("--f-tol", f.f_tol, "relative decrease tolerance")->capture_default_str();
  sub->add_option("--hops", f.hops, "basin-hopping rounds")->capture_default_str();
  sub->add_option("--step", f.step, "basin-hopping step (default 0.5*max(d)/sqrt(n))");
  sub->add_option("--temperature", f.temperature, "basin-hopping temperature")->capture_default_str();
}

void add_jobs_flag(CLI::App* sub, std::size_t& jobs) {
  sub->add_option("--jobs", jobs, "worker threads (1 = deterministic single-threaded)")
      ->envname("GEOSTRESS_JOBS")
      ->capture_default_str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// --- gen-ring ---------------------------------------------------------------

struct GenRingArgs {
  std::size_t n = 100;
  double r_in = 0.8;
  double r_out = 1.0;
  std::uint64_t seed = 0;
  std::string out;
  bool uniform_radius = false;
};

int run_gen_ring(const GenRingArgs& a) {
  if (!(a.r_in > 0.0) || !(a.r_in < a.r_out)) {
    std::cerr << "error: ring radii must satisfy 0 < r-in < r-out (got r-in=" << a.r_in
              << ", r-out=" << a.r_out << ")\n";
    return kExitInput;
  }
  const gs::PointCloud x =
      gs::gen_ring(a.n, a.r_in, a.r_out, a.seed,
                   a.uniform_radius ? gs::RingSampling::UniformRadius : gs::RingSampling::UniformArea);
  gs::io::write_csv_matrix(a.out, x.matrix());
  gs::io::write_csv_matrix(a.out + ".dist", gs::DistanceMatrix::from_points(x).matrix());
  std::cout << "wrote " << a.n << " points to " << a.out << " and distances to " << a.out
            << ".dist\n";
  return 0;
}

// --- embed ------------------------------------------------------------------

struct EmbedArgs {
  std::string dist;
  std::size_t dim = 2;
  std::string weights = "constant";
  std::string kernel = "squared";
  std::string init = "mds";
  std::string method = "bfgs";
  std::uint64_t seed = 0;
  std::string out;
  std::string plot;
  bool strict = false;
  double eps = 0.0;
  OptimFlags optim;
};

int run_embed(const EmbedArgs& a) {
  const gs::DistanceMatrix d = gs::io::read_distance_matrix(a.dist);
  const gs::WeightFamily family = gs::cli::parse_weight_family(a.weights);
  const gs::StressKernel kernel = gs::cli::parse_kernel(a.kernel);
  const gs::InitSpec init = gs::cli::parse_init(a.init, a.seed);
  const gs::Method method = gs::cli::parse_method(a.method);
  const gs::WeightMatrix w = gs::build_weight_matrix(d, family);

  const gs::OptimResult r =
      gs::solve_nlm(d, w, a.dim, kernel, init, method, a.optim.config(a.seed), a.eps);
  gs::io::write_csv_matrix(a.out, r.x.matrix());
  if (!a.plot.empty()) gs::io::write_svg_scatter(a.plot, r.x);

  if (!r.weight_graph_connected)
    std::cerr << "warning: the positive-weight graph is not connected; the minimizer set is "
                 "unbounded and the result is one arbitrary representative\n";
  if (w.clamped()) std::cout << "note: weights were clamped to [0,1]\n";
  std::cout << "weights: " << gs::describe(family) << "\n"
            << "initial cost: " << gs::io::format_double(r.init_cost) << "\n"
            << "final cost: " << gs::io::format_double(r.cost) << "\n"
            << "iterations: " << r.n_iters << "\n"
            << "converged: " << (r.converged ? "true" : "false") << " (" << r.stop_reason << ")\n";
  if (a.strict && !r.converged) {
    std::cerr << "error: optimizer did not converge\n";
    return kExitNotConverged;
  }
  return 0;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string dist;
  std::string thetas = "1,0.5,0.25";
  std::string stiffness = "5,10,20,50";
  std::string methods = "bfgs,bh";
  std::string kernel = "squared";
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::string out;
  bool timing = false;
  std::size_t jobs = 1;
  OptimFlags optim;
};

int run_sweep(const SweepArgs& a) {
  const gs::DistanceMatrix d = gs::io::read_distance_matrix(a.dist);
  const gs::SweepReport report = gs::continuity_sweep(
      d, gs::cli::parse_real_list(a.thetas), gs::cli::parse_real_list(a.stiffness),
      gs::cli::parse_method_list(a.methods), a.dim, a.optim.config(a.seed),
      gs::cli::parse_kernel(a.kernel), a.jobs, a.seed);
  std::ofstream out(a.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + a.out + "' for writing");
  gs::io::write_sweep_csv(out, report, a.timing);
  std::cout << gs::io::format_sweep_table(report);
  return 0;
}

// --- compare ----------------------------------------------------------------

struct CompareArgs {
  std::string a;
  std::string b;
  bool congruence = false;
};

int run_compare(const CompareArgs& c) {
  const gs::PointCloud a = gs::io::read_point_cloud(c.a);
  const gs::PointCloud b = gs::io::read_point_cloud(c.b);
  if (a.k() != b.k()) {
    std::cerr << "error: clouds have different dimensions (" << a.k() << " vs " << b.k() << ")\n";
    return kExitInput;
  }
  if (c.congruence && a.n() != b.n()) {
    std::cerr << "error: --congruence needs the same number of rows (" << a.n() << " vs "
              << b.n() << ")\n";
    return kExitInput;
  }
  const auto h = gs::hausdorff_points(a, b);
  std::cout << "delta(A,B): " << gs::io::format_double(h.a_to_b) << "\n"
            << "delta(B,A): " << gs::io::format_double(h.b_to_a) << "\n"
            << "hausdorff: " << gs::io::format_double(h.value) << "\n";
  if (c.congruence)
    std::cout << "congruence: " << gs::io::format_double(gs::congruence_distance(a, b)) << "\n";
  return 0;
}

// --- rigidity-demo ----------------------------------------------------------

struct RigidityArgs {
  std::string etas = "1,0.5,0.1,0.01,0";
  std::size_t starts = 20;
  std::uint64_t seed = 0;
  double class_tol = 1e-4;
  std::size_t jobs = 1;
  OptimFlags optim;
};

int run_rigidity(const RigidityArgs& a) {
  const gs::RigidityReport rep = gs::rigidity_demo(
      gs::cli::parse_real_list(a.etas), a.starts, a.optim.config(a.seed), a.class_tol, a.jobs);
  std::cout << std::left << std::setw(8) << "eta" << std::right << std::setw(8) << "sample"
            << std::setw(9) << "classes" << std::setw(14) << "best_cost" << std::setw(14)
            << "max_pairwise" << std::setw(14) << "d_to_eta0" << '\n';
  for (const auto& r : rep.rows)
    std::cout << std::left << std::setw(8) << fmt(r.eta) << std::right << std::setw(8)
              << r.sample_size << std::setw(9) << r.classes << std::setw(14) << fmt(r.best_cost)
              << std::setw(14) << fmt(r.max_pairwise) << std::setw(14)
              << fmt(r.distance_to_flexible) << '\n';
  std::cout << "collinear configuration stress at eta=0: "
            << gs::io::format_double(rep.collinear_stress) << "\n"
            << "congruence(collinear, triangle): "
            << gs::io::format_double(rep.collinear_to_triangle) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted stress embedding of finite metric spaces"};
  app.set_config("--config", "", "read options from a TOML/INI file ([subcommand] sections)");
  app.require_subcommand(1);

  GenRingArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-ring", "sample points uniformly in an annulus");
  gen_cmd->add_option("--n", gen.n, "number of points")->capture_default_str();
  gen_cmd->add_option("--r-in", gen.r_in, "inner radius")->capture_default_str();
  gen_cmd->add_option("--r-out", gen.r_out, "outer radius")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "point cloud CSV (distances go to PATH.dist)")->required();
  gen_cmd->add_flag("--uniform-radius", gen.uniform_radius, "uniform radius instead of uniform area");

  EmbedArgs emb;
  auto* emb_cmd = app.add_subcommand("embed", "minimize weighted stress for a distance matrix");
  emb_cmd->add_option("--dist", emb.dist, "distance matrix CSV")->required();
  emb_cmd->add_option("--dim", emb.dim, "embedding dimension")->capture_default_str();
  emb_cmd->add_option("--weights", emb.weights,
                      "constant|sammon|exp:B|power:Z|heaviside:T|tanh:A,T")->capture_default_str();
  emb_cmd->add_option("--kernel", emb.kernel, "squared|raw")->capture_default_str();
  emb_cmd->add_option("--init", emb.init, "isomap:T|mds|random")->capture_default_str();
  emb_cmd->add_option("--method", emb.method, "bfgs|bh")->capture_default_str();
  emb_cmd->add_option("--seed", emb.seed, "seed for random init and basin hopping")->capture_default_str();
  emb_cmd->add_option("--out", emb.out, "output point cloud CSV")->required();
  emb_cmd->add_option("--plot", emb.plot, "optional SVG scatter of the result");
  emb_cmd->add_option("--eps", emb.eps, "weight threshold for the connectivity check")->capture_default_str();
  emb_cmd->add_flag("--strict", emb.strict, "exit 4 if the optimizer does not converge");
  add_optim_flags(emb_cmd, emb.optim);

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "continuity sweep over tanh weights");
  sw_cmd->add_option("--dist", sw.dist, "distance matrix CSV")->required();
  sw_cmd->add_option("--thetas", sw.thetas, "comma-separated thresholds")->capture_default_str();
  sw_cmd->add_option("--stiffness", sw.stiffness, "comma-separated stiffness values a")->capture_default_str();
  sw_cmd->add_option("--methods", sw.methods, "comma-separated methods (bfgs,bh)")->capture_default_str();
  sw_cmd->add_option("--kernel", sw.kernel, "squared|raw")->capture_default_str();
  sw_cmd->add_option("--dim", sw.dim, "embedding dimension")->capture_default_str();
  sw_cmd->add_option("--seed", sw.seed, "basin-hopping seed")->capture_default_str();
  sw_cmd->add_option("--out", sw.out, "report CSV")->required();
  sw_cmd->add_flag("--timing", sw.timing, "include wall_time in the CSV");
  add_jobs_flag(sw_cmd, sw.jobs);
  add_optim_flags(sw_cmd, sw.optim);

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Hausdorff and congruence distances between clouds");
  cmp_cmd->add_option("--cloud-a", cmp.a, "first point cloud CSV")->required();
  cmp_cmd->add_option("--cloud-b", cmp.b, "second point cloud CSV")->required();
  cmp_cmd->add_flag("--congruence", cmp.congruence, "also report the Procrustes congruence distance");

  RigidityArgs rig;
  auto* rig_cmd = app.add_subcommand("rigidity-demo", "multi-start solution sets of the 3-point family");
  rig_cmd->add_option("--etas", rig.etas, "comma-separated hypotenuse weights in [0,1]")->capture_default_str();
  rig_cmd->add_option("--starts", rig.starts, "random starts per eta")->capture_default_str();
  rig_cmd->add_option("--seed", rig.seed, "base seed")->capture_default_str();
  rig_cmd->add_option("--class-tol", rig.class_tol, "congruence tolerance for classes")->capture_default_str();
  add_jobs_flag(rig_cmd, rig.jobs);
  add_optim_flags(rig_cmd, rig.optim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen_ring(gen);
    if (*emb_cmd) return run_embed(emb);
    if (*sw_cmd) return run_sweep(sw);
    if (*cmp_cmd) return run_compare(cmp);
    if (*rig_cmd) return run_rigidity(rig);
  } catch (const gs::InitializerError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.unreachable() ? kExitDisconnected : kExitInput;
  } catch (const gs::DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisconnected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
