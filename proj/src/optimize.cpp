#include "geostress/optimize.hpp"

#include "geostress/error.hpp"
#include "geostress/graph.hpp"
#include "geostress/isomap.hpp"
#include "geostress/linalg.hpp"
#include "geostress/parallel.hpp"
#include "geostress/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geostress {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

struct Trial {
  double alpha = 0.0;
  double f = 0.0;
  double slope = 0.0;  // ∇f(x + αp)·p
  Eigen::VectorXd x;
  Eigen::VectorXd g;
};

enum class SearchStatus { Ok, Failed };

// Strong Wolfe line search (bracketing then zoom with safeguarded quadratic
// interpolation). Non-finite trial values are treated as overshooting.
class LineSearch {
public:
  LineSearch(const Objective& f, const LineSearchConfig& cfg, const Eigen::VectorXd& x,
             double f0, double slope0, const Eigen::VectorXd& p)
      : f_(f), cfg_(cfg), x_(x), f0_(f0), slope0_(slope0), p_(p) {}

  SearchStatus run(double alpha0, Trial& out) {
    Trial lo{0.0, f0_, slope0_, {}, {}};
    double alpha = alpha0;
    bool first = true;
    while (evals_ < cfg_.max_backtracks) {
      Trial t = evaluate(alpha);
      if (!std::isfinite(t.f) || !t.g.allFinite()) {
        saw_nonfinite_ = true;
        alpha = lo.alpha + 0.5 * (alpha - lo.alpha);
        continue;
      }
      remember(t);
      if (t.f > f0_ + cfg_.armijo_c1 * t.alpha * slope0_ || (!first && t.f >= lo.f))
        return zoom(lo, t, out);
      if (std::abs(t.slope) <= -cfg_.wolfe_c2 * slope0_) {
        out = std::move(t);
        return SearchStatus::Ok;
      }
      if (t.slope >= 0.0) return zoom(t, lo, out);
      lo = std::move(t);
      alpha = 2.0 * lo.alpha;
      first = false;
    }
    return fallback(out);
  }

  bool saw_nonfinite() const noexcept { return saw_nonfinite_; }
  bool any_finite() const noexcept { return best_.has_value(); }

private:
  Trial evaluate(double alpha) {
    ++evals_;
    Trial t;
    t.alpha = alpha;
    t.x = x_ + alpha * p_;
    t.f = f_(t.x, t.g);
    t.slope = std::isfinite(t.f) && t.g.allFinite() ? t.g.dot(p_) : 0.0;
    return t;
  }

  // Best sufficient-decrease point, used when the budget runs out.
  void remember(const Trial& t) {
    if (t.f <= f0_ + cfg_.armijo_c1 * t.alpha * slope0_ && t.f < f0_ &&
        (!best_ || t.f < best_->f))
      best_ = t;
  }

  SearchStatus fallback(Trial& out) {
    if (!best_) return SearchStatus::Failed;
    out = *best_;
    return SearchStatus::Ok;
  }

  SearchStatus zoom(Trial lo, Trial hi, Trial& out) {
    while (evals_ < cfg_.max_backtracks) {
      const double a = lo.alpha;
      const double b = hi.alpha;
      const double width = b - a;
      // Minimizer of the quadratic through (a, f_lo, slope_lo) and (b, f_hi).
      double alpha = a + 0.5 * width;
      const double denom = 2.0 * (hi.f - lo.f - lo.slope * width);
      if (std::isfinite(hi.f) && denom > 0.0) {
        const double cand = a - lo.slope * width * width / denom;
        const double lo_edge = std::min(a, b) + 0.1 * std::abs(width);
        const double hi_edge = std::max(a, b) - 0.1 * std::abs(width);
        if (cand >= lo_edge && cand <= hi_edge) alpha = cand;
      }
      if (std::abs(width) <= 1e-16 * std::max(1.0, std::abs(a))) break;
      Trial t = evaluate(alpha);
      if (!std::isfinite(t.f) || !t.g.allFinite()) {
        saw_nonfinite_ = true;
        hi = std::move(t);
        hi.f = std::numeric_limits<double>::infinity();
        continue;
      }
      remember(t);
      if (t.f > f0_ + cfg_.armijo_c1 * t.alpha * slope0_ || t.f >= lo.f) {
        hi = std::move(t);
      } else {
        if (std::abs(t.slope) <= -cfg_.wolfe_c2 * slope0_) {
          out = std::move(t);
          return SearchStatus::Ok;
        }
        if (t.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = std::move(t);
      }
    }
    return fallback(out);
  }

  const Objective& f_;
  const LineSearchConfig& cfg_;
  const Eigen::VectorXd& x_;
  double f0_;
  double slope0_;
  const Eigen::VectorXd& p_;
  int evals_ = 0;
  bool saw_nonfinite_ = false;
  std::optional<Trial> best_;
};

Eigen::MatrixXd scaled_identity(Eigen::Index m, double gnorm) {
  return Eigen::MatrixXd::Identity(m, m) / (gnorm > 0.0 ? gnorm : 1.0);
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) throw DomainError(std::string("optimizer setting ") + name + " must be > 0");
}

PointCloud random_cloud(std::size_t n, std::size_t k, double radius, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index c = 0; c < x.cols(); ++c) x(i, c) = rng.uniform(-radius, radius);
  return PointCloud(std::move(x));
}

OptimResult finish(const DistanceMatrix& d, const WeightMatrix& w, std::size_t k,
                   StressKernel kernel, MinimizeResult&& m, PointCloud&& initial,
                   double init_cost, bool connected) {
  OptimResult r;
  r.x = center(PointCloud::unflatten(m.x, d.size(), k));
  r.cost = stress(r.x, d, w, kernel);
  r.n_iters = m.n_iters;
  r.converged = m.converged;
  r.trace = std::move(m.trace);
  r.stop_reason = std::move(m.stop_reason);
  r.initial = std::move(initial);
  r.init_cost = init_cost;
  r.weight_graph_connected = connected;
  return r;
}

}  // namespace

void OptimConfig::validate() const {
  if (max_iters < 0) throw DomainError("optimizer setting max_iters must be >= 0");
  check_positive(grad_tol, "grad_tol");
  check_positive(f_tol, "f_tol");
  check_positive(line_search.armijo_c1, "armijo_c1");
  check_positive(line_search.wolfe_c2, "wolfe_c2");
  if (!(line_search.armijo_c1 < line_search.wolfe_c2 && line_search.wolfe_c2 < 1.0))
    throw DomainError("line search constants must satisfy 0 < c1 < c2 < 1");
  if (line_search.max_backtracks < 1) throw DomainError("max_backtracks must be >= 1");
  if (bh_hops < 0) throw DomainError("optimizer setting bh_hops must be >= 0");
  if (bh_step) check_positive(*bh_step, "bh_step");
  check_positive(bh_temperature, "bh_temperature");
}

MinimizeResult local_minimize(const Objective& f, const Eigen::VectorXd& x0, const OptimConfig& cfg) {
  cfg.validate();
  MinimizeResult res;
  res.x = x0;
  Eigen::VectorXd g;
  res.cost = f(res.x, g);
  if (!std::isfinite(res.cost) || !g.allFinite())
    throw NonFiniteError("objective is not finite at the starting point", to_std(x0));
  res.trace.push_back({0, res.cost});

  const Eigen::Index m = x0.size();
  if (m == 0 || g.lpNorm<Eigen::Infinity>() <= cfg.grad_tol) {
    res.converged = true;
    res.stop_reason = "gradient tolerance";
    return res;
  }

  Eigen::MatrixXd h = scaled_identity(m, g.norm());
  bool fresh = true;
  res.stop_reason = "iteration limit";
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    Eigen::VectorXd p = -h * g;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      h = scaled_identity(m, g.norm());
      fresh = true;
      p = -h * g;
      slope = g.dot(p);
    }

    Trial step;
    LineSearch search(f, cfg.line_search, res.x, res.cost, slope, p);
    SearchStatus status = search.run(1.0, step);
    if (status == SearchStatus::Failed && !fresh) {
      h = scaled_identity(m, g.norm());
      fresh = true;
      p = -h * g;
      slope = g.dot(p);
      LineSearch retry(f, cfg.line_search, res.x, res.cost, slope, p);
      status = retry.run(1.0, step);
      if (status == SearchStatus::Failed && retry.saw_nonfinite() && !retry.any_finite())
        throw NonFiniteError("objective became non-finite along every trial step", to_std(res.x));
    } else if (status == SearchStatus::Failed && search.saw_nonfinite() && !search.any_finite()) {
      throw NonFiniteError("objective became non-finite along every trial step", to_std(res.x));
    }
    if (status == SearchStatus::Failed) {
      res.stop_reason = "line search failed";
      break;
    }

    const Eigen::VectorXd s = step.x - res.x;
    const Eigen::VectorXd y = step.g - g;
    const double f_old = res.cost;
    res.x = std::move(step.x);
    res.cost = step.f;
    g = std::move(step.g);
    res.n_iters = iter;
    res.trace.push_back({iter, res.cost});

    if (g.lpNorm<Eigen::Infinity>() <= cfg.grad_tol) {
      res.converged = true;
      res.stop_reason = "gradient tolerance";
      break;
    }
    if (f_old - res.cost <= cfg.f_tol * std::max(std::abs(f_old), std::abs(res.cost))) {
      res.converged = true;
      res.stop_reason = "relative decrease tolerance";
      break;
    }

    const double ys = y.dot(s);
    if (ys > 1e-12 * s.norm() * y.norm() && ys > 0.0) {
      const double rho = 1.0 / ys;
      const Eigen::VectorXd hy = h * y;
      const double yhy = y.dot(hy);
      // In-place outer products; a summed expression would allocate m×m temporaries.
      h.noalias() -= (rho * hy) * s.transpose();
      h.noalias() -= s * (rho * hy).transpose();
      h.noalias() += ((rho * rho * yhy + rho) * s) * s.transpose();
      fresh = false;
    }
  }
  return res;
}

MinimizeResult basin_hopping(const Objective& f, const Eigen::VectorXd& x0, const OptimConfig& cfg) {
  cfg.validate();
  MinimizeResult current = local_minimize(f, x0, cfg);
  MinimizeResult best = current;
  int total_iters = current.n_iters;
  std::vector<TracePoint> trace{{0, best.cost}};

  const double step = cfg.bh_step.value_or(0.5);
  Rng rng(cfg.seed);
  for (int hop = 1; hop <= cfg.bh_hops; ++hop) {
    Eigen::VectorXd trial_x = current.x;
    for (Eigen::Index i = 0; i < trial_x.size(); ++i) trial_x(i) += rng.uniform(-step, step);
    std::optional<MinimizeResult> trial;
    try {
      trial = local_minimize(f, trial_x, cfg);
    } catch (const NonFiniteError&) {
      // A perturbation that leaves the objective's domain is a rejected hop.
    }
    if (trial) {
      total_iters += trial->n_iters;
      const double delta = trial->cost - current.cost;
      const bool accept = delta < 0.0 || rng.uniform() < std::exp(-delta / cfg.bh_temperature);
      if (trial->cost < best.cost) best = *trial;
      if (accept) current = std::move(*trial);
    }
    trace.push_back({hop, best.cost});
  }
  best.n_iters = total_iters;
  best.trace = std::move(trace);
  return best;
}

Objective stress_objective(const DistanceMatrix& d, const WeightMatrix& w, std::size_t k,
                           StressKernel kernel) {
  return [&d, &w, k, kernel](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
    return stress_and_gradient(x, k, d, w, kernel, grad);
  };
}

PointCloud initial_point(const DistanceMatrix& d, std::size_t k, const InitSpec& spec) {
  try {
    return std::visit(
        overloaded{
            [&](const init::Isomap& s) { return isomap_embed(d, s.theta, k).x; },
            [&](const init::ClassicalMds&) { return classical_mds(d, k).x; },
            [&](const init::Random& s) {
              return random_cloud(d.size(), k, 0.5 * d.max_distance(), s.seed);
            },
            [&](const init::Given& s) {
              if (s.x.n() != d.size() || s.x.k() != k)
                throw DimensionError("given initial cloud has shape " + std::to_string(s.x.n()) +
                                     "x" + std::to_string(s.x.k()));
              return s.x;
            },
        },
        spec);
  } catch (const DisconnectedGraphError& e) {
    throw InitializerError(e);
  } catch (const std::exception& e) {
    throw InitializerError(std::string("initializer failed: ") + e.what());
  }
}

OptimResult solve_nlm(const DistanceMatrix& d, const WeightMatrix& w, std::size_t k,
                      StressKernel kernel, const InitSpec& init, Method method,
                      const OptimConfig& cfg, double eps) {
  if (w.size() != d.size()) throw DimensionError("solve_nlm: D and W sizes differ");
  if (k == 0) throw DimensionError("solve_nlm: k must be >= 1");
  cfg.validate();
  const bool connected = is_connected(graph_from_weights(w, d, eps));

  PointCloud x0 = initial_point(d, k, init);
  const double init_cost = stress(x0, d, w, kernel);
  const Objective f = stress_objective(d, w, k, kernel);

  MinimizeResult m;
  if (method == Method::Bfgs) {
    m = local_minimize(f, x0.flatten(), cfg);
  } else {
    OptimConfig bh = cfg;
    if (!bh.bh_step)
      bh.bh_step = 0.5 * d.max_distance() / std::sqrt(static_cast<double>(std::max<std::size_t>(d.size(), 1)));
    if (!(*bh.bh_step > 0.0)) bh.bh_step = 0.5;
    m = basin_hopping(f, x0.flatten(), bh);
  }
  return finish(d, w, k, kernel, std::move(m), std::move(x0), init_cost, connected);
}

std::vector<OptimResult> multi_start_solutions(const DistanceMatrix& d, const WeightMatrix& w,
                                               std::size_t k, std::size_t n_starts,
                                               const OptimConfig& cfg, StressKernel kernel,
                                               std::size_t jobs) {
  if (n_starts < 1) throw DomainError("multi_start_solutions: n_starts must be >= 1");
  std::vector<OptimResult> runs(n_starts);
  parallel_for(n_starts, jobs, [&](std::size_t s) {
    runs[s] = solve_nlm(d, w, k, kernel, init::Random{derive_seed(cfg.seed, s)}, Method::Bfgs, cfg);
  });
  std::vector<std::size_t> order(n_starts);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return runs[a].cost < runs[b].cost; });
  std::vector<OptimResult> sorted;
  sorted.reserve(n_starts);
  for (std::size_t i : order) sorted.push_back(std::move(runs[i]));
  return sorted;
}

std::vector<OptimResult> solution_sample(const std::vector<OptimResult>& sorted, double tol) {
  std::vector<OptimResult> out;
  if (sorted.empty()) return out;
  const double best = sorted.front().cost;
  const double cutoff = best + tol * (1.0 + std::abs(best));
  for (const auto& r : sorted) {
    if (r.cost > cutoff) break;
    out.push_back(r);
  }
  return out;
}

}  // namespace geostress
