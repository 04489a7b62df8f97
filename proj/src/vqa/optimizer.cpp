#include "qsparse/vqa/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>

#include "qsparse/core/errors.hpp"

namespace qsparse::vqa {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool all_finite(const Evaluation& ev) {
  if (!std::isfinite(ev.total)) return false;
  return std::all_of(ev.gradient.begin(), ev.gradient.end(), [](double x) { return std::isfinite(x); });
}

class Stepper {
 public:
  virtual ~Stepper() = default;
  /// Moves theta given the evaluation at theta (with gradient) at step s.
  virtual void step(std::vector<double>& theta, const Evaluation& ev, int s) = 0;
};

class AdamW final : public Stepper {
 public:
  AdamW(const AdamWConfig& c, std::size_t dim) : c_(c), m_(dim, 0.0), v_(dim, 0.0) {}

  void step(std::vector<double>& theta, const Evaluation& ev, int s) override {
    const int t = s + 1;
    const double bc1 = 1.0 - std::pow(c_.beta1, t);
    const double bc2 = 1.0 - std::pow(c_.beta2, t);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double g = ev.gradient[i];
      m_[i] = c_.beta1 * m_[i] + (1.0 - c_.beta1) * g;
      v_[i] = c_.beta2 * v_[i] + (1.0 - c_.beta2) * g * g;
      const double mhat = m_[i] / bc1;
      const double vhat = v_[i] / bc2;
      theta[i] -= c_.learning_rate * c_.weight_decay * theta[i];
      theta[i] -= c_.learning_rate * mhat / (std::sqrt(vhat) + c_.epsilon);
    }
  }

 private:
  AdamWConfig c_;
  std::vector<double> m_, v_;
};

class ConjugateGradient final : public Stepper {
 public:
  ConjugateGradient(const CgConfig& c, const Objective& f, long& evals)
      : c_(c), f_(f), evals_(evals) {}

  void step(std::vector<double>& theta, const Evaluation& ev, int s) override {
    const std::vector<double>& g = ev.gradient;
    const double gg = dot(g, g);
    if (gg == 0.0) return;
    bool restart = !have_prev_ || (c_.restart_every > 0 && iter_ % c_.restart_every == 0);
    double beta = 0.0;
    if (!restart) {
      const double denom = dot(g_prev_, g_prev_);
      beta = denom > 0.0 ? std::max(0.0, (gg - dot(g, g_prev_)) / denom) : 0.0;
    }
    std::vector<double> d(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) d[i] = -g[i] + (restart ? 0.0 : beta * d_prev_[i]);
    double slope = dot(g, d);
    if (slope >= 0.0) {
      for (std::size_t i = 0; i < g.size(); ++i) d[i] = -g[i];
      slope = -gg;
      restart = true;
    }
    double alpha;
    if (restart || alpha_prev_ <= 0.0) {
      double dmax = 0.0;
      for (double x : d) dmax = std::max(dmax, std::abs(x));
      alpha = c_.initial_step / dmax;
    } else {
      alpha = alpha_prev_ * slope_prev_ / slope;
    }
    std::vector<double> trial(theta.size());
    auto value_at = [&](double a) {
      for (std::size_t i = 0; i < theta.size(); ++i) trial[i] = theta[i] + a * d[i];
      ++evals_;
      return f_(trial, s, false).total;
    };
    auto armijo = [&](double a, double fa) {
      return std::isfinite(fa) && fa <= ev.total + c_.armijo_c * a * slope;
    };
    bool accepted = false;
    double fa = value_at(alpha);
    if (armijo(alpha, fa)) {
      accepted = true;
      for (int k = 0; k < c_.max_expansions; ++k) {
        const double fb = value_at(2.0 * alpha);
        if (!armijo(2.0 * alpha, fb) || fb >= fa) break;
        alpha *= 2.0;
        fa = fb;
      }
    } else {
      for (int k = 1; k < c_.max_backtracks; ++k) {
        alpha *= c_.shrink;
        fa = value_at(alpha);
        if (armijo(alpha, fa)) {
          accepted = true;
          break;
        }
      }
    }
    if (accepted) {
      // One safeguarded quadratic-interpolation step toward the line minimum.
      const double curv = fa - ev.total - alpha * slope;
      if (curv > 0.0) {
        const double aq = -slope * alpha * alpha / (2.0 * curv);
        if (aq > 0.0 && aq <= 8.0 * alpha && std::abs(aq - alpha) > 1e-3 * alpha) {
          const double fq = value_at(aq);
          if (armijo(aq, fq) && fq < fa) {
            alpha = aq;
            fa = fq;
          }
        }
      }
    }
    for (std::size_t i = 0; i < theta.size(); ++i) trial[i] = theta[i] + alpha * d[i];
    ++iter_;
    if (!accepted) {
      have_prev_ = false;
      alpha_prev_ = 0.0;
      return;
    }
    theta = trial;
    g_prev_ = g;
    d_prev_ = std::move(d);
    alpha_prev_ = alpha;
    slope_prev_ = slope;
    have_prev_ = true;
  }

 private:
  CgConfig c_;
  const Objective& f_;
  long& evals_;
  std::vector<double> g_prev_, d_prev_;
  double alpha_prev_ = 0.0;
  double slope_prev_ = 0.0;
  bool have_prev_ = false;
  long iter_ = 0;
};

}  // namespace

void OptimizerConfig::validate() const {
  require(steps >= 1, "optimizer step budget must be positive");
  if (kind == Kind::AdamW) {
    require(adamw.learning_rate > 0.0 && adamw.epsilon > 0.0, "AdamW rates must be positive");
    require(adamw.beta1 >= 0.0 && adamw.beta1 < 1.0 && adamw.beta2 >= 0.0 && adamw.beta2 < 1.0,
            "AdamW betas must lie in [0, 1)");
    require(adamw.weight_decay >= 0.0, "AdamW weight decay must be >= 0");
  } else {
    require(cg.armijo_c > 0.0 && cg.armijo_c < 1.0, "Armijo constant must lie in (0, 1)");
    require(cg.shrink > 0.0 && cg.shrink < 1.0, "line-search shrink factor must lie in (0, 1)");
    require(cg.max_backtracks >= 1 && cg.initial_step > 0.0, "line-search parameters must be positive");
    require(cg.restart_every >= 0 && cg.max_expansions >= 0,
            "restart period and expansion count must be >= 0");
  }
  require(gradient_tolerance >= 0.0, "gradient tolerance must be >= 0");
}

const char* optimizer_name(OptimizerConfig::Kind kind) {
  return kind == OptimizerConfig::Kind::AdamW ? "adamw" : "cg";
}

OptimizerConfig::Kind parse_optimizer(const std::string& name) {
  if (name == "adamw") return OptimizerConfig::Kind::AdamW;
  if (name == "cg") return OptimizerConfig::Kind::Cg;
  throw InvalidArgument("unknown optimizer '" + name + "' (expected adamw or cg)");
}

RunRecord optimize(const Objective& objective, std::vector<double> theta0,
                   const OptimizerConfig& config, const Monitor& monitor) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  RunRecord rec;
  std::vector<double> theta = std::move(theta0);
  std::unique_ptr<Stepper> stepper;
  if (config.kind == OptimizerConfig::Kind::AdamW)
    stepper = std::make_unique<AdamW>(config.adamw, theta.size());
  else
    stepper = std::make_unique<ConjugateGradient>(config.cg, objective, rec.evaluations);

  for (int s = 0; s <= config.steps; ++s) {
    const Evaluation ev = objective(theta, s, true);
    ++rec.evaluations;
    const double gnorm = std::sqrt(dot(ev.gradient, ev.gradient));
    rec.steps.push_back({s, ev.cost, ev.c_tee, ev.gamma, ev.total, gnorm,
                         monitor ? monitor(theta) : std::numeric_limits<double>::quiet_NaN()});
    if (!all_finite(ev)) {
      rec.aborted = true;
      rec.diagnostic = "non-finite cost or gradient at step " + std::to_string(s);
      break;
    }
    if (s == config.steps) break;
    if (config.gradient_tolerance > 0.0 && gnorm < config.gradient_tolerance) {
      rec.converged_early = true;
      rec.diagnostic = "gradient norm below tolerance at step " + std::to_string(s);
      break;
    }
    stepper->step(theta, ev, s);
  }
  rec.final_theta = std::move(theta);
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

RunRecord optimize(const VariationalProblem& problem, std::vector<double> theta0,
                   const OptimizerConfig& config, std::uint64_t seed, const Monitor& monitor) {
  require(theta0.size() == problem.num_parameters(), "initial parameter count mismatch");
  const Objective f = [&problem](std::span<const double> th, int s, bool grad) {
    return problem.evaluate(th, s, grad);
  };
  RunRecord rec = optimize(f, std::move(theta0), config, monitor);
  rec.seed = seed;
  return rec;
}

}  // namespace qsparse::vqa
