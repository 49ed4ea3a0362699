#include "groupent/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "groupent/errors.hpp"
#include "groupent/lambert.hpp"
#include "groupent/numeric.hpp"
#include "groupent/rng.hpp"

namespace groupent {

namespace {

constexpr double kProbFloor = 1e-300;

double entropy_of(const EntropySpec& spec, const std::vector<double>& p) {
  return evaluate(spec, Distribution(std::vector<double>(p),
                                     Renormalize::Yes));
}

// Analytic gradient of S at an interior point, plus a positive diagonal
// curvature proxy used to scale steps (exact -d2S/dp2 for trace forms, the
// dominant diagonal term for the non-trace forms).
void gradient_and_curvature(const EntropySpec& spec,
                            const std::vector<double>& p,
                            std::vector<double>& grad,
                            std::vector<double>& curv) {
  const std::size_t w = p.size();
  grad.resize(w);
  curv.resize(w);

  auto renyi_parts = [&](double alpha, double& x, double& prefac) {
    NeumaierSum s;
    for (double pi : p) s.add(std::pow(pi, alpha));
    x = std::log(s.value());
    prefac = alpha / (1.0 - alpha) * std::exp(-x);
  };

  switch (spec.kind) {
    case EntropyKind::BGS: {
      for (std::size_t i = 0; i < w; ++i) {
        grad[i] = -std::log(p[i]) - 1.0;
        curv[i] = 1.0 / p[i];
      }
      return;
    }
    case EntropyKind::TraceII: {
      const double c = spec.lambda / std::log(spec.k);
      for (std::size_t i = 0; i < w; ++i) {
        grad[i] = c * (-std::log(p[i]) - 1.0);
        curv[i] = c / p[i];
      }
      return;
    }
    case EntropyKind::Tsallis: {
      const double q = spec.q;
      const double c = spec.k_scale * q / (q - 1.0);
      for (std::size_t i = 0; i < w; ++i) {
        grad[i] = -c * std::pow(p[i], q - 1.0);
        curv[i] = std::abs(spec.k_scale * q) * std::pow(p[i], q - 2.0);
      }
      return;
    }
    case EntropyKind::TraceI: {
      const double ia = 1.0 / spec.a;
      for (std::size_t i = 0; i < w; ++i) {
        grad[i] = spec.lambda * ((1.0 - ia) * std::pow(p[i], -ia) - 1.0);
        curv[i] = std::abs(spec.lambda * (1.0 - ia) * ia) *
                  std::pow(p[i], -ia - 1.0);
      }
      return;
    }
    case EntropyKind::TraceIII: {
      const double g = spec.gamma;
      for (std::size_t i = 0; i < w; ++i) {
        const double v = -std::log(p[i]) / g;
        const double w0 = lambert_w0(v);
        grad[i] = spec.lambda * (std::expm1(w0) - 1.0 / (g * (1.0 + w0)));
        curv[i] = spec.lambda *
                  (1.0 / (g * p[i] * (1.0 + w0)) +
                   1.0 / (g * g * p[i] * std::exp(w0) *
                          (1.0 + w0) * (1.0 + w0) * (1.0 + w0)));
      }
      return;
    }
    case EntropyKind::Renyi:
    case EntropyKind::NonTraceI:
    case EntropyKind::NonTraceII:
    case EntropyKind::NonTraceIII:
    case EntropyKind::ZEntropy: {
      double x, prefac;
      renyi_parts(spec.alpha, x, prefac);
      const double r = x / (1.0 - spec.alpha);
      // Chain factor dS/dR per family (positive in the valid ranges).
      double ds_dr = 1.0;
      switch (spec.kind) {
        case EntropyKind::Renyi:
          ds_dr = 1.0;
          break;
        case EntropyKind::NonTraceI:
          ds_dr = spec.lambda / spec.a * std::exp(r / spec.a);
          break;
        case EntropyKind::NonTraceII:
          ds_dr = spec.lambda / std::log(spec.k);
          break;
        case EntropyKind::NonTraceIII:
          ds_dr = spec.lambda /
                  (spec.gamma * (1.0 + lambert_w0(r / spec.gamma)));
          break;
        case EntropyKind::ZEntropy:
          ds_dr = 1.0 / (spec.gamma * (1.0 + lambert_w0(r / spec.gamma)));
          break;
        default:
          break;
      }
      const double alpha = spec.alpha;
      for (std::size_t i = 0; i < w; ++i) {
        grad[i] = ds_dr * prefac * std::pow(p[i], alpha - 1.0);
        curv[i] = std::abs(ds_dr) * alpha * std::exp(-x) *
                  std::pow(p[i], alpha - 2.0);
      }
      return;
    }
  }
  throw std::invalid_argument("gradient: unknown entropy kind");
}

// Least-squares multipliers of g against [1, E]; the residual is the
// projection of g onto the constraint tangent space.
void project_residual(const std::vector<double>& grad,
                      const std::vector<double>& levels, double& l1,
                      double& l2, std::vector<double>& resid) {
  const std::size_t w = grad.size();
  double se = 0.0, see = 0.0, sg = 0.0, seg = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    se += levels[i];
    see += levels[i] * levels[i];
    sg += grad[i];
    seg += levels[i] * grad[i];
  }
  const double n = static_cast<double>(w);
  const double det = n * see - se * se;
  if (std::abs(det) < 1e-300) {  // all levels equal
    l1 = sg / n;
    l2 = 0.0;
  } else {
    l1 = (see * sg - se * seg) / det;
    l2 = (n * seg - se * sg) / det;
  }
  resid.resize(w);
  for (std::size_t i = 0; i < w; ++i) {
    resid[i] = grad[i] - l1 - l2 * levels[i];
  }
}

// Curvature-scaled tangent direction: argmin_s ||s - D^-1 g||_D subject to
// sum s = 0 and sum E s = 0.
void scaled_direction(const std::vector<double>& grad,
                      const std::vector<double>& curv,
                      const std::vector<double>& levels,
                      std::vector<double>& dir) {
  const std::size_t w = grad.size();
  double m11 = 0.0, m12 = 0.0, m22 = 0.0, r1 = 0.0, r2 = 0.0;
  std::vector<double> inv_d(w);
  for (std::size_t i = 0; i < w; ++i) {
    inv_d[i] = 1.0 / std::max(curv[i], 1e-12);
    m11 += inv_d[i];
    m12 += inv_d[i] * levels[i];
    m22 += inv_d[i] * levels[i] * levels[i];
    r1 += inv_d[i] * grad[i];
    r2 += inv_d[i] * grad[i] * levels[i];
  }
  const double det = m11 * m22 - m12 * m12;
  double mu1 = 0.0, mu2 = 0.0;
  if (std::abs(det) > 1e-300) {
    mu1 = (m22 * r1 - m12 * r2) / det;
    mu2 = (m11 * r2 - m12 * r1) / det;
  } else {
    mu1 = r1 / m11;
  }
  dir.resize(w);
  for (std::size_t i = 0; i < w; ++i) {
    dir[i] = inv_d[i] * (grad[i] - mu1 - mu2 * levels[i]);
  }
}

// Restore sum p = 1 and sum E p = target exactly (2x2 affine correction);
// floating drift otherwise accumulates over many ascent steps.
void reproject_constraints(std::vector<double>& p,
                           const std::vector<double>& levels, double target) {
  const std::size_t w = p.size();
  double se = 0.0, see = 0.0, sp = 0.0, sep = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    se += levels[i];
    see += levels[i] * levels[i];
    sp += p[i];
    sep += levels[i] * p[i];
  }
  const double n = static_cast<double>(w);
  const double det = n * see - se * se;
  const double c1 = 1.0 - sp;
  const double c2 = target - sep;
  double a = 0.0, b = 0.0;
  if (std::abs(det) > 1e-300) {
    a = (see * c1 - se * c2) / det;
    b = (n * c2 - se * c1) / det;
  } else {
    a = c1 / n;
  }
  for (std::size_t i = 0; i < w; ++i) {
    p[i] = std::max(p[i] + a + b * levels[i], kProbFloor);
  }
}

// Feasible interior start: uniform mixed toward the extreme level that pulls
// the mean to the target. Deliberately not of exponential form, so solver
// output can be checked against analytic weights computed independently.
std::vector<double> initial_point(const std::vector<double>& levels,
                                  double target) {
  const std::size_t w = levels.size();
  std::vector<double> p(w, 1.0 / static_cast<double>(w));
  double mean = 0.0;
  for (std::size_t i = 0; i < w; ++i) mean += levels[i] * p[i];
  if (mean == target) return p;
  const double extreme = (target < mean)
                             ? *std::min_element(levels.begin(), levels.end())
                             : *std::max_element(levels.begin(), levels.end());
  std::size_t count = 0;
  for (double e : levels) count += (e == extreme);
  const double t = (mean - target) / (mean - extreme);
  for (std::size_t i = 0; i < w; ++i) {
    p[i] = (1.0 - t) * p[i] + (levels[i] == extreme ? t / count : 0.0);
  }
  return p;
}

}  // namespace

EnergyConstraint::EnergyConstraint(std::vector<double> lv, double target)
    : levels(std::move(lv)), mean_target(target) {
  if (levels.empty()) {
    throw std::invalid_argument("EnergyConstraint: empty level list");
  }
  for (double e : levels) {
    if (!std::isfinite(e)) {
      throw std::invalid_argument("EnergyConstraint: levels must be finite");
    }
  }
  if (!std::isfinite(mean_target)) {
    throw std::invalid_argument("EnergyConstraint: target must be finite");
  }
  const auto [lo_it, hi_it] = std::minmax_element(levels.begin(), levels.end());
  const double lo = *lo_it, hi = *hi_it;
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  if (lo == hi) {
    if (std::abs(mean_target - lo) > 1e-12 * scale) {
      throw InfeasibleConstraintError(
          "EnergyConstraint: all levels equal; target must match them");
    }
    return;
  }
  if (!(mean_target > lo + 1e-14 * scale) ||
      !(mean_target < hi - 1e-14 * scale)) {
    throw InfeasibleConstraintError(
        "EnergyConstraint: target mean must lie strictly between the extreme "
        "levels");
  }
}

double qexp(double x, double q) {
  if (q == 1.0) return std::exp(x);
  const double base = 1.0 + (1.0 - q) * x;
  if (base <= 0.0) return 0.0;
  return std::pow(base, 1.0 / (1.0 - q));
}

MaxEntResult maximize(const EntropySpec& spec,
                      const EnergyConstraint& constraint,
                      const MaxEntOptions& options) {
  spec.validate();
  const std::vector<double>& levels = constraint.levels;
  const std::size_t w = levels.size();
  if (w < 2) {
    throw std::invalid_argument("maximize: need at least two energy levels");
  }

  const auto [lo_it, hi_it] = std::minmax_element(levels.begin(), levels.end());
  const bool degenerate = (*lo_it == *hi_it);

  std::vector<double> p = degenerate
                              ? std::vector<double>(w, 1.0 / double(w))
                              : initial_point(levels, constraint.mean_target);

  std::vector<double> grad, curv, resid, dir, trial;
  double l1 = 0.0, l2 = 0.0;
  double snorm = std::numeric_limits<double>::infinity();
  std::size_t iter = 0;
  SplitMix64 fallback_rng(0x6d61786e74ULL);

  double j_cur = entropy_of(spec, p);

  for (; iter < options.max_iterations; ++iter) {
    gradient_and_curvature(spec, p, grad, curv);
    project_residual(grad, levels, l1, l2, resid);
    snorm = 0.0;
    for (double r : resid) snorm = std::max(snorm, std::abs(r));
    if (snorm <= options.tolerance) break;
    if (degenerate) break;  // uniform is stationary; nothing to move

    scaled_direction(grad, curv, levels, dir);

    // Largest feasible step before any coordinate hits zero.
    double eta_max = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w; ++i) {
      if (dir[i] < 0.0) eta_max = std::min(eta_max, -p[i] / dir[i]);
    }
    double eta = std::min(1.0, 0.95 * eta_max);
    bool improved = false;
    trial.resize(w);
    for (int bt = 0; bt < 60 && eta > 0.0; ++bt) {
      for (std::size_t i = 0; i < w; ++i) {
        trial[i] = std::max(p[i] + eta * dir[i], kProbFloor);
      }
      const double j_new = entropy_of(spec, trial);
      if (j_new > j_cur) {
        p.swap(trial);
        j_cur = j_new;
        improved = true;
        break;
      }
      eta *= 0.5;
    }

    if (!improved) {
      // Derivative-free fallback: exchange mass along random coordinate
      // triples; directions of the form (E_j - E_k, E_k - E_i, E_i - E_j)
      // preserve both constraints.
      bool moved = false;
      for (std::size_t attempt = 0; attempt < 40 * w && !moved; ++attempt) {
        const std::size_t i = fallback_rng.next_u64() % w;
        const std::size_t j = fallback_rng.next_u64() % w;
        const std::size_t k = fallback_rng.next_u64() % w;
        if (i == j || j == k || i == k) continue;
        double di = levels[j] - levels[k];
        double dj = levels[k] - levels[i];
        double dk = levels[i] - levels[j];
        const double norm = std::max({std::abs(di), std::abs(dj),
                                      std::abs(dk), 1e-300});
        di /= norm; dj /= norm; dk /= norm;
        for (double sgn : {1.0, -1.0}) {
          double cap = std::numeric_limits<double>::infinity();
          if (sgn * di < 0) cap = std::min(cap, -p[i] / (sgn * di));
          if (sgn * dj < 0) cap = std::min(cap, -p[j] / (sgn * dj));
          if (sgn * dk < 0) cap = std::min(cap, -p[k] / (sgn * dk));
          double step = 0.5 * std::min(cap, 1.0);
          for (int halve = 0; halve < 30 && step > 1e-18; ++halve) {
            trial = p;
            trial[i] = std::max(p[i] + sgn * step * di, kProbFloor);
            trial[j] = std::max(p[j] + sgn * step * dj, kProbFloor);
            trial[k] = std::max(p[k] + sgn * step * dk, kProbFloor);
            const double j_new = entropy_of(spec, trial);
            if (j_new > j_cur) {
              p.swap(trial);
              j_cur = j_new;
              moved = true;
              break;
            }
            step *= 0.5;
          }
          if (moved) break;
        }
      }
      if (!moved) break;  // stalled; report with the last iterate
    }

    if ((iter & 63) == 0 && !degenerate) {
      reproject_constraints(p, levels, constraint.mean_target);
    }
  }

  if (!degenerate) reproject_constraints(p, levels, constraint.mean_target);
  gradient_and_curvature(spec, p, grad, curv);
  project_residual(grad, levels, l1, l2, resid);
  snorm = 0.0;
  for (double r : resid) snorm = std::max(snorm, std::abs(r));

  bool boundary = false;
  for (double pi : p) boundary |= (pi <= 1e-10);

  Distribution p_star(std::vector<double>(p), Renormalize::Yes);
  return MaxEntResult{std::move(p_star),
                      l1,
                      l2,
                      snorm,
                      evaluate(spec, Distribution(std::move(p),
                                                  Renormalize::Yes)),
                      snorm <= options.tolerance,
                      boundary,
                      iter};
}

QExpFit verify_qexponential_form(const MaxEntResult& result,
                                 const EnergyConstraint& constraint) {
  QExpFit fit{false, 1.0, 0.0, 1.0,
              std::numeric_limits<double>::infinity()};
  if (result.boundary) return fit;

  const std::size_t w = constraint.levels.size();
  std::vector<std::pair<double, double>> pts(w);
  for (std::size_t i = 0; i < w; ++i) {
    pts[i] = {constraint.levels[i], result.p_star[i]};
  }
  std::sort(pts.begin(), pts.end());

  // Merge duplicate levels (mean probability) for the regression.
  std::vector<double> es, ps;
  const double scale =
      std::max(std::abs(pts.front().first), std::abs(pts.back().first)) + 1.0;
  for (std::size_t i = 0; i < w;) {
    std::size_t j = i;
    double acc = 0.0;
    while (j < w && pts[j].first - pts[i].first <= 1e-12 * scale) {
      acc += pts[j].second;
      ++j;
    }
    es.push_back(pts[i].first);
    ps.push_back(acc / static_cast<double>(j - i));
    i = j;
  }
  if (es.size() < 2) return fit;  // all levels equal: nothing to fit

  auto linear_fit = [](const std::vector<double>& xs,
                       const std::vector<double>& ys, double& a, double& b) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    b = (n * sxy - sx * sy) / det;
    a = (sy - b * sx) / n;
  };

  // For fixed q the model is linear: p^(1-q) = A + B*E (log-linear at q=1).
  auto residual_at = [&](double q, double& a_out, double& b_out) {
    double a, b;
    if (std::abs(q - 1.0) < 1e-9) {
      std::vector<double> logs(ps.size());
      for (std::size_t i = 0; i < ps.size(); ++i) logs[i] = std::log(ps[i]);
      linear_fit(es, logs, a, b);
      a_out = a;
      b_out = b;
      double worst = 0.0;
      for (const auto& [e, p] : pts) {
        worst = std::max(worst, std::abs(std::exp(a + b * e) - p) / p);
      }
      return worst;
    }
    std::vector<double> us(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      us[i] = std::pow(ps[i], 1.0 - q);
    }
    linear_fit(es, us, a, b);
    a_out = a;
    b_out = b;
    double worst = 0.0;
    for (const auto& [e, p] : pts) {
      const double base = a + b * e;
      if (base <= 0.0) return std::numeric_limits<double>::infinity();
      const double ph = std::pow(base, 1.0 / (1.0 - q));
      worst = std::max(worst, std::abs(ph - p) / p);
    }
    return worst;
  };

  double best_q = 1.0, best_res = std::numeric_limits<double>::infinity();
  double a_dummy, b_dummy;
  for (double q = -4.0; q <= 6.0 + 1e-12; q += 0.25) {
    const double r = residual_at(q, a_dummy, b_dummy);
    if (r < best_res) {
      best_res = r;
      best_q = q;
    }
  }
  {
    const double r = residual_at(1.0, a_dummy, b_dummy);
    if (r < best_res) {
      best_res = r;
      best_q = 1.0;
    }
  }

  // Golden-section refinement around the best grid point.
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best_q - 0.5, hi = best_q + 0.5;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = residual_at(x1, a_dummy, b_dummy);
  double f2 = residual_at(x2, a_dummy, b_dummy);
  for (int it = 0; it < 80; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = residual_at(x1, a_dummy, b_dummy);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = residual_at(x2, a_dummy, b_dummy);
    }
  }
  const double q_ref = 0.5 * (lo + hi);
  double a_fin, b_fin;
  double res_ref = residual_at(q_ref, a_fin, b_fin);
  if (best_res < res_ref) {
    res_ref = residual_at(best_q, a_fin, b_fin);
  } else {
    best_q = q_ref;
    best_res = res_ref;
  }

  fit.applicable = true;
  fit.q = best_q;
  fit.residual = best_res;
  if (std::abs(best_q - 1.0) < 1e-9) {
    fit.c = std::exp(a_fin);
    fit.beta = -b_fin;
  } else {
    fit.c = std::pow(a_fin, 1.0 / (1.0 - best_q));
    fit.beta = -b_fin / (a_fin * (1.0 - best_q));
  }
  return fit;
}

}  // namespace groupent
