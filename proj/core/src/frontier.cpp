#include "crbc/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "crbc/parallel.hpp"

namespace crbc::frontier {

using gaussian::EquivocationPair;
using gaussian::GaussianCrbcParams;
using gaussian::SchemeParams;
using gaussian::TwoSidedGaussianParams;

namespace {

constexpr double kDominanceEps = 1e-9;

auto params_key(const SchemeParams& s) {
  return std::tie(s.alpha, s.beta, s.beta1, s.beta2, s.gamma, s.nc, s.nc1,
                  s.nc2);
}

bool params_less(const SchemeParams& a, const SchemeParams& b) {
  return params_key(a) < params_key(b);
}

double grid_value(std::size_t i, std::size_t n, double lo, double hi) {
  if (n == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::optional<SweepPoint> eval_one_sided(const SweepConfig& cfg,
                                         const GaussianCrbcParams& p,
                                         double alpha, double beta,
                                         double gamma) {
  SchemeParams sp;
  sp.alpha = alpha;
  sp.beta = beta;
  sp.gamma = gamma;
  double nc;
  if (cfg.nc_override) {
    nc = *cfg.nc_override;
  } else {
    switch (cfg.scheme) {
      case Scheme::prop1: {
        const auto b = gaussian::prop1_min_nc(alpha, p);
        if (!b.feasible) return std::nullopt;
        nc = b.nc_min;
        break;
      }
      case Scheme::prop2: {
        const auto b = gaussian::prop2_min_nc(alpha, gamma, p);
        if (!b.feasible) return std::nullopt;
        nc = b.nc_min;
        break;
      }
      case Scheme::prop3: {
        const auto b = gaussian::prop3_min_nc(alpha, beta, p);
        if (!b.feasible) return std::nullopt;
        nc = b.nc_min;
        break;
      }
      case Scheme::prop4: {
        const auto b = gaussian::prop4_min_nc(alpha, beta, gamma, p);
        if (!b.feasible) return std::nullopt;
        nc = b.nc_min;
        break;
      }
      default:
        return std::nullopt;
    }
  }
  sp.nc = nc;
  EquivocationPair rates;
  switch (cfg.scheme) {
    case Scheme::prop1:
      rates = gaussian::prop1_rates(alpha, nc, p);
      break;
    case Scheme::prop2:
      rates = gaussian::prop2_rates(alpha, gamma, nc, p);
      break;
    case Scheme::prop3:
      rates = gaussian::prop3_rates(alpha, beta, nc, p);
      break;
    case Scheme::prop4:
      rates = gaussian::prop4_rates(alpha, beta, gamma, nc, p);
      break;
    default:
      return std::nullopt;
  }
  if (!rates.feasible) return std::nullopt;
  return SweepPoint{sp, rates};
}

std::optional<SweepPoint> eval_two_sided(const SweepConfig& cfg,
                                         const TwoSidedGaussianParams& p,
                                         double alpha, double beta1,
                                         double beta2) {
  SchemeParams sp;
  sp.alpha = alpha;
  sp.beta1 = beta1;
  sp.beta2 = beta2;
  double nc1, nc2;
  if (cfg.nc_override && cfg.nc2_override) {
    nc1 = *cfg.nc_override;
    nc2 = *cfg.nc2_override;
  } else {
    const auto [b1, b2] = gaussian::prop5_min_ncs(alpha, beta1, beta2, p);
    if (!b1.feasible || !b2.feasible) return std::nullopt;
    nc1 = cfg.nc_override ? *cfg.nc_override : b1.nc_min;
    nc2 = cfg.nc2_override ? *cfg.nc2_override : b2.nc_min;
  }
  sp.nc1 = nc1;
  sp.nc2 = nc2;
  const auto rates = gaussian::prop5_rates(alpha, beta1, beta2, nc1, nc2, p);
  if (!rates.feasible) return std::nullopt;
  return SweepPoint{sp, rates};
}

std::vector<SweepPoint> collect(std::vector<std::optional<SweepPoint>> grid) {
  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (auto& g : grid)
    if (g) out.push_back(std::move(*g));
  return out;
}

}  // namespace

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::prop1: return "prop1";
    case Scheme::prop2: return "prop2";
    case Scheme::prop3: return "prop3";
    case Scheme::prop4: return "prop4";
    case Scheme::prop5: return "prop5";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::prop1, Scheme::prop2, Scheme::prop3, Scheme::prop4,
                   Scheme::prop5})
    if (name == scheme_name(s)) return s;
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (alpha_points < 2 || beta_points < 2 || gamma_points < 2)
    throw std::invalid_argument("grid resolutions must be >= 2");
  if (!(gamma_min < gamma_max) || !std::isfinite(gamma_min) ||
      !std::isfinite(gamma_max))
    throw std::invalid_argument("gamma range must be finite and nonempty");
}

std::vector<SweepPoint> sweep(const SweepConfig& cfg,
                              const GaussianCrbcParams& p) {
  cfg.validate();
  p.validate();
  if (cfg.scheme == Scheme::prop5)
    throw std::invalid_argument(
        "the two-sided scheme needs TwoSidedGaussianParams");

  const std::size_t na = cfg.alpha_points;
  const std::size_t nb =
      (cfg.scheme == Scheme::prop3 || cfg.scheme == Scheme::prop4)
          ? cfg.beta_points
          : 1;
  const std::size_t ng =
      (cfg.scheme == Scheme::prop2 || cfg.scheme == Scheme::prop4)
          ? cfg.gamma_points
          : 1;
  const std::size_t total = na * nb * ng;

  std::vector<std::optional<SweepPoint>> grid(total);
  parallel_for(total, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t f = lo; f < hi; ++f) {
      const std::size_t ia = f / (nb * ng);
      const std::size_t ib = (f / ng) % nb;
      const std::size_t ig = f % ng;
      const double alpha = grid_value(ia, na, 0.0, 1.0);
      const double beta = nb == 1 ? 1.0 : grid_value(ib, nb, 0.0, 1.0);
      const double gamma =
          ng == 1 ? 0.0 : grid_value(ig, ng, cfg.gamma_min, cfg.gamma_max);
      grid[f] = eval_one_sided(cfg, p, alpha, beta, gamma);
    }
  });
  return collect(std::move(grid));
}

std::vector<SweepPoint> sweep(const SweepConfig& cfg,
                              const TwoSidedGaussianParams& p) {
  cfg.validate();
  p.validate();
  if (cfg.scheme != Scheme::prop5)
    throw std::invalid_argument(
        "TwoSidedGaussianParams only drive the two-sided scheme");

  const std::size_t na = cfg.alpha_points;
  const std::size_t nb = cfg.beta_points;
  const std::size_t total = na * nb * nb;
  std::vector<std::optional<SweepPoint>> grid(total);
  parallel_for(total, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t f = lo; f < hi; ++f) {
      const std::size_t ia = f / (nb * nb);
      const std::size_t i1 = (f / nb) % nb;
      const std::size_t i2 = f % nb;
      grid[f] = eval_two_sided(cfg, p, grid_value(ia, na, 0.0, 1.0),
                               grid_value(i1, nb, 0.0, 1.0),
                               grid_value(i2, nb, 0.0, 1.0));
    }
  });
  return collect(std::move(grid));
}

std::vector<FrontierPoint> pareto_filter(std::vector<FrontierPoint> points) {
  if (points.empty()) return points;

  // Collapse exact (re1, re2) duplicates onto the smallest parameters.
  std::sort(points.begin(), points.end(),
            [](const FrontierPoint& x, const FrontierPoint& y) {
              if (x.re1 != y.re1) return x.re1 < y.re1;
              if (x.re2 != y.re2) return x.re2 < y.re2;
              return params_less(x.params, y.params);
            });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const FrontierPoint& x, const FrontierPoint& y) {
                             return x.re1 == y.re1 && x.re2 == y.re2;
                           }),
               points.end());

  // A point is dominated iff
  //   max{re2 : re1' >= re1}  >  re2 + eps, or
  //   max{re2 : re1' >  re1 + eps} >= re2.
  // Both are prefix-maximum queries over the re1-descending order.
  std::vector<const FrontierPoint*> by_re1(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) by_re1[i] = &points[i];
  std::sort(by_re1.begin(), by_re1.end(),
            [](const FrontierPoint* x, const FrontierPoint* y) {
              return x->re1 > y->re1;
            });
  std::vector<double> prefix_max(points.size());
  double running = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < by_re1.size(); ++i) {
    running = std::max(running, by_re1[i]->re2);
    prefix_max[i] = running;
  }
  auto max_re2_where_re1_ge = [&](double threshold, bool strict) {
    // Number of entries with re1 > threshold (or >= when !strict).
    std::size_t lo = 0, hi = by_re1.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      const double r = by_re1[mid]->re1;
      const bool in = strict ? r > threshold : r >= threshold;
      if (in)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo == 0 ? -std::numeric_limits<double>::infinity()
                   : prefix_max[lo - 1];
  };

  std::vector<FrontierPoint> kept;
  kept.reserve(points.size());
  for (const FrontierPoint& pt : points) {
    const double m_ge = max_re2_where_re1_ge(pt.re1, /*strict=*/false);
    const double m_gt = max_re2_where_re1_ge(pt.re1 + kDominanceEps, true);
    const bool dominated = m_ge > pt.re2 + kDominanceEps || m_gt >= pt.re2;
    if (!dominated) kept.push_back(pt);
  }

  std::sort(kept.begin(), kept.end(),
            [](const FrontierPoint& x, const FrontierPoint& y) {
              if (x.re1 != y.re1) return x.re1 < y.re1;
              if (x.re2 != y.re2) return x.re2 > y.re2;
              return params_less(x.params, y.params);
            });
  return kept;
}

namespace {

enum class Param { alpha, beta, beta1, beta2, gamma };

struct Axis {
  Param which;
  double step;
  double lo;
  double hi;
};

std::vector<Axis> refinement_axes(const SweepConfig& cfg) {
  const double astep = 1.0 / static_cast<double>(cfg.alpha_points - 1);
  const double bstep = 1.0 / static_cast<double>(cfg.beta_points - 1);
  const double gstep = (cfg.gamma_max - cfg.gamma_min) /
                       static_cast<double>(cfg.gamma_points - 1);
  switch (cfg.scheme) {
    case Scheme::prop1:
      return {{Param::alpha, astep, 0.0, 1.0}};
    case Scheme::prop2:
      return {{Param::alpha, astep, 0.0, 1.0},
              {Param::gamma, gstep, cfg.gamma_min, cfg.gamma_max}};
    case Scheme::prop3:
      return {{Param::alpha, astep, 0.0, 1.0},
              {Param::beta, bstep, 0.0, 1.0}};
    case Scheme::prop4:
      return {{Param::alpha, astep, 0.0, 1.0},
              {Param::beta, bstep, 0.0, 1.0},
              {Param::gamma, gstep, cfg.gamma_min, cfg.gamma_max}};
    case Scheme::prop5:
      return {{Param::alpha, astep, 0.0, 1.0},
              {Param::beta1, bstep, 0.0, 1.0},
              {Param::beta2, bstep, 0.0, 1.0}};
  }
  return {};
}

double& param_ref(SchemeParams& s, Param p) {
  switch (p) {
    case Param::alpha: return s.alpha;
    case Param::beta: return s.beta;
    case Param::beta1: return s.beta1;
    case Param::beta2: return s.beta2;
    case Param::gamma: return s.gamma;
  }
  return s.alpha;
}

// Coordinate ascent in the Pareto order: a step is kept only when neither
// coordinate decreases and at least one strictly improves.
template <typename EvalFn>
FrontierPoint refine_point(const SweepConfig& cfg, FrontierPoint pt,
                           EvalFn&& eval) {
  auto axes = refinement_axes(cfg);
  for (unsigned pass = 0; pass < cfg.refine_passes; ++pass) {
    for (auto& ax : axes) {
      for (double sign : {+1.0, -1.0}) {
        SchemeParams cand = pt.params;
        double& v = param_ref(cand, ax.which);
        v = std::clamp(v + sign * ax.step, ax.lo, ax.hi);
        if (v == param_ref(pt.params, ax.which)) continue;
        const auto res = eval(cand);
        if (!res) continue;
        const auto& [sp, rates] = *res;
        if (rates.re1 >= pt.re1 && rates.re2 >= pt.re2 &&
            (rates.re1 > pt.re1 || rates.re2 > pt.re2)) {
          pt.params = sp;
          pt.re1 = rates.re1;
          pt.re2 = rates.re2;
        }
      }
    }
    for (auto& ax : axes) ax.step *= 0.5;
  }
  return pt;
}

std::vector<FrontierPoint> to_frontier_points(std::vector<SweepPoint> pts,
                                              double a, double a2) {
  std::vector<FrontierPoint> out;
  out.reserve(pts.size());
  for (auto& sp : pts)
    out.push_back(
        {sp.rates.re1, sp.rates.re2, sp.params, a, a2});
  return out;
}

}  // namespace

FrontierFamily trace_frontier(const SweepConfig& cfg,
                              const GaussianCrbcParams& p) {
  auto frontier =
      pareto_filter(to_frontier_points(sweep(cfg, p), p.a, 0.0));
  auto eval = [&](const SchemeParams& sp)
      -> std::optional<SweepPoint> {
    return eval_one_sided(cfg, p, sp.alpha, sp.beta, sp.gamma);
  };
  for (auto& pt : frontier) pt = refine_point(cfg, pt, eval);
  return {p.a, 0.0, pareto_filter(std::move(frontier))};
}

FrontierFamily trace_frontier(const SweepConfig& cfg,
                              const TwoSidedGaussianParams& p) {
  auto frontier =
      pareto_filter(to_frontier_points(sweep(cfg, p), p.a1, p.a2));
  auto eval = [&](const SchemeParams& sp)
      -> std::optional<SweepPoint> {
    return eval_two_sided(cfg, p, sp.alpha, sp.beta1, sp.beta2);
  };
  for (auto& pt : frontier) pt = refine_point(cfg, pt, eval);
  return {p.a1, p.a2, pareto_filter(std::move(frontier))};
}

std::vector<FrontierFamily> trace_family(const SweepConfig& cfg,
                                         const GaussianCrbcParams& base,
                                         std::span<const double> a_list) {
  std::vector<FrontierFamily> out;
  out.reserve(a_list.size());
  for (double a : a_list) {
    GaussianCrbcParams p = base;
    p.a = a;
    out.push_back(trace_frontier(cfg, p));
  }
  return out;
}

std::vector<FrontierFamily> trace_family(const SweepConfig& cfg,
                                         const TwoSidedGaussianParams& base,
                                         std::span<const double> a_list) {
  std::vector<FrontierFamily> out;
  out.reserve(a_list.size());
  for (double a : a_list) {
    TwoSidedGaussianParams p = base;
    p.a1 = a;
    p.a2 = a;
    out.push_back(trace_frontier(cfg, p));
  }
  return out;
}

}  // namespace crbc::frontier
