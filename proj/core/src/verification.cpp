#include "crbc/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "crbc/dmc.hpp"
#include "crbc/frontier.hpp"
#include "crbc/gaussian.hpp"
#include "crbc/random.hpp"

namespace crbc::verification {

namespace {

namespace g = crbc::gaussian;
namespace d = crbc::dmc;
namespace r = crbc::random;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool close_rel(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

struct Criterion {
  const char* id;
  const char* name;
  const char* tags;
  std::function<bool(std::ostringstream&)> body;
};

// --- 01..03: numeric anchors -------------------------------------------------

bool check_wiretap_anchor(std::ostringstream& out) {
  const auto t0 = Clock::now();
  const double v = g::wiretap_secrecy(8, 1, 2);
  const double ms = ms_since(t0);
  out << "wiretap_secrecy(8,1,2) = " << v << " (expect 0.424 +- 0.005), "
      << ms << " ms";
  return std::abs(v - 0.424) <= 0.005 && ms < 1.0;
}

bool check_pure_relay_anchor(std::ostringstream& out) {
  const g::GaussianCrbcParams p{8, 100, 1, 2};
  const auto t0 = Clock::now();
  const auto bound = g::prop1_min_nc(0.0, p);
  const auto rates = g::prop1_rates(0.0, bound.nc_min, p);
  const double ms = ms_since(t0);
  out << "prop1(alpha=0, nc=nc_min=" << bound.nc_min << ").re2 = " << rates.re2
      << " (expect 0.251 +- 0.005), " << ms << " ms";
  return bound.feasible && std::abs(rates.re2 - 0.251) <= 0.005 && ms < 1.0;
}

bool check_full_jamming_anchor(std::ostringstream& out) {
  const g::GaussianCrbcParams p{8, 100, 1, 2};
  const auto t0 = Clock::now();
  const auto bound = g::prop3_min_nc(1.0, 0.0, p);
  const auto rates = g::prop3_rates(1.0, 0.0, bound.nc_min, p);
  const double ms = ms_since(t0);
  out << "prop3(alpha=1, beta=0).re1 = " << rates.re1
      << " (expect 1.578 +- 0.01), " << ms << " ms";
  return bound.feasible && rates.feasible &&
         std::abs(rates.re1 - 1.578) <= 0.01 && ms < 1.0;
}

// --- 04: limit identity --------------------------------------------------------

bool check_limit_identity(std::ostringstream& out) {
  r::Rng rng(0xC0FFEE01);
  std::uniform_real_distribution<double> logp(-2.0, 2.0), logn(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double P = std::pow(10.0, logp(rng));
    const double N1 = std::pow(10.0, logn(rng));
    const double N2 = std::pow(10.0, logn(rng));
    const double c1 = g::corollary1_limit(P, N1, N2);
    const double sato = g::gaussian_sato_bound(P, N1, N2);
    worst = std::max(worst, std::abs(c1 - sato) /
                                std::max({1.0, std::abs(c1), std::abs(sato)}));
  }
  const double ref = g::corollary1_limit(8, 1, 2);
  out << "max relative gap " << worst
      << " over 100 draws (tol 1e-12); limit(8,1,2) = " << ref
      << " (expect 0.26526 +- 1e-4)";
  return worst <= 1e-12 && std::abs(ref - 0.26525735834939) <= 1e-4;
}

// --- 05: convergence to the limit ----------------------------------------------

bool check_convergence(std::ostringstream& out) {
  const auto t0 = Clock::now();
  const double limit = g::corollary1_limit(8, 1, 2);
  const g::GaussianCrbcParams p{8, 1e6, 1, 2};
  double best = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double alpha = i / 100.0;
    const auto bound = g::prop1_min_nc(alpha, p);
    if (!bound.feasible) continue;
    best = std::max(best, g::prop1_rates(alpha, bound.nc_min, p).re2);
  }
  const double ms = ms_since(t0);
  out << "max prop1 re2 at a=1e6 is " << best << ", limit " << limit
      << ", gap " << (limit - best) << " (tol 0.002, must not exceed), " << ms
      << " ms";
  return best <= limit && (limit - best) <= 0.002 && ms < 5000.0;
}

// --- 06: reduction suite --------------------------------------------------------

bool check_reductions(std::ostringstream& out) {
  const auto t0 = Clock::now();
  r::Rng rng(0xC0FFEE02);
  std::uniform_real_distribution<double> u01(0.0, 1.0), ug(-2.0, 2.0),
      up(0.5, 20.0), ua(0.05, 200.0), un(0.2, 5.0);
  double worst = 0.0;
  auto track = [&](double x, double y) {
    if (std::isnan(x) || std::isnan(y)) {
      if (!(std::isnan(x) && std::isnan(y)))
        worst = std::numeric_limits<double>::infinity();
      return;
    }
    worst = std::max(worst, std::abs(x - y) /
                                std::max({1.0, std::abs(x), std::abs(y)}));
  };

  for (int i = 0; i < 1000; ++i) {
    const g::GaussianCrbcParams p{up(rng), ua(rng), un(rng), un(rng)};
    const double alpha = u01(rng), beta = u01(rng), gamma = ug(rng);

    // prop2(gamma=0) vs prop1, same nc
    {
      const auto b1 = g::prop1_min_nc(alpha, p);
      const double nc = b1.nc_min * (1.0 + u01(rng));
      const auto r1 = g::prop1_rates(alpha, nc, p);
      const auto r2 = g::prop2_rates(alpha, 0.0, nc, p);
      track(r1.re1_raw, r2.re1_raw);
      track(r1.re2_raw, r2.re2_raw);
      if (alpha > 0.0) track(b1.nc_min, g::prop2_min_nc(alpha, 0.0, p).nc_min);
    }
    // prop4(beta=1) vs prop2, same nc
    {
      const auto b2 = g::prop2_min_nc(alpha, gamma, p);
      if (b2.feasible) {
        const double nc = b2.nc_min * (1.0 + u01(rng)) + 1e-6;
        const auto r2 = g::prop2_rates(alpha, gamma, nc, p);
        const auto r4 = g::prop4_rates(alpha, 1.0, gamma, nc, p);
        track(r2.re1_raw, r4.re1_raw);
        track(r2.re2_raw, r4.re2_raw);
        const auto b4 = g::prop4_min_nc(alpha, 1.0, gamma, p);
        track(b2.nc_min, b4.nc_min);
      }
    }
    // prop4(gamma=0) vs prop3, same nc
    {
      const auto b3 = g::prop3_min_nc(alpha, beta, p);
      if (b3.feasible && std::isfinite(b3.nc_min)) {
        const double nc = b3.nc_min * (1.0 + u01(rng));
        const auto r3 = g::prop3_rates(alpha, beta, nc, p);
        const auto r4 = g::prop4_rates(alpha, beta, 0.0, nc, p);
        track(r3.re1_raw, r4.re1_raw);
        track(r3.re2_raw, r4.re2_raw);
        if (alpha > 0.0 && beta > 0.0)
          track(b3.nc_min, g::prop4_min_nc(alpha, beta, 0.0, p).nc_min);
      }
    }
  }

  // eval_theorem4 with U = X1 vs eval_theorem1 on the induced factorization.
  for (int i = 0; i < 1000; ++i) {
    const auto ch = r::channel(rng, 2, 2, 2, 2);
    auto t4 = r::theorem4_input(rng, ch, 2, 2, 2, 2);
    // identity p(x1|u)
    t4.px1_given_u = {1.0, 0.0, 0.0, 1.0};
    d::Theorem1Input t1;
    t1.nv1 = t4.nv1;
    t1.nv2 = t4.nv2;
    t1.nyh = t4.nyh;
    t1.pv1v2 = t4.pv1v2;
    t1.px_given_v = t4.px_given_v;
    t1.px1 = t4.pu;
    t1.pyhat = t4.pyhat;  // [u][v1][y1][yh] == [x1][v1][y1][yh] under U = X1
    const auto e4 = d::eval_theorem4(ch, t4);
    const auto e1 = d::eval_theorem1(ch, t1);
    track(e4.r1, e1.r1);
    track(e4.r2, e1.r2);
    track(e4.r1_plus_r2, e1.r1_plus_r2);
    track(e4.re1_raw, e1.re1_raw);
    track(e4.re2_raw, e1.re2_raw);
    track(e4.slack1, e1.slack1);
  }

  const double ms = ms_since(t0);
  out << "max relative gap " << worst
      << " over 1000 draws per reduction (tol 1e-12), " << ms << " ms";
  return worst <= 1e-12 && ms < 10000.0;
}

// --- 07: re2 monotone decreasing in nc ------------------------------------------

bool check_monotonicity(std::ostringstream& out) {
  r::Rng rng(0xC0FFEE03);
  std::uniform_real_distribution<double> ua(0.02, 0.98), ub(0.05, 1.0),
      ug(-2.0, 2.0), up(0.5, 20.0), uaa(0.1, 200.0), un(0.2, 5.0);
  int checked = 0;
  for (int scheme = 1; scheme <= 4; ++scheme) {
    for (int i = 0; i < 100; ++i) {
      const g::GaussianCrbcParams p{up(rng), uaa(rng), un(rng), un(rng)};
      const double alpha = ua(rng), beta = ub(rng), gamma = ug(rng);
      double nc_min = 0.0;
      switch (scheme) {
        case 1: nc_min = g::prop1_min_nc(alpha, p).nc_min; break;
        case 2: nc_min = g::prop2_min_nc(alpha, gamma, p).nc_min; break;
        case 3: nc_min = g::prop3_min_nc(alpha, beta, p).nc_min; break;
        case 4: nc_min = g::prop4_min_nc(alpha, beta, gamma, p).nc_min; break;
      }
      if (!std::isfinite(nc_min)) return false;
      double prev = 0.0;
      for (int k = 0; k < 50; ++k) {
        const double nc = nc_min * (1.0 + 0.1 * k) + 0.01 * k;
        double re2 = 0.0;
        switch (scheme) {
          case 1: re2 = g::prop1_rates(alpha, nc, p).re2_raw; break;
          case 2: re2 = g::prop2_rates(alpha, gamma, nc, p).re2_raw; break;
          case 3: re2 = g::prop3_rates(alpha, beta, nc, p).re2_raw; break;
          case 4: re2 = g::prop4_rates(alpha, beta, gamma, nc, p).re2_raw;
            break;
        }
        if (k > 0 && !(re2 < prev)) {
          out << "scheme prop" << scheme << " draw " << i
              << ": re2 not strictly decreasing at grid step " << k;
          return false;
        }
        prev = re2;
        ++checked;
      }
    }
  }
  out << checked << " grid evaluations strictly decreasing (pre-clamp re2)";
  return true;
}

// --- 08: degraded channels give user 2 nothing -----------------------------------

bool check_degraded(std::ostringstream& out) {
  r::Rng rng(0xC0FFEE04);
  double worst_outer = 0.0, worst_re2 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto ch = r::degraded_channel(rng, 2, 2, 2, 2);
    if (!d::is_degraded(ch)) {
      out << "constructed channel " << i << " not detected as degraded";
      return false;
    }
    const auto mx = d::maximize_theorem3(ch, 16);
    worst_outer = std::max(worst_outer, mx.value);
    for (int k = 0; k < 3; ++k) {
      const auto in = r::theorem1_input(rng, ch, 2, 2, 2);
      worst_re2 = std::max(worst_re2, d::eval_theorem1(ch, in).re2_raw);
    }
  }
  out << "50 degraded channels: max outer bound " << worst_outer
      << ", max unclamped Re2 bound " << worst_re2 << " (tol 1e-9)";
  return worst_outer <= 1e-9 && worst_re2 <= 1e-9;
}

// --- 09: reverse-degraded tightness ----------------------------------------------

bool check_reverse_degraded(std::ostringstream& out) {
  r::Rng rng(0xC0FFEE05);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto ch = r::reverse_degraded_channel(rng, 2, 2, 2, 2);
    if (!d::is_reverse_degraded(ch)) {
      out << "constructed channel " << i << " not detected as reverse degraded";
      return false;
    }
    const auto px = r::distribution(rng, ch.nx);
    const auto px1 = r::distribution(rng, ch.nx1);
    // Achievable point with V2 = X and degenerate V1, Yhat1.
    d::Theorem1Input in;
    in.nv1 = 1;
    in.nv2 = ch.nx;
    in.nyh = 1;
    in.pv1v2 = px;
    in.px_given_v.assign(ch.nx * ch.nx, 0.0);
    for (std::size_t v2 = 0; v2 < ch.nx; ++v2)
      in.px_given_v[v2 * ch.nx + v2] = 1.0;
    in.px1 = px1;
    in.pyhat.assign(ch.nx1 * 1 * ch.ny1 * 1, 1.0);
    const auto ev = d::eval_theorem1(ch, in);

    std::vector<double> p_xx1(ch.nx * ch.nx1);
    for (std::size_t x = 0; x < ch.nx; ++x)
      for (std::size_t x1 = 0; x1 < ch.nx1; ++x1)
        p_xx1[x * ch.nx1 + x1] = px[x] * px1[x1];
    const double outer = d::eval_theorem3(ch, p_xx1);
    const double cap = d::secrecy_capacity_reverse_degraded(ch, p_xx1);
    worst = std::max({worst, std::abs(ev.re2_raw - outer),
                      std::abs(cap - outer)});
  }
  out << "20 reverse-degraded channels: max |achievable - outer| " << worst
      << " (tol 1e-9)";
  return worst <= 1e-9;
}

// --- 10: outer-bound dominance ----------------------------------------------------

bool check_dominance(std::ostringstream& out) {
  // Gaussian side: every frontier point of the relay-only schemes stays
  // under the Sato-type bound.
  const double sato = g::gaussian_sato_bound(8, 1, 2) + 1e-9;
  const std::vector<double> a_values{1.0, 10.0, 100.0, 1e4};
  std::size_t npoints = 0;
  for (auto scheme : {frontier::Scheme::prop1, frontier::Scheme::prop2}) {
    frontier::SweepConfig cfg;
    cfg.scheme = scheme;
    const g::GaussianCrbcParams base{8, 1, 1, 2};
    for (const auto& fam : frontier::trace_family(cfg, base, a_values))
      for (const auto& pt : fam.points) {
        ++npoints;
        if (pt.re2 > sato) {
          out << frontier::scheme_name(scheme) << " point (a=" << fam.a
              << ", alpha=" << pt.params.alpha << ") re2 " << pt.re2
              << " exceeds sato bound";
          return false;
        }
      }
  }

  // DMC side: achievable Re2 of constraint-feasible points never exceeds
  // the seeded input/output maximization.
  r::Rng rng(0xC0FFEE06);
  int usable = 0;
  double worst_margin = -1.0;
  for (int i = 0; i < 20; ++i) {
    const auto ch = r::channel(rng, 2, 2, 2, 2);
    auto in = r::theorem1_input(rng, ch, 2, 2, i % 2 == 0 ? 1 : 2);
    if (i % 2 == 1) {
      // Make the quantizer nearly channel-noise so the link constraint has
      // a chance to hold.
      for (double& v : in.pyhat) v = 0.95 * 0.5 + 0.05 * v;
      const std::size_t rows = ch.nx1 * in.nv1 * ch.ny1;
      for (std::size_t row = 0; row < rows; ++row) {
        double s = 0.0;
        for (std::size_t c = 0; c < in.nyh; ++c) s += in.pyhat[row * in.nyh + c];
        for (std::size_t c = 0; c < in.nyh; ++c) in.pyhat[row * in.nyh + c] /= s;
      }
    }
    const auto ev = d::eval_theorem1(ch, in);
    if (!ev.constraint1_ok) continue;
    ++usable;
    // induced input p(x,x1) = (sum_v pv1v2 * px_given_v) x px1
    std::vector<double> px(ch.nx, 0.0);
    for (std::size_t v1 = 0; v1 < in.nv1; ++v1)
      for (std::size_t v2 = 0; v2 < in.nv2; ++v2)
        for (std::size_t x = 0; x < ch.nx; ++x)
          px[x] += in.pv1v2[v1 * in.nv2 + v2] *
                   in.px_given_v[(v1 * in.nv2 + v2) * ch.nx + x];
    std::vector<double> seed(ch.nx * ch.nx1);
    for (std::size_t x = 0; x < ch.nx; ++x)
      for (std::size_t x1 = 0; x1 < ch.nx1; ++x1)
        seed[x * ch.nx1 + x1] = px[x] * in.px1[x1];
    const std::vector<std::vector<double>> seeds{seed};
    const auto mx = d::maximize_theorem3(ch, 16, seeds);
    worst_margin = std::max(worst_margin, ev.re2 - mx.value);
    if (ev.re2 > mx.value + 1e-9) {
      out << "instance " << i << ": achievable Re2 " << ev.re2
          << " exceeds seeded maximization " << mx.value;
      return false;
    }
  }
  out << npoints << " Gaussian frontier points under the Sato bound; "
      << usable << "/20 DMC instances constraint-feasible, worst margin "
      << worst_margin;
  return usable >= 10;
}

// --- 11: jamming threshold ---------------------------------------------------------

bool check_jamming_threshold(std::ostringstream& out) {
  const double thr = g::jamming_threshold(8, 2, 1);
  if (std::abs(thr - 0.125) > 1e-15) {
    out << "threshold " << thr << " != 0.125";
    return false;
  }
  const double step = 0.01;
  for (int k = -3; k <= 3; ++k) {
    const double a = thr + k * step;
    if (a < 0) continue;
    const g::GaussianCrbcParams p{8, a, 2, 1};
    const auto bound = g::prop3_min_nc(1.0, 0.0, p);
    const double re1 = g::prop3_rates(1.0, 0.0, bound.nc_min, p).re1;
    const bool expect_positive = a > thr;
    if (expect_positive != (re1 > 0.0)) {
      out << "at a=" << a << " re1=" << re1 << " contradicts threshold";
      return false;
    }
  }
  out << "threshold 0.125; re1 > 0 iff a > threshold on a +-0.03 grid";
  return true;
}

}  // namespace

std::vector<CheckResult> run_all(std::string_view filter) {
  const Criterion criteria[] = {
      {"01", "wiretap-anchor", "gaussian", check_wiretap_anchor},
      {"02", "pure-relay-anchor", "gaussian", check_pure_relay_anchor},
      {"03", "full-jamming-anchor", "gaussian", check_full_jamming_anchor},
      {"04", "limit-identity", "gaussian", check_limit_identity},
      {"05", "limit-convergence", "gaussian frontier", check_convergence},
      {"06", "reduction-suite", "gaussian dmc", check_reductions},
      {"07", "nc-monotonicity", "gaussian", check_monotonicity},
      {"08", "degraded-zero-secrecy", "dmc", check_degraded},
      {"09", "reverse-degraded-capacity", "dmc", check_reverse_degraded},
      {"10", "outer-bound-dominance", "gaussian dmc frontier",
       check_dominance},
      {"11", "jamming-threshold", "gaussian", check_jamming_threshold},
  };

  std::vector<CheckResult> results;
  for (const auto& c : criteria) {
    const std::string haystack =
        std::string(c.id) + " " + c.name + " " + c.tags;
    if (!filter.empty() && haystack.find(filter) == std::string::npos)
      continue;
    CheckResult res;
    res.id = c.id;
    res.name = c.name;
    res.tags = c.tags;
    std::ostringstream detail;
    detail.precision(12);
    const auto t0 = Clock::now();
    try {
      res.passed = c.body(detail);
    } catch (const std::exception& e) {
      res.passed = false;
      detail << " [exception: " << e.what() << "]";
    }
    res.millis = ms_since(t0);
    res.detail = detail.str();
    results.push_back(std::move(res));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

void print_table(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t failures = 0;
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
       << r.tags << "): " << r.detail << "\n";
    if (!r.passed) ++failures;
  }
  os << (failures == 0 ? "all criteria passed"
                       : std::to_string(failures) + " criterion(s) FAILED")
     << " (" << results.size() << " run)\n";
}

}  // namespace crbc::verification
