#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "crbc/frontier.hpp"
#include "crbc/gaussian.hpp"

using namespace crbc;
using frontier::FrontierPoint;
using frontier::Scheme;
using frontier::SweepConfig;

namespace {

const gaussian::GaussianCrbcParams kFig34{8, 100, 1, 2};

// O(n^2) dominance filter, straight from the definition.
std::vector<FrontierPoint> quadratic_filter(
    const std::vector<FrontierPoint>& pts) {
  constexpr double eps = 1e-9;
  std::vector<FrontierPoint> out;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (q.re1 >= p.re1 && q.re2 >= p.re2 &&
          (q.re1 > p.re1 + eps || q.re2 > p.re2 + eps)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

FrontierPoint mk(double re1, double re2) {
  FrontierPoint p;
  p.re1 = re1;
  p.re2 = re2;
  p.params.alpha = re1;  // arbitrary distinct parameters
  p.params.gamma = re2;
  return p;
}

}  // namespace

TEST_CASE("pareto filter on hand cases") {
  auto out = frontier::pareto_filter({mk(0.1, 0.2), mk(0.1, 0.3), mk(0.2, 0.1)});
  REQUIRE(out.size() == 2);
  CHECK(out[0].re1 == 0.1);
  CHECK(out[0].re2 == 0.3);
  CHECK(out[1].re1 == 0.2);
  CHECK(out[1].re2 == 0.1);

  out = frontier::pareto_filter({mk(0.4, 0.4)});
  REQUIRE(out.size() == 1);

  CHECK(frontier::pareto_filter({}).empty());
}

TEST_CASE("pareto filter equals the quadratic oracle on random clouds") {
  std::mt19937_64 rng(201);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> small(0, 30);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<FrontierPoint> pts;
    const int n = trial == 3 ? 10000 : 300;
    for (int i = 0; i < n; ++i) {
      // mix of continuous draws and a coarse lattice to force exact ties
      if (i % 3 == 0)
        pts.push_back(mk(small(rng) / 30.0, small(rng) / 30.0));
      else
        pts.push_back(mk(u(rng), u(rng)));
    }
    auto got = frontier::pareto_filter(pts);
    // compare as (re1, re2) multisets against the oracle on the deduped set
    auto dedup = pts;
    std::sort(dedup.begin(), dedup.end(), [](auto& a, auto& b) {
      return a.re1 != b.re1 ? a.re1 < b.re1 : a.re2 < b.re2;
    });
    dedup.erase(std::unique(dedup.begin(), dedup.end(),
                            [](auto& a, auto& b) {
                              return a.re1 == b.re1 && a.re2 == b.re2;
                            }),
                dedup.end());
    auto want = quadratic_filter(dedup);
    std::sort(want.begin(), want.end(), [](auto& a, auto& b) {
      return a.re1 != b.re1 ? a.re1 < b.re1 : a.re2 > b.re2;
    });
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].re1 == want[i].re1);
      CHECK(got[i].re2 == want[i].re2);
    }
  }
}

TEST_CASE("sweep: deterministic grid, formula values, scheme/params matching") {
  SweepConfig cfg;
  cfg.scheme = Scheme::prop1;
  cfg.alpha_points = 3;
  const auto pts = frontier::sweep(cfg, kFig34);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].params.alpha == 0.0);
  CHECK(pts[1].params.alpha == 0.5);
  CHECK(pts[2].params.alpha == 1.0);
  CHECK(std::abs(pts[0].rates.re2 - 0.2511) < 5e-4);
  CHECK(std::abs(pts[2].rates.re1 - 0.4240) < 5e-4);
  for (const auto& pt : pts) {
    const auto direct = gaussian::prop1_rates(pt.params.alpha, pt.params.nc,
                                              kFig34);
    CHECK(pt.rates.re1 == direct.re1);
    CHECK(pt.rates.re2 == direct.re2);
  }

  // a below the jamming threshold: full jamming cannot help user 1
  SweepConfig cfg3;
  cfg3.scheme = Scheme::prop3;
  cfg3.alpha_points = 5;
  cfg3.beta_points = 5;
  const gaussian::GaussianCrbcParams weak{8, 0.05, 2, 1};
  for (const auto& pt : frontier::sweep(cfg3, weak))
    CHECK(pt.rates.re1 == 0.0);

  SweepConfig cfg5;
  cfg5.scheme = Scheme::prop5;
  CHECK_THROWS_AS(frontier::sweep(cfg5, kFig34), std::invalid_argument);
  SweepConfig bad;
  bad.alpha_points = 1;
  CHECK_THROWS_AS(frontier::sweep(bad, kFig34), std::invalid_argument);
}

TEST_CASE("sweep is reproducible across worker counts") {
  SweepConfig cfg;
  cfg.scheme = Scheme::prop4;
  cfg.alpha_points = 11;
  cfg.beta_points = 7;
  cfg.gamma_points = 9;
  setenv("CRBC_THREADS", "1", 1);
  const auto a = frontier::sweep(cfg, kFig34);
  setenv("CRBC_THREADS", "5", 1);
  const auto b = frontier::sweep(cfg, kFig34);
  unsetenv("CRBC_THREADS");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].params.alpha == b[i].params.alpha);
    CHECK(a[i].rates.re1 == b[i].rates.re1);
    CHECK(a[i].rates.re2 == b[i].rates.re2);
  }
}

TEST_CASE("frontier families: endpoints, dominance, growth in helper power") {
  SweepConfig cfg;
  cfg.scheme = Scheme::prop1;
  const double a_list[] = {1.0, 10.0, 100.0};
  const auto families = frontier::trace_family(cfg, kFig34, a_list);
  REQUIRE(families.size() == 3);

  double prev_max_re1 = -1, prev_max_re2 = -1;
  for (const auto& fam : families) {
    REQUIRE_FALSE(fam.points.empty());
    // no dominated point survives (oracle recheck)
    CHECK(quadratic_filter(fam.points).size() == fam.points.size());

    double max_re1 = 0, max_re2 = 0;
    for (const auto& pt : fam.points) {
      max_re1 = std::max(max_re1, pt.re1);
      max_re2 = std::max(max_re2, pt.re2);
    }
    // region endpoints grow with the helper power
    CHECK(max_re1 >= prev_max_re1 - 1e-9);
    CHECK(max_re2 >= prev_max_re2 - 1e-9);
    prev_max_re1 = max_re1;
    prev_max_re2 = max_re2;

    // axis endpoints against the direct formulas
    const auto b0 = gaussian::prop1_min_nc(0.0, {8, fam.a, 1, 2});
    const double want_re2 =
        gaussian::prop1_rates(0.0, b0.nc_min, {8, fam.a, 1, 2}).re2;
    CHECK(std::abs(max_re2 - want_re2) <= 1e-6);
    CHECK(std::abs(max_re1 - gaussian::wiretap_secrecy(8, 1, 2)) <= 1e-6);
  }

  CHECK(frontier::trace_family(cfg, kFig34, std::vector<double>{}).empty());
}

TEST_CASE("jamming families clear the threshold") {
  SweepConfig cfg;
  cfg.scheme = Scheme::prop3;
  const gaussian::GaussianCrbcParams base{8, 1, 2, 1};
  CHECK(gaussian::wiretap_secrecy(8, 2, 1) == 0.0);
  const double a_list[] = {0.05, 0.2, 1.0};
  const auto families = frontier::trace_family(cfg, base, a_list);
  REQUIRE(families.size() == 3);
  auto max_re1 = [](const frontier::FrontierFamily& fam) {
    double m = 0;
    for (const auto& pt : fam.points) m = std::max(m, pt.re1);
    return m;
  };
  CHECK(max_re1(families[0]) == 0.0);  // below (N1-N2)/P = 0.125
  CHECK(max_re1(families[1]) > 0.0);
  CHECK(max_re1(families[2]) > max_re1(families[1]));
}

TEST_CASE("refinement only moves points up in the Pareto order") {
  SweepConfig cfg;
  cfg.scheme = Scheme::prop2;
  cfg.alpha_points = 21;
  cfg.gamma_points = 17;

  // unrefined frontier
  std::vector<FrontierPoint> raw;
  for (const auto& sp : frontier::sweep(cfg, kFig34))
    raw.push_back({sp.rates.re1, sp.rates.re2, sp.params, kFig34.a, 0.0});
  const auto unrefined = frontier::pareto_filter(raw);
  const auto refined = frontier::trace_frontier(cfg, kFig34);

  for (const auto& before : unrefined) {
    bool covered = false;
    for (const auto& after : refined.points)
      if (after.re1 >= before.re1 - 1e-12 && after.re2 >= before.re2 - 1e-12) {
        covered = true;
        break;
      }
    CHECK(covered);
  }
}

TEST_CASE("two-sided frontier runs and stays feasible") {
  SweepConfig cfg;
  cfg.scheme = Scheme::prop5;
  cfg.alpha_points = 11;
  cfg.beta_points = 5;
  const gaussian::TwoSidedGaussianParams p{8, 100, 100, 1, 2};
  const auto fam = frontier::trace_frontier(cfg, p);
  REQUIRE_FALSE(fam.points.empty());
  CHECK(quadratic_filter(fam.points).size() == fam.points.size());
  for (const auto& pt : fam.points) {
    const auto r = gaussian::prop5_rates(pt.params.alpha, pt.params.beta1,
                                         pt.params.beta2, pt.params.nc1,
                                         pt.params.nc2, p);
    CHECK(r.feasible);
  }
}
