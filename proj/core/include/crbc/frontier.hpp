#ifndef CRBC_FRONTIER_HPP
#define CRBC_FRONTIER_HPP

/// Grid sweeps over the Gaussian schemes and Pareto extraction of the
/// achievable (re1, re2) pairs — the upper boundary of the equivocation
/// regions.

#include <optional>
#include <span>
#include <vector>

#include "crbc/gaussian.hpp"

namespace crbc::frontier {

enum class Scheme { prop1, prop2, prop3, prop4, prop5 };

const char* scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

struct SweepConfig {
  Scheme scheme = Scheme::prop1;
  std::size_t alpha_points = 101;
  std::size_t beta_points = 51;   // prop3/prop4; also beta1/beta2 for prop5
  std::size_t gamma_points = 81;  // prop2/prop4
  double gamma_min = -2.0;
  double gamma_max = 2.0;
  /// Compression noise policy: the constraint floor by default (re2 is
  /// decreasing in nc, so the floor is optimal), or explicit values.
  std::optional<double> nc_override;
  std::optional<double> nc2_override;
  unsigned refine_passes = 20;

  void validate() const;
};

struct SweepPoint {
  gaussian::SchemeParams params;
  gaussian::EquivocationPair rates;
};

struct FrontierPoint {
  double re1 = 0.0;
  double re2 = 0.0;
  gaussian::SchemeParams params;
  double a = 0.0;   // helper power ratio (a1 for the two-sided scheme)
  double a2 = 0.0;  // two-sided scheme only
};

/// Evaluates the scheme on the full parameter grid in lexicographic
/// parameter order. Infeasible grid points are excluded. Grid points are
/// evaluated concurrently but the output order is fixed.
std::vector<SweepPoint> sweep(const SweepConfig& cfg,
                              const gaussian::GaussianCrbcParams& p);
std::vector<SweepPoint> sweep(const SweepConfig& cfg,
                              const gaussian::TwoSidedGaussianParams& p);

/// Nondominated subset: a point is dropped iff some other point is >= in
/// both coordinates and better by more than 1e-9 in at least one. Exact
/// (re1, re2) duplicates are collapsed to the lexicographically smallest
/// parameters. Output sorted by re1 ascending, ties by re2 descending then
/// parameters. Matches the quadratic dominance filter by definition.
std::vector<FrontierPoint> pareto_filter(std::vector<FrontierPoint> points);

/// One frontier (sorted, nondominated, refined) per helper power value.
struct FrontierFamily {
  double a = 0.0;
  double a2 = 0.0;
  std::vector<FrontierPoint> points;
};

/// Sweeps, filters and refines one frontier per a in `a_list` (base.a is
/// ignored). For the two-sided scheme each a sets a1 = a2 = a.
std::vector<FrontierFamily> trace_family(const SweepConfig& cfg,
                                         const gaussian::GaussianCrbcParams& base,
                                         std::span<const double> a_list);
std::vector<FrontierFamily> trace_family(
    const SweepConfig& cfg, const gaussian::TwoSidedGaussianParams& base,
    std::span<const double> a_list);

/// Single frontier at the params' own power ratios.
FrontierFamily trace_frontier(const SweepConfig& cfg,
                              const gaussian::GaussianCrbcParams& p);
FrontierFamily trace_frontier(const SweepConfig& cfg,
                              const gaussian::TwoSidedGaussianParams& p);

}  // namespace crbc::frontier

#endif  // CRBC_FRONTIER_HPP
