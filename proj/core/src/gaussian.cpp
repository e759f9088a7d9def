#include "crbc/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crbc::gaussian {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDegenerateTheta = 1e-12;
constexpr double kFeasibilitySlack = 1e-12;

// 1/2 log2(1+z), accurate for small z.
double half_log2_1p(double z) { return 0.5 * std::log1p(z) / M_LN2; }

// ratio num/den with the convention 0/0 = 0; num and den are nonnegative
// by construction in every call site.
double safe_ratio(double num, double den) {
  if (num == 0.0) return 0.0;
  return num / den;
}

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

void check_nc(double nc, const char* name) {
  if (std::isnan(nc) || nc < 0.0)
    throw std::invalid_argument(std::string(name) + " must be >= 0");
}

void check_pnn(double P, double N1, double N2) {
  if (!(P > 0.0) || !(N1 > 0.0) || !(N2 > 0.0) || !std::isfinite(P) ||
      !std::isfinite(N1) || !std::isfinite(N2))
    throw std::invalid_argument("P, N1, N2 must be finite and > 0");
}

EquivocationPair make_rates(double re1_raw, double re2_raw, bool feasible) {
  EquivocationPair e;
  e.re1_raw = re1_raw;
  e.re2_raw = re2_raw;
  e.re1 = std::max(0.0, re1_raw);
  e.re2 = std::max(0.0, re2_raw);
  e.feasible = feasible;
  return e;
}

// Positive root of theta*nc^2 + eta*nc - omega = 0, with fallback to the
// linear constraint eta*nc >= omega when the quadratic degenerates.
QuadraticNcBound solve_nc_quadratic(double theta, double eta, double omega) {
  QuadraticNcBound b;
  b.theta = theta;
  b.eta = eta;
  b.omega = omega;
  if (theta > kDegenerateTheta) {
    const double disc = eta * eta + 4.0 * theta * omega;
    b.nc_min = std::max(0.0, (-eta + std::sqrt(std::max(0.0, disc))) /
                                 (2.0 * theta));
    b.feasible = true;
  } else if (eta > 0.0) {
    b.nc_min = std::max(0.0, omega / eta);
    b.feasible = true;
  } else if (omega <= kDegenerateTheta) {
    b.nc_min = 0.0;
    b.feasible = true;
  } else {
    b.nc_min = kNaN;
    b.feasible = false;
  }
  return b;
}

}  // namespace

void GaussianCrbcParams::validate() const {
  check_pnn(P, N1, N2);
  if (std::isnan(a) || a < 0.0)
    throw std::invalid_argument("helper power ratio a must be >= 0");
}

void TwoSidedGaussianParams::validate() const {
  check_pnn(P, N1, N2);
  if (std::isnan(a1) || a1 < 0.0 || std::isnan(a2) || a2 < 0.0)
    throw std::invalid_argument("power ratios a1, a2 must be >= 0");
}

bool QuadraticNcBound::admits(double nc) const {
  if (!(nc >= 0.0)) return false;
  if (std::isinf(nc))
    return theta > kDegenerateTheta || eta > 0.0 || omega <= kDegenerateTheta;
  if (theta > kDegenerateTheta) {
    const double q = theta * nc * nc + eta * nc - omega;
    return q >= -kFeasibilitySlack *
                    std::max({1.0, std::abs(omega), theta * nc * nc});
  }
  return eta * nc - omega >=
         -kFeasibilitySlack * std::max(1.0, std::abs(omega));
}

double wiretap_secrecy(double P, double N1, double N2) {
  check_pnn(P, N1, N2);
  return std::max(0.0, half_log2_1p(P / N1) - half_log2_1p(P / N2));
}

NcBound prop1_min_nc(double alpha, const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  const double ab = 1.0 - alpha;
  if (p.a <= 0.0) return {kInf, false};
  const double num =
      p.N2 * (ab * p.P + p.N1) + p.P * (alpha * ab * p.P + p.N1);
  return {num / (p.a * p.P), true};
}

EquivocationPair prop1_rates(double alpha, double nc,
                             const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_nc(nc, "nc");
  const double P = p.P, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha;
  const double re1 =
      half_log2_1p(alpha * P / (ab * P + N1)) - half_log2_1p(alpha * P / N2);
  const double re2 =
      half_log2_1p(ab * P * (1.0 / (alpha * P + N2) + 1.0 / (N1 + nc))) -
      half_log2_1p(ab * P / N1);
  const NcBound bound = prop1_min_nc(alpha, p);
  const bool ok = bound.feasible && nc >= bound.nc_min * (1.0 - 1e-12);
  return make_rates(re1, re2, ok);
}

QuadraticNcBound prop2_min_nc(double alpha, double gamma,
                              const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  const double P = p.P, a = p.a, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha, g = gamma;
  const double mix = alpha + g * g * ab;       // alpha + gamma^2 * (1-alpha)
  const double dpc = (1.0 - g) * (1.0 - g);    // (1-gamma)^2
  const double theta = a * mix * P;
  const double eta = mix * P * (a * N1 + dpc * ab * P * (a + ab)) -
                     (P + N2) * (N1 * mix + alpha * ab * dpc * P);
  const double omega =
      ((P + N2) * (dpc * ab * P + N1) - dpc * ab * ab * P * P) *
      (N1 * mix + P * alpha * ab * dpc);
  return solve_nc_quadratic(theta, eta, omega);
}

EquivocationPair prop2_rates(double alpha, double gamma, double nc,
                             const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_nc(nc, "nc");
  const double P = p.P, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha, g = gamma;
  const QuadraticNcBound bound = prop2_min_nc(alpha, gamma, p);
  if (g == 0.0) {
    // Every DPC term collapses; the common alpha factor cancels from the
    // subtracted expressions, so this is the independent-inputs scheme
    // (valid at alpha = 0 as well, where the uncancelled forms are 0/0).
    const auto base = prop1_rates(alpha, nc, p);
    return make_rates(base.re1_raw, base.re2_raw, bound.admits(nc));
  }
  const double mix = alpha + g * g * ab;
  const double dpc = (1.0 - g) * (1.0 - g);
  // Marton binning overhead I(V1;V2) = 1/2 log2(1 + gamma^2 * ab/alpha).
  const double binning = half_log2_1p(safe_ratio(g * g * ab, alpha));
  const double re1 =
      half_log2_1p(safe_ratio((ab * g + alpha) * (ab * g + alpha) * P,
                              mix * N1 + dpc * alpha * ab * P)) -
      half_log2_1p(alpha * P / N2) - binning;
  const double re2 =
      half_log2_1p((ab * P * (N1 + nc) + ab * dpc * P * (alpha * P + N2)) /
                   ((alpha * P + N2) * (N1 + nc))) -
      half_log2_1p(safe_ratio(alpha * ab * dpc * P, mix * N1)) - binning;
  return make_rates(re1, re2, bound.admits(nc));
}

NcBound prop3_min_nc(double alpha, double beta, const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  const double P = p.P, a = p.a, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha, bb = 1.0 - beta;
  const double link = a * beta * P;  // helper power devoted to relaying
  if (link <= 0.0) {
    // No relaying power. With alpha == 1 user 2 carries no message and the
    // compression link is unused; otherwise no nc can satisfy the floor.
    return {kInf, ab == 0.0};
  }
  const double num = ab * P * (alpha * P + N2 + a * bb * P) +
                     N1 * (P + N2 + a * bb * P);
  return {num / link, true};
}

EquivocationPair prop3_rates(double alpha, double beta, double nc,
                             const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  check_nc(nc, "nc");
  const double P = p.P, a = p.a, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha, bb = 1.0 - beta;
  const double jammed = a * bb * P + N2;  // user 2 noise floor incl. jamming
  const double re1 = half_log2_1p(alpha * P / (ab * P + N1)) -
                     half_log2_1p(alpha * P / jammed);
  const double re2 =
      half_log2_1p(ab * P * (1.0 / (N1 + nc) + 1.0 / (alpha * P + jammed))) -
      half_log2_1p(ab * P / N1);
  const NcBound bound = prop3_min_nc(alpha, beta, p);
  const bool ok = bound.feasible && nc >= bound.nc_min * (1.0 - 1e-12);
  return make_rates(re1, re2, ok);
}

QuadraticNcBound prop4_min_nc(double alpha, double beta, double gamma,
                              const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  const double P = p.P, a = p.a, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha, bb = 1.0 - beta, g = gamma;
  const double mix = alpha + g * g * ab;
  const double dpc = (1.0 - g) * (1.0 - g);
  const double jam = P + a * bb * P + N2;  // replaces (P + N2) under jamming
  const double theta = a * beta * mix * P;
  const double eta =
      mix * P * (a * beta * N1 + dpc * ab * P * (a * beta + ab)) -
      jam * (N1 * mix + alpha * ab * dpc * P);
  const double omega = (jam * (dpc * ab * P + N1) - dpc * ab * ab * P * P) *
                       (N1 * mix + P * alpha * ab * dpc);
  return solve_nc_quadratic(theta, eta, omega);
}

EquivocationPair prop4_rates(double alpha, double beta, double gamma,
                             double nc, const GaussianCrbcParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  check_nc(nc, "nc");
  const double P = p.P, a = p.a, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha, bb = 1.0 - beta, g = gamma;
  const QuadraticNcBound bound = prop4_min_nc(alpha, beta, gamma, p);
  if (g == 0.0) {
    // DPC terms collapse exactly as in the relay-only schemes.
    const auto base = prop3_rates(alpha, beta, nc, p);
    return make_rates(base.re1_raw, base.re2_raw, bound.admits(nc));
  }
  const double mix = alpha + g * g * ab;
  const double dpc = (1.0 - g) * (1.0 - g);
  const double jammed = alpha * P + a * bb * P + N2;
  const double binning = half_log2_1p(safe_ratio(g * g * ab, alpha));
  const double re1 =
      half_log2_1p(safe_ratio((ab * g + alpha) * (ab * g + alpha) * P,
                              mix * N1 + dpc * alpha * ab * P)) -
      half_log2_1p(alpha * P / (a * bb * P + N2)) - binning;
  const double re2 =
      half_log2_1p((ab * P * (N1 + nc) + ab * dpc * P * jammed) /
                   (jammed * (N1 + nc))) -
      half_log2_1p(safe_ratio(alpha * ab * dpc * P, mix * N1)) - binning;
  return make_rates(re1, re2, bound.admits(nc));
}

std::pair<QuadraticNcBound, QuadraticNcBound> prop5_min_ncs(
    double alpha, double beta1, double beta2,
    const TwoSidedGaussianParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_unit(beta1, "beta1");
  check_unit(beta2, "beta2");
  const double P = p.P, a1 = p.a1, a2 = p.a2, N1 = p.N1, N2 = p.N2;
  const double bb1 = 1.0 - beta1, bb2 = 1.0 - beta2;
  const double jam1 = P + N1 + a2 * bb2 * P;  // user-1 side incl. jamming
  const double jam2 = P + N2 + a1 * bb1 * P;
  const double a11 = a1 * beta1 * P;
  const double b11 = P * (P + a1 * beta1 * (P + N1)) - jam1 * jam2;
  const double c11 = jam1 * (P * N1 + (P + N1) * (N2 + a1 * bb1 * P));
  const double a22 = a2 * beta2 * P;
  const double b22 = P * (P + a2 * beta2 * (P + N2)) - jam1 * jam2;
  const double c22 = jam2 * (P * N2 + (P + N2) * (N1 + a2 * bb2 * P));
  return {solve_nc_quadratic(a11, b11, c11),
          solve_nc_quadratic(a22, b22, c22)};
}

EquivocationPair prop5_rates(double alpha, double beta1, double beta2,
                             double nc1, double nc2,
                             const TwoSidedGaussianParams& p) {
  p.validate();
  check_unit(alpha, "alpha");
  check_unit(beta1, "beta1");
  check_unit(beta2, "beta2");
  check_nc(nc1, "nc1");
  check_nc(nc2, "nc2");
  const double P = p.P, a1 = p.a1, a2 = p.a2, N1 = p.N1, N2 = p.N2;
  const double ab = 1.0 - alpha, bb1 = 1.0 - beta1, bb2 = 1.0 - beta2;
  const double re1 =
      half_log2_1p(alpha * P * (N1 + a2 * bb2 * P + N2 + nc2) /
                   (ab * P * (N1 + a2 * bb2 * P + N2 + nc2) +
                    (N1 + a2 * bb2 * P) * (N2 + nc2))) -
      half_log2_1p(alpha * P *
                   (1.0 / (a1 * bb1 * P + N2) + 1.0 / (N1 + nc1)));
  // Deliberate asymmetries vs re1: the first numerator repeats N2 where the
  // mirror would have N1, and the subtracted term scales with alpha*P
  // rather than ab*P. Both are pinned by the oracle tests.
  const double re2 =
      half_log2_1p(ab * P * (N2 + a1 * bb1 * P + N2 + nc1) /
                   (alpha * P * (N2 + a1 * bb1 * P + N1 + nc1) +
                    (N2 + a1 * bb1 * P) * (N1 + nc1))) -
      half_log2_1p(alpha * P *
                   (1.0 / (a2 * bb2 * P + N1) + 1.0 / (N2 + nc2)));
  const auto [b1, b2] = prop5_min_ncs(alpha, beta1, beta2, p);
  return make_rates(re1, re2, b1.admits(nc1) && b2.admits(nc2));
}

double corollary1_limit(double P, double N1, double N2) {
  check_pnn(P, N1, N2);
  return half_log2_1p(P * (1.0 / N1 + 1.0 / N2)) - half_log2_1p(P / N1);
}

double gaussian_sato_bound(double P, double N1, double N2) {
  // P = 0 is allowed here: the bound degenerates to 0 with no transmit power.
  if (!(P >= 0.0) || !(N1 > 0.0) || !(N2 > 0.0) || !std::isfinite(P) ||
      !std::isfinite(N1) || !std::isfinite(N2))
    throw std::invalid_argument("need P >= 0 and N1, N2 > 0, all finite");
  return half_log2_1p(P * N1 / (N2 * (P + N1)));
}

double jamming_threshold(double P, double N1, double N2) {
  check_pnn(P, N1, N2);
  return std::max(0.0, (N1 - N2) / P);
}

}  // namespace crbc::gaussian
