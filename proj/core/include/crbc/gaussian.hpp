#ifndef CRBC_GAUSSIAN_HPP
#define CRBC_GAUSSIAN_HPP

/// Closed-form achievable equivocation rates for the Gaussian cooperative
/// relay broadcast channel
///
///     Y1 = X + Z1,        Y2 = X + X1 + Z2          (single-sided link)
///     Y1 = X + X2 + Z1,   Y2 = X + X1 + Z2          (two-sided link)
///
/// with E[X^2] <= P, E[X1^2] <= aP (resp. a1*P, a2*P), Z_i ~ N(0, N_i).
/// Five scheme families are evaluated:
///
///   prop1  independent inputs, user 1 compress-and-forwards its observation
///   prop2  dirty-paper coding for user 1 on top of prop1
///   prop3  user 1 splits its power between jamming and relaying
///   prop4  DPC variant of prop3
///   prop5  two-sided cooperation, both users jam and relay
///
/// All rates are in bits per channel use (log base 2). Every scheme has a
/// compression-noise floor: the helper's quantized observation must fit
/// through the cooperative link, which lower-bounds the quantization noise
/// variance N_c. Rates are evaluated for any requested N_c and flagged
/// infeasible when the floor is violated.
///
/// All functions are pure and safe to call concurrently.

#include <stdexcept>
#include <utility>

namespace crbc::gaussian {

/// Channel parameters for the single-sided Gaussian CRBC.
struct GaussianCrbcParams {
  double P;   ///< transmitter power, > 0
  double a;   ///< helper power ratio (user 1 power = a*P), >= 0
  double N1;  ///< user-1 noise variance, > 0
  double N2;  ///< user-2 noise variance, > 0

  void validate() const;
};

/// Channel parameters for the two-sided Gaussian CRBC.
struct TwoSidedGaussianParams {
  double P;
  double a1;  ///< user-1 power ratio, >= 0
  double a2;  ///< user-2 power ratio, >= 0
  double N1;
  double N2;

  void validate() const;
};

/// Free parameters of one scheme evaluation. Only the fields a scheme uses
/// are meaningful: alpha for all; beta for prop3/prop4; gamma for
/// prop2/prop4; beta1/beta2 and nc1/nc2 for prop5.
struct SchemeParams {
  double alpha = 0.0;  ///< power split between the users' signals, in [0,1]
  double beta = 1.0;   ///< helper split: beta = 1 pure relaying, 0 pure jamming
  double beta1 = 1.0;
  double beta2 = 1.0;
  double gamma = 0.0;  ///< DPC coefficient, any real
  double nc = 0.0;     ///< compression noise variance, >= 0 (may be +inf)
  double nc1 = 0.0;
  double nc2 = 0.0;
};

/// Achievable equivocation pair. re1/re2 carry the positivity clamp;
/// the *_raw fields keep the unclamped expression values (used by
/// monotonicity checks, which concern the formulas rather than the
/// clamped region boundary).
struct EquivocationPair {
  double re1 = 0.0;
  double re2 = 0.0;
  double re1_raw = 0.0;
  double re2_raw = 0.0;
  bool feasible = true;  ///< compression-noise floor satisfied at the given nc
};

/// Minimum feasible compression noise for the linear-constraint schemes
/// (prop1, prop3). nc_min may be +infinity; `feasible` is false when no
/// nc (finite or not) supports the compression link.
struct NcBound {
  double nc_min = 0.0;
  bool feasible = true;
};

/// Minimum feasible compression noise for the quadratic-constraint schemes
/// (prop2, prop4, prop5 per side). The feasible set is
/// { nc >= 0 : theta*nc^2 + eta*nc - omega >= 0 }, and when theta > 0 the
/// floor is the positive root (-eta + sqrt(eta^2 + 4*theta*omega)) /
/// (2*theta), clamped at 0. A degenerate quadratic (theta ~ 0) falls back
/// to the linear constraint eta*nc >= omega.
struct QuadraticNcBound {
  double theta = 0.0;
  double eta = 0.0;
  double omega = 0.0;
  double nc_min = 0.0;  ///< NaN when infeasible
  bool feasible = true;

  /// Whether a given nc satisfies the constraint (small slack tolerated).
  bool admits(double nc) const;
};

/// Secrecy capacity of the Gaussian wiretap channel from the transmitter to
/// user 1 with user 2 eavesdropping and no cooperation:
/// max(0, 1/2 log2(1 + P/N1) - 1/2 log2(1 + P/N2)).
double wiretap_secrecy(double P, double N1, double N2);

// --- prop1: independent inputs, compress-and-forward ---------------------

/// N_c floor (N2(abP + N1) + P(alpha*ab*P + N1)) / (aP), ab = 1 - alpha.
/// Infeasible when a == 0: the helper has no power for the link.
NcBound prop1_min_nc(double alpha, const GaussianCrbcParams& p);

EquivocationPair prop1_rates(double alpha, double nc,
                             const GaussianCrbcParams& p);

// --- prop2: dirty-paper coding for user 1 ---------------------------------

QuadraticNcBound prop2_min_nc(double alpha, double gamma,
                              const GaussianCrbcParams& p);

EquivocationPair prop2_rates(double alpha, double gamma, double nc,
                             const GaussianCrbcParams& p);

// --- prop3: joint jamming and relaying ------------------------------------

/// Helper power a*beta*P carries the compressed observation, a*(1-beta)*P
/// jams user 2. beta = 1 recovers prop1. At beta = 0 the link carries
/// nothing: infeasible unless alpha == 1, where user 2 gets no message and
/// the link is unused (nc_min = +inf, feasible).
NcBound prop3_min_nc(double alpha, double beta, const GaussianCrbcParams& p);

EquivocationPair prop3_rates(double alpha, double beta, double nc,
                             const GaussianCrbcParams& p);

// --- prop4: DPC + jamming and relaying ------------------------------------

QuadraticNcBound prop4_min_nc(double alpha, double beta, double gamma,
                              const GaussianCrbcParams& p);

EquivocationPair prop4_rates(double alpha, double beta, double gamma,
                             double nc, const GaussianCrbcParams& p);

// --- prop5: two-sided cooperation ------------------------------------------

std::pair<QuadraticNcBound, QuadraticNcBound> prop5_min_ncs(
    double alpha, double beta1, double beta2,
    const TwoSidedGaussianParams& p);

EquivocationPair prop5_rates(double alpha, double beta1, double beta2,
                             double nc1, double nc2,
                             const TwoSidedGaussianParams& p);

// --- limits and outer bounds ------------------------------------------------

/// Limit of user 2's maximum equivocation rate as the helper power ratio
/// a grows without bound:
/// 1/2 log2(1 + P(1/N1 + 1/N2)) - 1/2 log2(1 + P/N1).
double corollary1_limit(double P, double N1, double N2);

/// Sato-type outer bound on user 2's equivocation rate, obtained by handing
/// user 1's observation to user 2. Equals
/// min over s of 1/2 log2(((1-s)^2 P + s^2 N1 + N2) / N2), attained at
/// s = P/(P+N1), which simplifies to 1/2 log2(1 + P*N1/(N2*(P+N1))).
/// Algebraically identical to corollary1_limit.
double gaussian_sato_bound(double P, double N1, double N2);

/// Smallest helper power ratio giving user 1 positive secrecy under full
/// jamming: max(0, (N1 - N2)/P).
double jamming_threshold(double P, double N1, double N2);

}  // namespace crbc::gaussian

#endif  // CRBC_GAUSSIAN_HPP
