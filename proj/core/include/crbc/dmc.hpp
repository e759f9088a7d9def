#ifndef CRBC_DMC_HPP
#define CRBC_DMC_HPP

/// Finite-alphabet evaluation of the achievable regions and outer bounds of
/// the cooperative relay broadcast channel with secrecy constraints.
///
/// The channel is a transition tensor p(y1,y2|x,x1) (optionally with a
/// second helper input x2). Achievable regions are evaluated from explicit
/// factored input distributions; outer bounds from user-supplied auxiliary
/// joints or by maximizing over the input simplex.
///
/// Conventions: all information quantities in bits, 0*log(0) = 0, entries
/// below 1e-15 treated as structural zeros. Joint tensors are materialized
/// densely; the product of alphabet sizes is capped (these evaluators are
/// meant for binary/ternary desk-scale alphabets).

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crbc::dmc {

inline constexpr double kProbTol = 1e-9;
inline constexpr double kStructuralZero = 1e-15;
inline constexpr std::size_t kMaxJointCells = 10'000'000;

class InvalidDistribution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Auxiliary-joint input rejected because the required Markov structure
/// does not hold.
class MarkovViolation : public InvalidDistribution {
 public:
  using InvalidDistribution::InvalidDistribution;
};

/// Shannon entropy of a probability vector, in bits. Throws on negative
/// entries or if the vector does not sum to 1 within kProbTol.
double entropy(std::span<const double> dist);

/// Dense joint distribution over a small set of finite variables,
/// identified by axis index.
class Joint {
 public:
  Joint() = default;
  explicit Joint(std::vector<std::size_t> dims);

  std::size_t size() const { return p_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::span<double> values() { return p_; }
  std::span<const double> values() const { return p_; }

  double& at(std::span<const std::size_t> idx);
  std::size_t flat_index(std::span<const std::size_t> idx) const;

  /// Entropy of the marginal over the given axes, in bits.
  double marginal_entropy(std::span<const int> axes) const;

  /// I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C). Axis groups must be
  /// disjoint.
  double cond_mutual_info(std::span<const int> a, std::span<const int> b,
                          std::span<const int> c = {}) const;

  double mutual_info(std::span<const int> a, std::span<const int> b) const {
    return cond_mutual_info(a, b, {});
  }

  /// Throws InvalidDistribution on negative entries or if the total mass
  /// deviates from 1 beyond kProbTol.
  void validate() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<double> p_;
};

/// I(A;B|C) over an explicit joint tensor.
double cond_mutual_info(const Joint& joint, std::span<const int> a,
                        std::span<const int> b, std::span<const int> c = {});

/// Discrete memoryless CRBC: p(y1,y2|x,x1) with layout [x][x1][x2][y1][y2].
/// One-sided channels use nx2 == 1.
struct DmcSpec {
  std::size_t nx = 0, nx1 = 0, nx2 = 1, ny1 = 0, ny2 = 0;
  bool two_sided = false;
  std::vector<double> p;

  static DmcSpec one_sided(std::size_t nx, std::size_t nx1, std::size_t ny1,
                           std::size_t ny2);
  static DmcSpec two_sided_channel(std::size_t nx, std::size_t nx1,
                                   std::size_t nx2, std::size_t ny1,
                                   std::size_t ny2);

  double& trans(std::size_t x, std::size_t x1, std::size_t x2, std::size_t y1,
                std::size_t y2);
  double trans(std::size_t x, std::size_t x1, std::size_t x2, std::size_t y1,
               std::size_t y2) const;

  /// Entries nonnegative, each conditional slice sums to 1 within kProbTol.
  void validate() const;
};

// --- factored achievable-scheme inputs --------------------------------------

/// Input for the one-sided compress-and-forward region:
/// p(v1,v2) p(x|v1,v2) p(x1) p(yh|x1,v1,y1).
struct Theorem1Input {
  std::size_t nv1 = 0, nv2 = 0, nyh = 0;
  std::vector<double> pv1v2;       // [v1][v2]
  std::vector<double> px_given_v;  // [v1][v2][x]
  std::vector<double> px1;         // [x1]
  std::vector<double> pyhat;       // [x1][v1][y1][yh]

  void validate(const DmcSpec& ch) const;
};

/// Input for the jamming-and-relaying region:
/// p(v1,v2) p(x|v1,v2) p(u) p(x1|u) p(yh|u,v1,y1).
struct Theorem4Input {
  std::size_t nv1 = 0, nv2 = 0, nu = 0, nyh = 0;
  std::vector<double> pv1v2;        // [v1][v2]
  std::vector<double> px_given_v;   // [v1][v2][x]
  std::vector<double> pu;           // [u]
  std::vector<double> px1_given_u;  // [u][x1]
  std::vector<double> pyhat;        // [u][v1][y1][yh]

  void validate(const DmcSpec& ch) const;
};

/// Input for the two-sided region:
/// p(v1,v2) p(x|v1,v2) p(u1,x1) p(yh1|u1,y1) p(u2,x2) p(yh2|u2,y2).
struct Theorem5Input {
  std::size_t nv1 = 0, nv2 = 0, nu1 = 0, nu2 = 0, nyh1 = 0, nyh2 = 0;
  std::vector<double> pv1v2;       // [v1][v2]
  std::vector<double> px_given_v;  // [v1][v2][x]
  std::vector<double> pu1x1;       // [u1][x1]
  std::vector<double> pyhat1;      // [u1][y1][yh1]
  std::vector<double> pu2x2;       // [u2][x2]
  std::vector<double> pyhat2;      // [u2][y2][yh2]

  void validate(const DmcSpec& ch) const;
};

/// Values of every bound of an achievable region for one factored input.
/// re1/re2 are the usable equivocation bounds min(rate bound, clamped
/// information bound); the *_raw fields are the information bounds before
/// the positivity clamp.
struct RegionEvaluation {
  double r1 = 0.0;
  double r2 = 0.0;
  double r1_plus_r2 = 0.0;
  double re1_raw = 0.0;
  double re2_raw = 0.0;
  double re1 = 0.0;
  double re2 = 0.0;
  /// Compression-constraint slack, lhs - rhs: satisfied when <= 0.
  double slack1 = 0.0;
  std::optional<double> slack2;  // second link, two-sided only
  bool constraint1_ok = true;
  bool constraint2_ok = true;

  bool constraints_ok() const { return constraint1_ok && constraint2_ok; }
};

RegionEvaluation eval_theorem1(const DmcSpec& ch, const Theorem1Input& in);
RegionEvaluation eval_theorem4(const DmcSpec& ch, const Theorem4Input& in);
RegionEvaluation eval_theorem5(const DmcSpec& ch, const Theorem5Input& in);

// --- outer bounds ------------------------------------------------------------

/// Auxiliary structure for the outer-bound evaluation: a conditional
/// p(u,v1,v2|x,x1) (layout [x][x1][u][v1][v2]) together with an input
/// distribution p(x,x1). The composed joint must satisfy
/// U independent of (X,X1) given (V1,V2); violations are rejected.
struct Theorem2Input {
  std::size_t nu = 0, nv1 = 0, nv2 = 0;
  std::vector<double> aux_given_input;  // [x][x1][u][v1][v2]
  std::vector<double> input;            // [x][x1]

  void validate(const DmcSpec& ch) const;
};

/// One point of the auxiliary outer bound.
struct OuterPoint {
  double re1_tilde = 0.0;  // I(V1;Y1|U) - I(V1;Y2|U)
  double re2_tilde = 0.0;  // I(V2;Y2|U) - I(V2;Y1|U)
  double re1_bar = 0.0;    // I(V1;Y1|V2) - I(V1;Y2|V2)
  double re2_bar = 0.0;    // I(V2;Y2|V1) - I(V2;Y1|V1)
  double r1_bound = 0.0;   // I(V1;Y1|X1)
  double r2_bound = 0.0;   // I(V2;Y2)
};

/// Evaluates the auxiliary outer bound at one user-supplied point.
/// Throws MarkovViolation when U is not independent of (X,X1) given
/// (V1,V2) within kProbTol (total variation per conditional slice).
OuterPoint eval_theorem2_point(const DmcSpec& ch, const Theorem2Input& in);

/// Simple input/output outer bound on user 2's equivocation:
/// I(X;Y2|X1,Y1) under the given input joint p(x,x1).
double eval_theorem3(const DmcSpec& ch, std::span<const double> p_xx1);

struct Theorem3Max {
  double value = 0.0;
  std::vector<double> p_xx1;  // best input found
};

/// Maximizes I(X;Y2|X1,Y1) over the input simplex by enumerating the grid
/// of denominators `resolution` and refining the best point (and any seeds)
/// by coordinate ascent. The result is a certified lower bound on the true
/// maximum; no global-optimality claim is made. Deterministic, including
/// across worker counts: grid shards reduce by (value, lexicographically
/// smallest argmax).
Theorem3Max maximize_theorem3(const DmcSpec& ch, unsigned resolution,
                              std::span<const std::vector<double>> seeds = {});

// --- degradedness ------------------------------------------------------------

/// Whether p(y2|x,x1,y1) is constant in x for every (x1,y1) reachable slice,
/// within kProbTol, i.e. the chain X -> (X1,Y1) -> Y2 holds for every input.
bool is_degraded(const DmcSpec& ch);

/// Mirror test: p(y1|x,x1,y2) constant in x, i.e. X -> (X1,Y2) -> Y1.
bool is_reverse_degraded(const DmcSpec& ch);

/// For reverse-degraded channels the simple outer bound is tight:
/// returns I(X;Y2|X1) - I(X;Y1|X1), which equals I(X;Y2|X1,Y1) under
/// p(x,x1); both forms are computed and must agree within kProbTol.
/// Throws std::invalid_argument if the channel is not reverse degraded.
double secrecy_capacity_reverse_degraded(const DmcSpec& ch,
                                         std::span<const double> p_xx1);

}  // namespace crbc::dmc

#endif  // CRBC_DMC_HPP
