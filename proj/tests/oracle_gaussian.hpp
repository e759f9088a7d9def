#ifndef CRBC_TESTS_ORACLE_GAUSSIAN_HPP
#define CRBC_TESTS_ORACLE_GAUSSIAN_HPP

// Independent oracle for the Gaussian schemes: builds the covariance of the
// jointly Gaussian variables from each scheme's random-variable selection
// and evaluates the region expressions as conditional mutual informations
// via log-determinants. No code shared with the library implementation.

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

inline double logdet(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double ld = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = m[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= m[i][k] * m[j][k];
      if (i == j) {
        if (!(s > 0.0))
          throw std::runtime_error("oracle covariance not positive definite");
        m[i][i] = std::sqrt(s);
        ld += std::log(s);
      } else {
        m[i][j] = s / m[j][j];
      }
    }
  }
  return ld;
}

// Variables are linear maps of independent zero-mean Gaussian sources.
class GaussianVectors {
 public:
  explicit GaussianVectors(std::vector<double> source_variances)
      : var_(std::move(source_variances)) {}

  void def(const std::string& name, std::vector<double> coeffs) {
    if (coeffs.size() != var_.size())
      throw std::runtime_error("oracle: wrong coefficient count");
    coeff_[name] = std::move(coeffs);
  }

  // I(A;B|C) in bits.
  double cmi(const std::vector<std::string>& a,
             const std::vector<std::string>& b,
             const std::vector<std::string>& c = {}) const {
    auto join = [](std::vector<std::string> x,
                   const std::vector<std::string>& y) {
      x.insert(x.end(), y.begin(), y.end());
      return x;
    };
    const double num = ld(join(a, c)) + ld(join(b, c));
    const double den = ld(join(join(a, b), c)) + ld(c);
    return 0.5 * (num - den) / std::log(2.0);
  }

 private:
  double ld(const std::vector<std::string>& names) const {
    if (names.empty()) return 0.0;
    std::vector<std::vector<double>> cov(names.size(),
                                         std::vector<double>(names.size()));
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = 0; j < names.size(); ++j) {
        const auto& ci = coeff_.at(names[i]);
        const auto& cj = coeff_.at(names[j]);
        double s = 0.0;
        for (std::size_t k = 0; k < var_.size(); ++k)
          s += ci[k] * cj[k] * var_[k];
        cov[i][j] = s;
      }
    return logdet(std::move(cov));
  }

  std::vector<double> var_;
  std::map<std::string, std::vector<double>> coeff_;
};

struct OneSidedRates {
  double re1, re2, slack;
};

// Relay-only schemes: X = U1 + U2, V1 = U1 + gamma*U2, V2 = U2,
// X1 ~ N(0, aP), Yhat1 = (1-gamma) U2 + Z1 + Zc. gamma = 0 gives the
// independent-inputs scheme.
inline OneSidedRates relay_theorem_route(double alpha, double gamma,
                                         double nc, double P, double a,
                                         double N1, double N2) {
  const double ab = 1.0 - alpha;
  GaussianVectors gv({alpha * P, ab * P, a * P, N1, N2, nc});
  //                  U1         U2      X1     Z1  Z2  Zc
  gv.def("V1", {1, gamma, 0, 0, 0, 0});
  gv.def("V2", {0, 1, 0, 0, 0, 0});
  gv.def("X1", {0, 0, 1, 0, 0, 0});
  gv.def("Y1", {1, 1, 0, 1, 0, 0});
  gv.def("Y2", {1, 1, 1, 0, 1, 0});
  gv.def("Yh", {0, 1 - gamma, 0, 1, 0, 1});
  OneSidedRates r;
  r.re1 = gv.cmi({"V1"}, {"Y1"}, {"X1"}) -
          gv.cmi({"V1"}, {"Y2", "Yh"}, {"V2", "X1"}) - gv.cmi({"V1"}, {"V2"});
  r.re2 = gv.cmi({"V2"}, {"Y2", "Yh"}, {"X1"}) -
          gv.cmi({"V2"}, {"Y1"}, {"V1", "X1"}) - gv.cmi({"V1"}, {"V2"});
  r.slack = gv.cmi({"Yh"}, {"Y1"}, {"X1", "V1"}) - gv.cmi({"Yh", "X1"}, {"Y2"});
  return r;
}

// Jamming-and-relaying schemes: X1 = U + Zj with U ~ N(0, a beta P) and
// Zj ~ N(0, a (1-beta) P).
inline OneSidedRates jam_relay_theorem_route(double alpha, double beta,
                                             double gamma, double nc, double P,
                                             double a, double N1, double N2) {
  const double ab = 1.0 - alpha, bb = 1.0 - beta;
  GaussianVectors gv(
      {alpha * P, ab * P, a * beta * P, a * bb * P, N1, N2, nc});
  //   U1         U2      U              Zj          Z1  Z2  Zc
  gv.def("V1", {1, gamma, 0, 0, 0, 0, 0});
  gv.def("V2", {0, 1, 0, 0, 0, 0, 0});
  gv.def("U", {0, 0, 1, 0, 0, 0, 0});
  gv.def("X1", {0, 0, 1, 1, 0, 0, 0});
  gv.def("Y1", {1, 1, 0, 0, 1, 0, 0});
  gv.def("Y2", {1, 1, 1, 1, 0, 1, 0});
  gv.def("Yh", {0, 1 - gamma, 0, 0, 1, 0, 1});
  OneSidedRates r;
  r.re1 = gv.cmi({"V1"}, {"Y1"}, {"X1"}) -
          gv.cmi({"V1"}, {"Y2", "Yh"}, {"V2", "U"}) - gv.cmi({"V1"}, {"V2"});
  r.re2 = gv.cmi({"V2"}, {"Y2", "Yh"}, {"U"}) -
          gv.cmi({"V2"}, {"Y1"}, {"V1", "X1"}) - gv.cmi({"V1"}, {"V2"});
  r.slack = gv.cmi({"Yh"}, {"Y1"}, {"X1", "V1", "U"}) -
            gv.cmi({"Yh", "U"}, {"Y2"});
  return r;
}

struct TwoSidedRates {
  double re1, re2, slack1, slack2;
};

// Two-sided scheme: X_i = U_i + Zt_i, Yhat_i = Y_i + Zc_i.
inline TwoSidedRates two_sided_theorem_route(double alpha, double b1,
                                             double b2, double nc1, double nc2,
                                             double P, double a1, double a2,
                                             double N1, double N2) {
  const double ab = 1.0 - alpha, bb1 = 1.0 - b1, bb2 = 1.0 - b2;
  GaussianVectors gv({alpha * P, ab * P, a1 * b1 * P, a1 * bb1 * P,
                      a2 * b2 * P, a2 * bb2 * P, N1, N2, nc1, nc2});
  //                  V1         V2      U1           Zt1
  //                  U2           Zt2          Z1  Z2  Zc1  Zc2
  gv.def("V1", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  gv.def("V2", {0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  gv.def("U1", {0, 0, 1, 0, 0, 0, 0, 0, 0, 0});
  gv.def("X1", {0, 0, 1, 1, 0, 0, 0, 0, 0, 0});
  gv.def("U2", {0, 0, 0, 0, 1, 0, 0, 0, 0, 0});
  gv.def("X2", {0, 0, 0, 0, 1, 1, 0, 0, 0, 0});
  gv.def("Y1", {1, 1, 0, 0, 1, 1, 1, 0, 0, 0});
  gv.def("Y2", {1, 1, 1, 1, 0, 0, 0, 1, 0, 0});
  gv.def("Yh1", {1, 1, 0, 0, 1, 1, 1, 0, 1, 0});
  gv.def("Yh2", {1, 1, 1, 1, 0, 0, 0, 1, 0, 1});
  TwoSidedRates r;
  r.re1 = gv.cmi({"V1"}, {"Y1", "Yh2"}, {"X1", "U2"}) -
          gv.cmi({"V1"}, {"Y2", "Yh1"}, {"V2", "X2", "U1"}) -
          gv.cmi({"V1"}, {"V2"});
  r.re2 = gv.cmi({"V2"}, {"Y2", "Yh1"}, {"X2", "U1"}) -
          gv.cmi({"V2"}, {"Y1", "Yh2"}, {"V1", "X1", "U2"}) -
          gv.cmi({"V1"}, {"V2"});
  r.slack1 = gv.cmi({"Yh1"}, {"Y1"}, {"U1", "X1", "U2"}) -
             gv.cmi({"Yh1", "U1"}, {"Y2"}, {"X2"});
  r.slack2 = gv.cmi({"Yh2"}, {"Y2"}, {"U2", "X2", "U1"}) -
             gv.cmi({"Yh2", "U2"}, {"Y1"}, {"X1"});
  return r;
}

// Independent long-double transcription of the two-sided displayed
// expressions, exactly as stated (including the asymmetries), used to
// cross-check the double-precision implementation.
inline std::pair<double, double> two_sided_printed_longdouble(
    long double alpha, long double b1, long double b2, long double nc1,
    long double nc2, long double P, long double a1, long double a2,
    long double N1, long double N2) {
  const long double ab = 1.0L - alpha, bb1 = 1.0L - b1, bb2 = 1.0L - b2;
  auto hl = [](long double z) {
    return 0.5L * std::log(1.0L + z) / std::log(2.0L);
  };
  const long double re1 =
      hl(alpha * P * (N1 + a2 * bb2 * P + N2 + nc2) /
         (ab * P * (N1 + a2 * bb2 * P + N2 + nc2) +
          (N1 + a2 * bb2 * P) * (N2 + nc2))) -
      hl(alpha * P * (1.0L / (a1 * bb1 * P + N2) + 1.0L / (N1 + nc1)));
  const long double re2 =
      hl(ab * P * (N2 + a1 * bb1 * P + N2 + nc1) /
         (alpha * P * (N2 + a1 * bb1 * P + N1 + nc1) +
          (N2 + a1 * bb1 * P) * (N1 + nc1))) -
      hl(alpha * P * (1.0L / (a2 * bb2 * P + N1) + 1.0L / (N2 + nc2)));
  return {static_cast<double>(re1), static_cast<double>(re2)};
}

}  // namespace oracle

#endif  // CRBC_TESTS_ORACLE_GAUSSIAN_HPP
