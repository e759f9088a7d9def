#include "crbc/dmc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "crbc/parallel.hpp"

namespace crbc::dmc {

namespace {

double plogp(double p) {
  return p > kStructuralZero ? -p * std::log2(p) : 0.0;
}

void check_probs(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (std::isnan(x) || x < -kProbTol) {
      std::ostringstream os;
      os << what << ": negative probability entry " << x;
      throw InvalidDistribution(os.str());
    }
  }
}

// Each block of `cols` consecutive entries must sum to 1.
void check_rows(std::span<const double> v, std::size_t rows, std::size_t cols,
                const char* what) {
  if (v.size() != rows * cols) {
    std::ostringstream os;
    os << what << ": expected " << rows * cols << " entries, got " << v.size();
    throw InvalidDistribution(os.str());
  }
  check_probs(v, what);
  for (std::size_t r = 0; r < rows; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols; ++c) s += v[r * cols + c];
    if (std::abs(s - 1.0) > kProbTol) {
      std::ostringstream os;
      os << what << ": row " << r << " sums to " << s;
      throw InvalidDistribution(os.str());
    }
  }
}

void check_cells(std::size_t cells) {
  if (cells == 0 || cells > kMaxJointCells)
    throw InvalidDistribution("joint tensor exceeds the cell cap (" +
                              std::to_string(cells) + " cells)");
}

}  // namespace

double entropy(std::span<const double> dist) {
  check_rows(dist, 1, dist.size(), "entropy");
  double h = 0.0;
  for (double p : dist) h += plogp(p);
  return h;
}

Joint::Joint(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  std::size_t cells = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw InvalidDistribution("zero-size axis");
    cells *= d;
  }
  check_cells(cells);
  strides_.assign(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 1;)
    strides_[i - 1] = strides_[i] * dims_[i];
  p_.assign(cells, 0.0);
}

std::size_t Joint::flat_index(std::span<const std::size_t> idx) const {
  std::size_t f = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) f += idx[i] * strides_[i];
  return f;
}

double& Joint::at(std::span<const std::size_t> idx) {
  return p_[flat_index(idx)];
}

double Joint::marginal_entropy(std::span<const int> axes) const {
  if (axes.empty()) return 0.0;
  std::size_t cells = 1;
  for (int a : axes) cells *= dims_[static_cast<std::size_t>(a)];
  std::vector<double> marg(cells, 0.0);

  // Walk the full tensor once with an odometer, accumulating into the
  // marginal slot of the selected axes.
  std::vector<std::size_t> idx(dims_.size(), 0);
  std::vector<std::size_t> mul(axes.size(), 1);
  for (std::size_t k = axes.size(); k-- > 1;)
    mul[k - 1] = mul[k] * dims_[static_cast<std::size_t>(axes[k])];
  for (std::size_t f = 0; f < p_.size(); ++f) {
    std::size_t sub = 0;
    for (std::size_t k = 0; k < axes.size(); ++k)
      sub += idx[static_cast<std::size_t>(axes[k])] * mul[k];
    marg[sub] += p_[f];
    for (std::size_t ax = dims_.size(); ax-- > 0;) {
      if (++idx[ax] < dims_[ax]) break;
      idx[ax] = 0;
    }
  }
  double h = 0.0;
  for (double p : marg) h += plogp(p);
  return h;
}

double Joint::cond_mutual_info(std::span<const int> a, std::span<const int> b,
                               std::span<const int> c) const {
  std::vector<int> ac(a.begin(), a.end());
  ac.insert(ac.end(), c.begin(), c.end());
  std::vector<int> bc(b.begin(), b.end());
  bc.insert(bc.end(), c.begin(), c.end());
  std::vector<int> abc(a.begin(), a.end());
  abc.insert(abc.end(), b.begin(), b.end());
  abc.insert(abc.end(), c.begin(), c.end());
  return marginal_entropy(ac) + marginal_entropy(bc) - marginal_entropy(abc) -
         marginal_entropy(c);
}

void Joint::validate() const {
  check_probs(p_, "joint");
  const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(total - 1.0) > kProbTol)
    throw InvalidDistribution("joint mass " + std::to_string(total));
}

double cond_mutual_info(const Joint& joint, std::span<const int> a,
                        std::span<const int> b, std::span<const int> c) {
  joint.validate();
  return joint.cond_mutual_info(a, b, c);
}

// --- channel -----------------------------------------------------------------

DmcSpec DmcSpec::one_sided(std::size_t nx, std::size_t nx1, std::size_t ny1,
                           std::size_t ny2) {
  DmcSpec ch;
  ch.nx = nx;
  ch.nx1 = nx1;
  ch.nx2 = 1;
  ch.ny1 = ny1;
  ch.ny2 = ny2;
  ch.two_sided = false;
  ch.p.assign(nx * nx1 * ny1 * ny2, 0.0);
  return ch;
}

DmcSpec DmcSpec::two_sided_channel(std::size_t nx, std::size_t nx1,
                                   std::size_t nx2, std::size_t ny1,
                                   std::size_t ny2) {
  DmcSpec ch;
  ch.nx = nx;
  ch.nx1 = nx1;
  ch.nx2 = nx2;
  ch.ny1 = ny1;
  ch.ny2 = ny2;
  ch.two_sided = true;
  ch.p.assign(nx * nx1 * nx2 * ny1 * ny2, 0.0);
  return ch;
}

double& DmcSpec::trans(std::size_t x, std::size_t x1, std::size_t x2,
                       std::size_t y1, std::size_t y2) {
  return p[(((x * nx1 + x1) * nx2 + x2) * ny1 + y1) * ny2 + y2];
}

double DmcSpec::trans(std::size_t x, std::size_t x1, std::size_t x2,
                      std::size_t y1, std::size_t y2) const {
  return p[(((x * nx1 + x1) * nx2 + x2) * ny1 + y1) * ny2 + y2];
}

void DmcSpec::validate() const {
  if (nx == 0 || nx1 == 0 || nx2 == 0 || ny1 == 0 || ny2 == 0)
    throw InvalidDistribution("channel alphabet sizes must be positive");
  check_rows(p, nx * nx1 * nx2, ny1 * ny2, "channel");
}

// --- factored inputs ----------------------------------------------------------

void Theorem1Input::validate(const DmcSpec& ch) const {
  ch.validate();
  if (ch.two_sided)
    throw InvalidDistribution("one-sided factorization on a two-sided channel");
  check_rows(pv1v2, 1, nv1 * nv2, "pv1v2");
  check_rows(px_given_v, nv1 * nv2, ch.nx, "px_given_v");
  check_rows(px1, 1, ch.nx1, "px1");
  check_rows(pyhat, ch.nx1 * nv1 * ch.ny1, nyh, "pyhat");
  check_cells(nv1 * nv2 * ch.nx * ch.nx1 * ch.ny1 * nyh * ch.ny2);
}

void Theorem4Input::validate(const DmcSpec& ch) const {
  ch.validate();
  if (ch.two_sided)
    throw InvalidDistribution("one-sided factorization on a two-sided channel");
  check_rows(pv1v2, 1, nv1 * nv2, "pv1v2");
  check_rows(px_given_v, nv1 * nv2, ch.nx, "px_given_v");
  check_rows(pu, 1, nu, "pu");
  check_rows(px1_given_u, nu, ch.nx1, "px1_given_u");
  check_rows(pyhat, nu * nv1 * ch.ny1, nyh, "pyhat");
  check_cells(nv1 * nv2 * ch.nx * nu * ch.nx1 * ch.ny1 * nyh * ch.ny2);
}

void Theorem5Input::validate(const DmcSpec& ch) const {
  ch.validate();
  check_rows(pv1v2, 1, nv1 * nv2, "pv1v2");
  check_rows(px_given_v, nv1 * nv2, ch.nx, "px_given_v");
  check_rows(pu1x1, 1, nu1 * ch.nx1, "pu1x1");
  check_rows(pyhat1, nu1 * ch.ny1, nyh1, "pyhat1");
  check_rows(pu2x2, 1, nu2 * ch.nx2, "pu2x2");
  check_rows(pyhat2, nu2 * ch.ny2, nyh2, "pyhat2");
  check_cells(nv1 * nv2 * ch.nx * nu1 * ch.nx1 * nu2 * ch.nx2 * ch.ny1 *
              ch.ny2 * nyh1 * nyh2);
}

void Theorem2Input::validate(const DmcSpec& ch) const {
  ch.validate();
  if (ch.two_sided)
    throw InvalidDistribution("outer bound defined for one-sided channels");
  check_rows(input, 1, ch.nx * ch.nx1, "input");
  check_rows(aux_given_input, ch.nx * ch.nx1, nu * nv1 * nv2,
             "aux_given_input");
}

// --- achievable-region evaluators ---------------------------------------------

namespace {

RegionEvaluation finish_region(double r1, double r2, double i12,
                               double leak1, double leak2, double slack1,
                               std::optional<double> slack2) {
  RegionEvaluation ev;
  ev.r1 = r1;
  ev.r2 = r2;
  ev.r1_plus_r2 = r1 + r2 - i12;
  ev.re1_raw = r1 - leak1 - i12;
  ev.re2_raw = r2 - leak2 - i12;
  ev.re1 = std::max(0.0, std::min(r1, std::max(0.0, ev.re1_raw)));
  ev.re2 = std::max(0.0, std::min(r2, std::max(0.0, ev.re2_raw)));
  ev.slack1 = slack1;
  ev.slack2 = slack2;
  ev.constraint1_ok = slack1 <= kProbTol;
  ev.constraint2_ok = !slack2 || *slack2 <= kProbTol;
  return ev;
}

}  // namespace

RegionEvaluation eval_theorem1(const DmcSpec& ch, const Theorem1Input& in) {
  in.validate(ch);
  enum { V1, V2, X, X1, Y1, YH, Y2 };
  Joint j(std::vector<std::size_t>{in.nv1, in.nv2, ch.nx, ch.nx1, ch.ny1,
                                   in.nyh, ch.ny2});
  auto vals = j.values();
  std::size_t f = 0;
  for (std::size_t v1 = 0; v1 < in.nv1; ++v1)
    for (std::size_t v2 = 0; v2 < in.nv2; ++v2) {
      const double pv = in.pv1v2[v1 * in.nv2 + v2];
      for (std::size_t x = 0; x < ch.nx; ++x) {
        const double px = in.px_given_v[(v1 * in.nv2 + v2) * ch.nx + x];
        for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
          const double p1 = in.px1[x1];
          for (std::size_t y1 = 0; y1 < ch.ny1; ++y1)
            for (std::size_t yh = 0; yh < in.nyh; ++yh) {
              const double ph =
                  in.pyhat[((x1 * in.nv1 + v1) * ch.ny1 + y1) * in.nyh + yh];
              for (std::size_t y2 = 0; y2 < ch.ny2; ++y2)
                vals[f++] = pv * px * p1 * ph * ch.trans(x, x1, 0, y1, y2);
            }
        }
      }
    }

  using A = std::initializer_list<int>;
  auto I = [&](A a, A b, A c) { return j.cond_mutual_info(a, b, c); };
  const double r1 = I({V1}, {Y1}, {X1});
  const double r2 = I({V2}, {Y2, YH}, {X1});
  const double i12 = I({V1}, {V2}, {});
  const double leak1 = I({V1}, {Y2, YH}, {V2, X1});
  const double leak2 = I({V2}, {Y1}, {V1, X1});
  const double slack = I({YH}, {Y1}, {X1, V1}) - I({YH, X1}, {Y2}, {});
  return finish_region(r1, r2, i12, leak1, leak2, slack, std::nullopt);
}

RegionEvaluation eval_theorem4(const DmcSpec& ch, const Theorem4Input& in) {
  in.validate(ch);
  enum { V1, V2, X, U, X1, Y1, YH, Y2 };
  Joint j(std::vector<std::size_t>{in.nv1, in.nv2, ch.nx, in.nu, ch.nx1,
                                   ch.ny1, in.nyh, ch.ny2});
  auto vals = j.values();
  std::size_t f = 0;
  for (std::size_t v1 = 0; v1 < in.nv1; ++v1)
    for (std::size_t v2 = 0; v2 < in.nv2; ++v2) {
      const double pv = in.pv1v2[v1 * in.nv2 + v2];
      for (std::size_t x = 0; x < ch.nx; ++x) {
        const double px = in.px_given_v[(v1 * in.nv2 + v2) * ch.nx + x];
        for (std::size_t u = 0; u < in.nu; ++u) {
          const double pu_ = in.pu[u];
          for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
            const double p1 = in.px1_given_u[u * ch.nx1 + x1];
            for (std::size_t y1 = 0; y1 < ch.ny1; ++y1)
              for (std::size_t yh = 0; yh < in.nyh; ++yh) {
                const double ph =
                    in.pyhat[((u * in.nv1 + v1) * ch.ny1 + y1) * in.nyh + yh];
                for (std::size_t y2 = 0; y2 < ch.ny2; ++y2)
                  vals[f++] =
                      pv * px * pu_ * p1 * ph * ch.trans(x, x1, 0, y1, y2);
              }
          }
        }
      }
    }

  using A = std::initializer_list<int>;
  auto I = [&](A a, A b, A c) { return j.cond_mutual_info(a, b, c); };
  const double r1 = I({V1}, {Y1}, {X1});
  const double r2 = I({V2}, {Y2, YH}, {U});
  const double i12 = I({V1}, {V2}, {});
  const double leak1 = I({V1}, {Y2, YH}, {V2, U});
  const double leak2 = I({V2}, {Y1}, {V1, X1});
  const double slack = I({YH}, {Y1}, {X1, V1, U}) - I({YH, U}, {Y2}, {});
  return finish_region(r1, r2, i12, leak1, leak2, slack, std::nullopt);
}

RegionEvaluation eval_theorem5(const DmcSpec& ch, const Theorem5Input& in) {
  in.validate(ch);
  enum { V1, V2, X, U1, X1, U2, X2, Y1, Y2, YH1, YH2 };
  Joint j(std::vector<std::size_t>{in.nv1, in.nv2, ch.nx, in.nu1, ch.nx1,
                                   in.nu2, ch.nx2, ch.ny1, ch.ny2, in.nyh1,
                                   in.nyh2});
  auto vals = j.values();
  std::size_t f = 0;
  for (std::size_t v1 = 0; v1 < in.nv1; ++v1)
    for (std::size_t v2 = 0; v2 < in.nv2; ++v2) {
      const double pv = in.pv1v2[v1 * in.nv2 + v2];
      for (std::size_t x = 0; x < ch.nx; ++x) {
        const double px = in.px_given_v[(v1 * in.nv2 + v2) * ch.nx + x];
        for (std::size_t u1 = 0; u1 < in.nu1; ++u1)
          for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
            const double p1 = in.pu1x1[u1 * ch.nx1 + x1];
            for (std::size_t u2 = 0; u2 < in.nu2; ++u2)
              for (std::size_t x2 = 0; x2 < ch.nx2; ++x2) {
                const double p2 = in.pu2x2[u2 * ch.nx2 + x2];
                for (std::size_t y1 = 0; y1 < ch.ny1; ++y1)
                  for (std::size_t y2 = 0; y2 < ch.ny2; ++y2) {
                    const double pch = ch.trans(x, x1, x2, y1, y2);
                    const double base = pv * px * p1 * p2 * pch;
                    for (std::size_t yh1 = 0; yh1 < in.nyh1; ++yh1) {
                      const double ph1 =
                          in.pyhat1[(u1 * ch.ny1 + y1) * in.nyh1 + yh1];
                      for (std::size_t yh2 = 0; yh2 < in.nyh2; ++yh2)
                        vals[f++] =
                            base * ph1 *
                            in.pyhat2[(u2 * ch.ny2 + y2) * in.nyh2 + yh2];
                    }
                  }
              }
          }
      }
    }

  using A = std::initializer_list<int>;
  auto I = [&](A a, A b, A c) { return j.cond_mutual_info(a, b, c); };
  const double r1 = I({V1}, {Y1, YH2}, {X1, U2});
  const double r2 = I({V2}, {Y2, YH1}, {X2, U1});
  const double i12 = I({V1}, {V2}, {});
  const double leak1 = I({V1}, {Y2, YH1}, {V2, X2, U1});
  const double leak2 = I({V2}, {Y1, YH2}, {V1, X1, U2});
  const double slack1 =
      I({YH1}, {Y1}, {U1, X1, U2}) - I({YH1, U1}, {Y2}, {X2});
  const double slack2 =
      I({YH2}, {Y2}, {U2, X2, U1}) - I({YH2, U2}, {Y1}, {X1});
  return finish_region(r1, r2, i12, leak1, leak2, slack1, slack2);
}

// --- outer bounds --------------------------------------------------------------

OuterPoint eval_theorem2_point(const DmcSpec& ch, const Theorem2Input& in) {
  in.validate(ch);
  const std::size_t nu = in.nu, nv1 = in.nv1, nv2 = in.nv2;
  const std::size_t naux = nu * nv1 * nv2;

  // Joint over (u, v1, v2, x, x1) before the channel.
  std::vector<double> m(naux * ch.nx * ch.nx1, 0.0);
  for (std::size_t x = 0; x < ch.nx; ++x)
    for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
      const double pin = in.input[x * ch.nx1 + x1];
      for (std::size_t k = 0; k < naux; ++k)
        m[k * ch.nx * ch.nx1 + x * ch.nx1 + x1] =
            pin * in.aux_given_input[(x * ch.nx1 + x1) * naux + k];
    }

  // Required structure: U independent of (X,X1) given (V1,V2). Checked as
  // total variation between p(u,x,x1|v1,v2) and p(u|v1,v2) p(x,x1|v1,v2).
  const std::size_t nin = ch.nx * ch.nx1;
  for (std::size_t v1 = 0; v1 < nv1; ++v1)
    for (std::size_t v2 = 0; v2 < nv2; ++v2) {
      double pv = 0.0;
      std::vector<double> pu_v(nu, 0.0), pin_v(nin, 0.0);
      for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t i = 0; i < nin; ++i) {
          const double q = m[((u * nv1 + v1) * nv2 + v2) * nin + i];
          pv += q;
          pu_v[u] += q;
          pin_v[i] += q;
        }
      if (pv <= kStructuralZero) continue;
      double tv = 0.0;
      for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t i = 0; i < nin; ++i)
          tv += std::abs(m[((u * nv1 + v1) * nv2 + v2) * nin + i] / pv -
                         (pu_v[u] / pv) * (pin_v[i] / pv));
      tv *= 0.5;
      if (tv > kProbTol) {
        std::ostringstream os;
        os << "auxiliary joint violates U _|_ (X,X1) | (V1,V2) at (v1,v2)=("
           << v1 << "," << v2 << "), total variation " << tv;
        throw MarkovViolation(os.str());
      }
    }

  enum { U, V1, V2, X, X1, Y1, Y2 };
  Joint j(std::vector<std::size_t>{nu, nv1, nv2, ch.nx, ch.nx1, ch.ny1,
                                   ch.ny2});
  auto vals = j.values();
  std::size_t f = 0;
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t v1 = 0; v1 < nv1; ++v1)
      for (std::size_t v2 = 0; v2 < nv2; ++v2)
        for (std::size_t x = 0; x < ch.nx; ++x)
          for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
            const double base =
                m[((u * nv1 + v1) * nv2 + v2) * nin + x * ch.nx1 + x1];
            for (std::size_t y1 = 0; y1 < ch.ny1; ++y1)
              for (std::size_t y2 = 0; y2 < ch.ny2; ++y2)
                vals[f++] = base * ch.trans(x, x1, 0, y1, y2);
          }

  using A = std::initializer_list<int>;
  auto I = [&](A a, A b, A c) { return j.cond_mutual_info(a, b, c); };
  OuterPoint pt;
  pt.re1_tilde = I({V1}, {Y1}, {U}) - I({V1}, {Y2}, {U});
  pt.re2_tilde = I({V2}, {Y2}, {U}) - I({V2}, {Y1}, {U});
  pt.re1_bar = I({V1}, {Y1}, {V2}) - I({V1}, {Y2}, {V2});
  pt.re2_bar = I({V2}, {Y2}, {V1}) - I({V2}, {Y1}, {V1});
  pt.r1_bound = I({V1}, {Y1}, {X1});
  pt.r2_bound = I({V2}, {Y2}, {});
  return pt;
}

namespace {

// Reusable fast path for I(X;Y2|X1,Y1) under p(x,x1): scratch buffers are
// kept across grid evaluations.
class Theorem3Evaluator {
 public:
  explicit Theorem3Evaluator(const DmcSpec& ch)
      : ch_(ch),
        m_xx1y1_(ch.nx * ch.nx1 * ch.ny1),
        m_x1y1y2_(ch.nx1 * ch.ny1 * ch.ny2),
        m_x1y1_(ch.nx1 * ch.ny1) {}

  double operator()(std::span<const double> p_xx1) {
    std::ranges::fill(m_xx1y1_, 0.0);
    std::ranges::fill(m_x1y1y2_, 0.0);
    std::ranges::fill(m_x1y1_, 0.0);
    const std::size_t ny1 = ch_.ny1, ny2 = ch_.ny2, nx1 = ch_.nx1;
    double h_joint = 0.0;
    for (std::size_t x = 0; x < ch_.nx; ++x)
      for (std::size_t x1 = 0; x1 < nx1; ++x1) {
        const double pin = p_xx1[x * nx1 + x1];
        if (pin <= kStructuralZero) continue;
        for (std::size_t y1 = 0; y1 < ny1; ++y1)
          for (std::size_t y2 = 0; y2 < ny2; ++y2) {
            const double q = pin * ch_.trans(x, x1, 0, y1, y2);
            if (q <= kStructuralZero) continue;
            h_joint += plogp(q);
            m_xx1y1_[(x * nx1 + x1) * ny1 + y1] += q;
            m_x1y1y2_[(x1 * ny1 + y1) * ny2 + y2] += q;
            m_x1y1_[x1 * ny1 + y1] += q;
          }
      }
    double h_a = 0.0, h_b = 0.0, h_c = 0.0;
    for (double p : m_xx1y1_) h_a += plogp(p);
    for (double p : m_x1y1y2_) h_b += plogp(p);
    for (double p : m_x1y1_) h_c += plogp(p);
    return h_a + h_b - h_joint - h_c;
  }

 private:
  const DmcSpec& ch_;
  std::vector<double> m_xx1y1_, m_x1y1y2_, m_x1y1_;
};

// Visits compositions of n over m cells with a fixed first coordinate, in
// lexicographic order of the remaining coordinates.
template <typename Fn>
void visit_compositions(std::vector<double>& point, std::vector<unsigned>& k,
                        std::size_t pos, unsigned remaining, unsigned n,
                        Fn&& fn) {
  if (pos + 1 == k.size()) {
    k[pos] = remaining;
    for (std::size_t i = 0; i < k.size(); ++i)
      point[i] = static_cast<double>(k[i]) / n;
    fn(point, k);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    k[pos] = v;
    visit_compositions(point, k, pos + 1, remaining - v, n, fn);
  }
}

}  // namespace

double eval_theorem3(const DmcSpec& ch, std::span<const double> p_xx1) {
  ch.validate();
  if (ch.two_sided)
    throw std::invalid_argument(
        "the input/output outer bound is defined for one-sided channels");
  check_rows(p_xx1, 1, ch.nx * ch.nx1, "p_xx1");
  Theorem3Evaluator eval(ch);
  return eval(p_xx1);
}

Theorem3Max maximize_theorem3(const DmcSpec& ch, unsigned resolution,
                              std::span<const std::vector<double>> seeds) {
  ch.validate();
  if (ch.two_sided)
    throw std::invalid_argument(
        "the input/output outer bound is defined for one-sided channels");
  if (resolution == 0)
    throw std::invalid_argument("resolution must be positive");
  const std::size_t m = ch.nx * ch.nx1;

  struct Best {
    double value = -1.0;
    std::vector<unsigned> k;
  };
  std::vector<Best> shard_best(resolution + 1);

  // Shard the grid by the first coordinate; merge order is fixed, so the
  // result does not depend on the worker count.
  parallel_for(resolution + 1, [&](std::size_t lo, std::size_t hi) {
    Theorem3Evaluator eval(ch);
    std::vector<double> point(m);
    std::vector<unsigned> k(m);
    for (std::size_t k0 = lo; k0 < hi; ++k0) {
      Best& best = shard_best[k0];
      k[0] = static_cast<unsigned>(k0);
      if (m == 1) {
        point[0] = 1.0;
        if (k0 != resolution) continue;
        best.value = eval(point);
        best.k = k;
        continue;
      }
      visit_compositions(point, k, 1,
                         resolution - static_cast<unsigned>(k0), resolution,
                         [&](const std::vector<double>& pt,
                             const std::vector<unsigned>& comp) {
                           const double v = eval(pt);
                           if (v > best.value) {
                             best.value = v;
                             best.k = comp;
                           }
                         });
    }
  });

  Theorem3Evaluator eval(ch);
  Theorem3Max result;
  result.value = -1.0;
  for (const Best& b : shard_best) {
    if (b.k.empty()) continue;
    if (b.value > result.value) {
      result.value = b.value;
      result.p_xx1.assign(m, 0.0);
      for (std::size_t i = 0; i < m; ++i)
        result.p_xx1[i] = static_cast<double>(b.k[i]) / resolution;
    }
  }

  // Coordinate-ascent refinement from the best grid point and every seed.
  auto refine = [&](std::vector<double> p) {
    double v = eval(p);
    double step = 1.0 / resolution;
    for (int pass = 0; pass < 20; ++pass) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t jj = 0; jj < m; ++jj) {
          if (i == jj) continue;
          const double move = std::min(step, p[i]);
          if (move <= 0.0) continue;
          p[i] -= move;
          p[jj] += move;
          const double cand = eval(p);
          if (cand > v + 1e-15) {
            v = cand;
          } else {
            p[i] += move;
            p[jj] -= move;
          }
        }
      step *= 0.5;
    }
    if (v > result.value) {
      result.value = v;
      result.p_xx1 = std::move(p);
    }
  };

  refine(result.p_xx1);
  for (const auto& s : seeds) {
    check_rows(s, 1, m, "seed");
    refine(s);
  }
  return result;
}

// --- degradedness ---------------------------------------------------------------

namespace {

// Constancy in x of p(yb | x, helper, ya), where ya is the conditioning
// output (y1 for the degraded test, y2 for the reverse test).
bool conditional_constant_in_x(const DmcSpec& ch, bool condition_on_y1) {
  const std::size_t na = condition_on_y1 ? ch.ny1 : ch.ny2;
  const std::size_t nb = condition_on_y1 ? ch.ny2 : ch.ny1;
  std::vector<double> ref(nb), cur(nb);
  for (std::size_t x1 = 0; x1 < ch.nx1; ++x1)
    for (std::size_t x2 = 0; x2 < ch.nx2; ++x2)
      for (std::size_t ya = 0; ya < na; ++ya) {
        bool have_ref = false;
        for (std::size_t x = 0; x < ch.nx; ++x) {
          double pa = 0.0;
          for (std::size_t yb = 0; yb < nb; ++yb) {
            const double q = condition_on_y1 ? ch.trans(x, x1, x2, ya, yb)
                                             : ch.trans(x, x1, x2, yb, ya);
            cur[yb] = q;
            pa += q;
          }
          if (pa <= kStructuralZero) continue;  // unreachable slice for this x
          for (double& q : cur) q /= pa;
          if (!have_ref) {
            ref = cur;
            have_ref = true;
          } else {
            for (std::size_t yb = 0; yb < nb; ++yb)
              if (std::abs(cur[yb] - ref[yb]) > kProbTol) return false;
          }
        }
      }
  return true;
}

}  // namespace

bool is_degraded(const DmcSpec& ch) {
  ch.validate();
  return conditional_constant_in_x(ch, /*condition_on_y1=*/true);
}

bool is_reverse_degraded(const DmcSpec& ch) {
  ch.validate();
  return conditional_constant_in_x(ch, /*condition_on_y1=*/false);
}

double secrecy_capacity_reverse_degraded(const DmcSpec& ch,
                                         std::span<const double> p_xx1) {
  if (!is_reverse_degraded(ch))
    throw std::invalid_argument("channel is not reverse degraded");
  check_rows(p_xx1, 1, ch.nx * ch.nx1, "p_xx1");

  enum { X, X1, Y1, Y2 };
  Joint j(std::vector<std::size_t>{ch.nx, ch.nx1, ch.ny1, ch.ny2});
  auto vals = j.values();
  std::size_t f = 0;
  for (std::size_t x = 0; x < ch.nx; ++x)
    for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
      const double pin = p_xx1[x * ch.nx1 + x1];
      for (std::size_t y1 = 0; y1 < ch.ny1; ++y1)
        for (std::size_t y2 = 0; y2 < ch.ny2; ++y2)
          vals[f++] = pin * ch.trans(x, x1, 0, y1, y2);
    }

  using A = std::initializer_list<int>;
  auto I = [&](A a, A b, A c) { return j.cond_mutual_info(a, b, c); };
  const double difference = I({X}, {Y2}, {X1}) - I({X}, {Y1}, {X1});
  const double direct = I({X}, {Y2}, {X1, Y1});
  if (std::abs(difference - direct) > kProbTol)
    throw InvalidDistribution(
        "reverse-degraded identity violated beyond tolerance");
  return difference;
}

}  // namespace crbc::dmc
