#include "crbc/random.hpp"

namespace crbc::random {

std::vector<double> distribution(Rng& rng, std::size_t n) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& x : v) {
    x = exp1(rng) + 1e-9;  // keep full support
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

std::vector<double> conditional(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> v;
  v.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = distribution(rng, cols);
    v.insert(v.end(), row.begin(), row.end());
  }
  return v;
}

dmc::DmcSpec channel(Rng& rng, std::size_t nx, std::size_t nx1,
                     std::size_t ny1, std::size_t ny2) {
  auto ch = dmc::DmcSpec::one_sided(nx, nx1, ny1, ny2);
  ch.p = conditional(rng, nx * nx1, ny1 * ny2);
  return ch;
}

dmc::DmcSpec degraded_channel(Rng& rng, std::size_t nx, std::size_t nx1,
                              std::size_t ny1, std::size_t ny2) {
  auto ch = dmc::DmcSpec::one_sided(nx, nx1, ny1, ny2);
  const auto py1 = conditional(rng, nx * nx1, ny1);        // p(y1|x,x1)
  const auto py2 = conditional(rng, nx1 * ny1, ny2);       // p(y2|x1,y1)
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t x1 = 0; x1 < nx1; ++x1)
      for (std::size_t y1 = 0; y1 < ny1; ++y1)
        for (std::size_t y2 = 0; y2 < ny2; ++y2)
          ch.trans(x, x1, 0, y1, y2) = py1[(x * nx1 + x1) * ny1 + y1] *
                                       py2[(x1 * ny1 + y1) * ny2 + y2];
  return ch;
}

dmc::DmcSpec reverse_degraded_channel(Rng& rng, std::size_t nx,
                                      std::size_t nx1, std::size_t ny1,
                                      std::size_t ny2) {
  auto ch = dmc::DmcSpec::one_sided(nx, nx1, ny1, ny2);
  const auto py2 = conditional(rng, nx * nx1, ny2);        // p(y2|x,x1)
  const auto py1 = conditional(rng, nx1 * ny2, ny1);       // p(y1|x1,y2)
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t x1 = 0; x1 < nx1; ++x1)
      for (std::size_t y1 = 0; y1 < ny1; ++y1)
        for (std::size_t y2 = 0; y2 < ny2; ++y2)
          ch.trans(x, x1, 0, y1, y2) = py2[(x * nx1 + x1) * ny2 + y2] *
                                       py1[(x1 * ny2 + y2) * ny1 + y1];
  return ch;
}

dmc::Theorem1Input theorem1_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nv1, std::size_t nv2,
                                  std::size_t nyh) {
  dmc::Theorem1Input in;
  in.nv1 = nv1;
  in.nv2 = nv2;
  in.nyh = nyh;
  in.pv1v2 = distribution(rng, nv1 * nv2);
  in.px_given_v = conditional(rng, nv1 * nv2, ch.nx);
  in.px1 = distribution(rng, ch.nx1);
  in.pyhat = conditional(rng, ch.nx1 * nv1 * ch.ny1, nyh);
  return in;
}

dmc::Theorem4Input theorem4_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nv1, std::size_t nv2,
                                  std::size_t nu, std::size_t nyh) {
  dmc::Theorem4Input in;
  in.nv1 = nv1;
  in.nv2 = nv2;
  in.nu = nu;
  in.nyh = nyh;
  in.pv1v2 = distribution(rng, nv1 * nv2);
  in.px_given_v = conditional(rng, nv1 * nv2, ch.nx);
  in.pu = distribution(rng, nu);
  in.px1_given_u = conditional(rng, nu, ch.nx1);
  in.pyhat = conditional(rng, nu * nv1 * ch.ny1, nyh);
  return in;
}

dmc::Theorem5Input theorem5_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nv1, std::size_t nv2,
                                  std::size_t nu1, std::size_t nu2,
                                  std::size_t nyh1, std::size_t nyh2) {
  dmc::Theorem5Input in;
  in.nv1 = nv1;
  in.nv2 = nv2;
  in.nu1 = nu1;
  in.nu2 = nu2;
  in.nyh1 = nyh1;
  in.nyh2 = nyh2;
  in.pv1v2 = distribution(rng, nv1 * nv2);
  in.px_given_v = conditional(rng, nv1 * nv2, ch.nx);
  in.pu1x1 = distribution(rng, nu1 * ch.nx1);
  in.pyhat1 = conditional(rng, nu1 * ch.ny1, nyh1);
  in.pu2x2 = distribution(rng, nu2 * ch.nx2);
  in.pyhat2 = conditional(rng, nu2 * ch.ny2, nyh2);
  return in;
}

dmc::Theorem2Input theorem2_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nu, std::size_t nv1,
                                  std::size_t nv2) {
  const std::size_t nin = ch.nx * ch.nx1;
  const auto pv = distribution(rng, nv1 * nv2);
  const auto pu_v = conditional(rng, nv1 * nv2, nu);
  const auto pin_v = conditional(rng, nv1 * nv2, nin);

  // p(u,v1,v2,x,x1) = p(v1,v2) p(u|v1,v2) p(x,x1|v1,v2)
  std::vector<double> input(nin, 0.0);
  std::vector<double> joint(nu * nv1 * nv2 * nin, 0.0);
  for (std::size_t v = 0; v < nv1 * nv2; ++v)
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t i = 0; i < nin; ++i) {
        const double q = pv[v] * pu_v[v * nu + u] * pin_v[v * nin + i];
        joint[(u * nv1 * nv2 + v) * nin + i] = q;
        input[i] += q;
      }

  dmc::Theorem2Input in;
  in.nu = nu;
  in.nv1 = nv1;
  in.nv2 = nv2;
  in.input = input;
  in.aux_given_input.assign(nin * nu * nv1 * nv2, 0.0);
  for (std::size_t i = 0; i < nin; ++i)
    for (std::size_t u = 0; u < nu; ++u)
      for (std::size_t v = 0; v < nv1 * nv2; ++v)
        in.aux_given_input[i * nu * nv1 * nv2 + u * nv1 * nv2 + v] =
            joint[(u * nv1 * nv2 + v) * nin + i] / input[i];
  return in;
}

}  // namespace crbc::random
