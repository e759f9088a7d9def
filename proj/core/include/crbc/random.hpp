#ifndef CRBC_RANDOM_HPP
#define CRBC_RANDOM_HPP

/// Seeded generators for random distributions, channels and factored
/// inputs. Used by the verification suite and as a convenience sampler for
/// outer-bound points; everything is deterministic given the engine state.

#include <cstddef>
#include <random>
#include <vector>

#include "crbc/dmc.hpp"

namespace crbc::random {

using Rng = std::mt19937_64;

/// A point of the probability simplex, drawn by normalizing Exp(1) draws
/// (uniform on the simplex).
std::vector<double> distribution(Rng& rng, std::size_t n);

/// Stack of independent simplex draws: `rows` blocks of `cols`.
std::vector<double> conditional(Rng& rng, std::size_t rows, std::size_t cols);

/// Fully random one-sided channel p(y1,y2|x,x1).
dmc::DmcSpec channel(Rng& rng, std::size_t nx, std::size_t nx1,
                     std::size_t ny1, std::size_t ny2);

/// Degraded channel: p(y1|x,x1) random, y2 drawn from (x1,y1) only, so
/// X -> (X1,Y1) -> Y2 holds by construction.
dmc::DmcSpec degraded_channel(Rng& rng, std::size_t nx, std::size_t nx1,
                              std::size_t ny1, std::size_t ny2);

/// Reverse-degraded channel: p(y2|x,x1) random, y1 drawn from (x1,y2) only.
dmc::DmcSpec reverse_degraded_channel(Rng& rng, std::size_t nx,
                                      std::size_t nx1, std::size_t ny1,
                                      std::size_t ny2);

/// Random valid factored inputs for the achievable-region evaluators.
dmc::Theorem1Input theorem1_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nv1, std::size_t nv2,
                                  std::size_t nyh);
dmc::Theorem4Input theorem4_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nv1, std::size_t nv2,
                                  std::size_t nu, std::size_t nyh);
dmc::Theorem5Input theorem5_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nv1, std::size_t nv2,
                                  std::size_t nu1, std::size_t nu2,
                                  std::size_t nyh1, std::size_t nyh2);

/// Random valid outer-bound auxiliary: drawn as p(v1,v2) p(u|v1,v2)
/// p(x,x1|v1,v2), which satisfies U _|_ (X,X1) | (V1,V2) by construction,
/// then presented as (p(u,v1,v2|x,x1), p(x,x1)).
dmc::Theorem2Input theorem2_input(Rng& rng, const dmc::DmcSpec& ch,
                                  std::size_t nu, std::size_t nv1,
                                  std::size_t nv2);

}  // namespace crbc::random

#endif  // CRBC_RANDOM_HPP
