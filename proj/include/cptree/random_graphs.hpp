#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cptree/graph.hpp"

namespace cptree {

/// Engine used by every randomized routine; seeded explicitly by callers.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits, identical on every platform.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection sampling, platform independent.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Erdos-Renyi G(n, p) with vertex labels "0" .. "n-1".
Graph random_gnp(std::size_t n, double p, Rng& rng);

/// Perturbation concentrated on at most `max_focal` vertices (at least one).
///
/// Every focal vertex either toggles a random subset of its potential edges,
/// is deleted outright, or hands its slot to a fresh vertex attached to random
/// existing vertices. All changed edges touch one of at most `max_focal`
/// vertices, so the removal and addition star numbers are each at most
/// `max_focal`.
Graph perturb_focused(const Graph& g, std::size_t max_focal, Rng& rng);

}  // namespace cptree
