#pragma once

#include <cstdint>
#include <random>

#include "snark/multipole.hpp"

namespace snark {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by rejection, identical on every platform.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Random cubic multigraph on n vertices (n even, n >= 2) from the
/// configuration model; pairings with loops are redrawn. May be disconnected.
Graph random_cubic_multigraph(int n, Rng& rng);

/// A random (2,2)-pole: a random cubic multigraph on an even number of vertices
/// in [2, max_vertices] with two distinct edges severed. The four halves are
/// dealt to the connectors either edge-by-edge or across.
Dipole random_two_two_pole(Rng& rng, int max_vertices);

}  // namespace snark
