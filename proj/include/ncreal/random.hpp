// SPDX-License-Identifier: Apache-2.0

#ifndef NCREAL_RANDOM_HPP
#define NCREAL_RANDOM_HPP

#include <random>

#include "ncreal/freepoly.hpp"
#include "ncreal/linalg.hpp"
#include "ncreal/realization.hpp"

namespace ncreal
{

// Seeded generators for demos and property tests. Everything draws from the caller's engine.

/// Haar-like rows x cols isometry (rows >= cols) from the QR factor of a Gaussian matrix.
Matrix random_isometry(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng);

/// Random polynomial with no constant term, at most `terms` words of length 1..max_degree.
FreePoly random_poly(int d, int max_degree, int terms, std::mt19937_64 &rng);

/// Random I x J delta with no constant terms, so that 0 lies in the polyhedron.
DeltaMatrix random_delta(int d, int rows, int cols, int max_degree, std::mt19937_64 &rng);

/// Random isometric colligation; requires delta.rows() <= delta.cols().
Colligation random_colligation(const DeltaMatrix &delta, int m, std::mt19937_64 &rng);

/// The Moebius colligation [[0.5, sqrt(0.75)], [sqrt(0.75), -0.5]] over delta = [x],
/// realizing (0.5 + z) / (1 + 0.5 z).
Colligation moebius_colligation();

/// m = 1, A = 0, B = C = 1, D = 0 over delta = [x]: phi(x) = x.
Colligation identity_colligation();

}  // namespace ncreal

#endif  // NCREAL_RANDOM_HPP
