#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "jball/domain.hpp"

namespace jball::gen {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);

/// m punctures in R^n, pairwise at least 0.1 apart, within [-2, 2]^n.
Domain random_punctured(Rng& rng, std::size_t dim, std::size_t m);

/// Upper or lower, left or right half-plane with a random unit normal.
Domain random_half_plane(Rng& rng);

/// n vertices on a circle at random angles (all gaps below π), randomly placed.
Domain random_convex_polygon(Rng& rng, std::size_t n);

/// n-gon with vertices at jittered angles and random radii about `center`;
/// starlike with respect to `center`.
Domain random_star_polygon(Rng& rng, std::size_t n, const Point& center);

/// Chain of k disks, each overlapping the previous one.
Domain random_ball_union(Rng& rng, std::size_t k);

/// A random point of G. Bounded domains use rejection from the bounding box;
/// punctured spaces sample near the punctures; half-spaces near the boundary.
Point sample_interior(const Domain& domain, Rng& rng);

/// One of the five variants, chosen uniformly (punctured in 2D or 3D).
Domain random_domain(Rng& rng);

}  // namespace jball::gen
