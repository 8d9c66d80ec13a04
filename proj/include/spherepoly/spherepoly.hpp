#pragma once

// Exact-arithmetic algebra of polynomials on high-dimensional spheres:
// spherical/Gaussian/Hermite pairings, rotation generators and the quadratic
// Casimir, harmonic decomposition and the restriction projection L_a, the
// spherical Laplacian and its Hermite-operator limit, zonal/Gegenbauer/
// Hermite orthogonal families, and large-N convergence tables over rationals.

#include "spherepoly/harmonic.hpp"
#include "spherepoly/limits.hpp"
#include "spherepoly/linalg.hpp"
#include "spherepoly/monomial.hpp"
#include "spherepoly/montecarlo.hpp"
#include "spherepoly/operators.hpp"
#include "spherepoly/orthogonal.hpp"
#include "spherepoly/pairing.hpp"
#include "spherepoly/polynomial.hpp"
#include "spherepoly/polynomial_io.hpp"
#include "spherepoly/rational.hpp"
#include "spherepoly/selfcheck.hpp"
#include "spherepoly/sphere_laplacian.hpp"
