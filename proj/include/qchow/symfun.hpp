#pragma once

#include "qchow/sparse_poly.hpp"

namespace qchow {

// Polynomial in c1, c2, c3, h (weights 1, 2, 3, 1).
using ChernPoly = SparsePoly;

// Invariance under every permutation of l1, l2, l3 (h fixed).
bool is_symmetric(const SparsePoly& p);

// Rewrites a symmetric polynomial through c1 = -(l1+l2+l3), c2 = e2,
// c3 = -l1*l2*l3.  Throws NotSymmetric.
ChernPoly to_chern(const SparsePoly& p);

// Inverse substitution back into the l variables.
SparsePoly from_chern(const ChernPoly& c);

}  // namespace qchow
