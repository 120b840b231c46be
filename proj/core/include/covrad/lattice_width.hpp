#pragma once

#include "covrad/polytope.hpp"

namespace covrad {

struct WidthResult {
    Rational width;            // min over z != 0 of max_{x in P} x.z - min_{x in P} x.z
    IntVec direction;          // canonical sign: first nonzero coordinate positive
    long candidates_scanned = 0;
};

// Exact lattice width. The width along e1 bounds the l1-norm of any optimal
// direction via the inscribed max-norm ball of radius min_i b_i / ||a_i||_1;
// that ball is enumerated exhaustively.
WidthResult lattice_width(const HPolytope& P);

// Upper bound on the covering radius via flatness: 2 / w(P) for centrally
// symmetric planar bodies, otherwise an upper rational approximation of
// n^{5/2} divided by w(P).
Rational flatness_mu_bound(const HPolytope& P, bool centrally_symmetric_2d);

// Smallest fraction with denominator dividing 840 that is >= n^{5/2}.
Rational flatness_constant_upper(int n);

} // namespace covrad
