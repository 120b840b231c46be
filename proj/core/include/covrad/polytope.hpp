#pragma once

#include "covrad/linalg.hpp"
#include "covrad/rational.hpp"

namespace covrad {

// A full-dimensional bounded polytope {x : Ax <= b} with integer data and
// b > 0, i.e. the origin in the interior. Rows are primitive (gcd 1),
// deduplicated, and sorted lexicographically, so equal polytope descriptions
// produce identical facet indexing.
struct HPolytope {
    IntMat A;
    IntVec b;

    int dim() const { return A.cols(); }
    int facets() const { return A.rows(); }
};

struct NormalizeResult {
    HPolytope polytope;
    RatVec translation;       // interior point t; polytope describes P - t
    int duplicate_rows_removed = 0;
};

// Recentre {Ax <= b} at the centroid of its vertex set and clear denominators
// row by row. The covering radius is translation invariant, so the output has
// the same covering radius as the input. Unbounded or lower-dimensional input
// raises DomainError naming a witness direction or the deficient facet.
NormalizeResult normalize(const RatMat& A, const RatVec& b);

// Exact vertex set, lexicographically sorted and duplicate-free. Each vertex
// solves some n-subset of tight facets and satisfies all inequalities.
std::vector<RatVec> vertices(const HPolytope& P);

struct PolytopeBounds {
    Integer inf_norm;  // largest |entry| of A and b
    Rational beta;     // exact max_{x in P} ||x||_inf, attained at a vertex
    Rational beta0;    // min(beta, ||P||_inf^n n!)
    Rational alpha;    // smallest a > 0 with aP a lattice polytope
    Rational mu0;      // n * alpha, an upper bound on the covering radius
};

PolytopeBounds bounds(const HPolytope& P);

// Area of a convex polygon given by an unordered vertex set containing the
// origin in its interior (2D only).
Rational convex_polygon_area(const std::vector<RatVec>& verts);

} // namespace covrad
