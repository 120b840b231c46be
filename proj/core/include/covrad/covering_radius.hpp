#pragma once

#include "covrad/lattice.hpp"
#include "covrad/polytope.hpp"

#include <optional>

namespace covrad {

struct CertificatePair {
    int facet = 0; // row index into the normalized polytope
    IntVec z;
};

// Witness for the computed covering radius. The defining data re-checks
// without trusting the search: the n+1 normalized facet normals are affinely
// independent, each pair satisfies a_i (p - z) = mu * b_i exactly, p lies in
// the unit cube, and no lattice translate from the candidate box contains p
// in the interior of its mu-dilate.
struct Certificate {
    Rational mu;
    RatVec last_covered;
    std::vector<CertificatePair> pairs; // sorted by facet index
    PolytopeBounds bounds_used;         // with the effective mu0 / beta0
    Integer lbar_size;
};

struct SearchConfig {
    std::optional<Rational> mu0_override;
    std::optional<Rational> beta0_override;
    int worker_count = 1;
    long lbar_cap = kDefaultLatticeCap;
    // When false, workers may also prune candidates that tie the shared
    // bound, losing the global lexicographic tie-break on exact ties.
    bool deterministic = true;
    bool allow_large_n = false; // dimensions above 3 only behind this flag
};

// Exact covering radius of a normalized polytope, as the maximum over all
// candidate systems built from n+1 (facet, lattice point) pairs whose
// normalized normals are affinely independent, keeping solutions that lie in
// the unit cube and are not covered by the open dilates. Deterministic for
// every worker count: ties resolve to the lexicographically smallest
// (point, pairs).
Certificate covering_radius(const HPolytope& P, const SearchConfig& cfg = {});

// True iff some z in L puts p strictly inside z + mu * P. Always false for
// mu <= 0.
bool is_covered(const RatVec& p, const Rational& mu, const HPolytope& P,
                const LatticePointSet& L);

// Recomputation-only check of all certificate invariants; never trusts the
// search internals. False means invalid; only a candidate box too large to
// scan raises ResourceError.
bool verify_certificate(const HPolytope& P, const Certificate& cert);

// Independent lower bound: the coverage function maximized over the grid
// (1/q) Z^n intersected with the unit cube. Always at most the covering
// radius, with equality when q is a multiple of every coordinate denominator
// of some last-covered point.
Rational grid_oracle(const HPolytope& P, long q, const SearchConfig& cfg = {});

} // namespace covrad
