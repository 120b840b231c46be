#pragma once

#include "covrad/polytope.hpp"
#include "covrad/rational.hpp"

namespace covrad {

inline constexpr long kDefaultLatticeCap = 10'000'000;

struct LatticePointSet {
    std::vector<IntVec> points; // lexicographically sorted, duplicate-free
    int dim = 0;

    std::size_t size() const { return points.size(); }
};

// Integer box [lo, hi] per axis; empty when lo > hi on some axis.
struct LatticeBox {
    IntVec lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }
    bool empty() const;
    Integer count() const;
    bool contains(const IntVec& z) const;
};

// All z in Z^n with lo <= z <= hi componentwise, lexicographically sorted.
// An empty box yields an empty set; a predicted count above the cap raises
// ResourceError (the message carries the predicted count).
LatticePointSet lattice_points_in_box(const RatVec& lo, const RatVec& hi,
                                      long cap = kDefaultLatticeCap);

// The box behind the candidate set: Z^n cap [-mu0*beta0, 1 + mu0*beta0]^n.
LatticeBox lbar_box(const HPolytope& P, const Rational& mu0, const Rational& beta0);

// Candidate lattice translates used by the covering-radius search. Cardinality
// is at most (2 + 2*beta0*mu0)^n.
LatticePointSet lbar(const HPolytope& P, const Rational& mu0, const Rational& beta0,
                     long cap = kDefaultLatticeCap);

} // namespace covrad
