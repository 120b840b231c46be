#pragma once

#include "covrad/covering_radius.hpp"
#include "covrad/polytope.hpp"

#include <string>

namespace covrad {

// Strictly increasing positive integer speeds with overall gcd 1.
struct VelocityVector {
    IntVec v;

    int d() const { return static_cast<int>(v.size()); }
    Integer sum() const;
};

// Sort ascending, divide by the overall gcd; repeated speeds are a domain
// error (the problem requires pairwise distinct velocities).
VelocityVector normalize_velocities(const IntVec& raw);

struct CoprimeDispatch {
    bool coprime = true;
    int i = -1, j = -1; // offending pair (indices into v), when !coprime
    Integer ell;        // shared factor > 1
};

// For d = 3: a pair sharing a factor settles the conjecture for the triple
// without any covering radius computation.
CoprimeDispatch pairwise_coprime_filter(const VelocityVector& v);

// Generators of the lattice zonotope associated with a velocity vector,
// stored as the columns of a (d-1) x d integer matrix whose rows span the
// integer kernel of v. The absolute maximal minors equal the velocities.
struct Zonotope {
    IntMat generators;

    int d() const { return generators.cols(); }
};

// The explicit triple construction: rows (v2, -v1, 0) and (kappa, lambda, -1)
// with v3 = kappa*v1 + lambda*v2 obtained from the extended Euclidean
// algorithm, using the smallest non-negative inverse of v1 modulo v2.
// Requires gcd(v1, v2) = 1; otherwise falls back to zonotope_general.
Zonotope zonotope_from_triple(const VelocityVector& v);

// Kernel-basis construction, any d >= 2; canonical via Hermite normal form.
Zonotope zonotope_general(const VelocityVector& v);

// Centered hexagon Z_v - (u1+u2+u3)/2 as a normalized H-polytope (d = 3).
HPolytope hexagon_hrep(const Zonotope& Z);

enum class Verdict { passes, tight, fails };
std::string verdict_str(Verdict v);

// Where a covering radius sits relative to the loneliness spectrum for three
// runners: mu <= 1/3, the original family (m+1)/(3m+1), or the extended
// families (m+1)/(3m+j) with j in {-1, 0}. Values of the extended families
// and anything outside them count as exceptions to the original form.
struct Spectrum {
    enum class Kind { below_third, kravitz, extended, exceptional };

    Kind kind = Kind::exceptional;
    long m = 0;
    int j = 0;
    bool exception = true;

    std::string str() const;
};

Spectrum spectrum_classify(const Rational& mu);

struct ScanRecord {
    VelocityVector v;
    IntMat generators;
    Rational mu;
    Integer width;
    Verdict verdict = Verdict::passes;
    Spectrum spectrum;
    Certificate cert; // retained for cross-checks; not part of table output
};

// Full check of one triple: build the hexagon, compute the exact covering
// radius with mu0 = 2 / width, classify. Asserts the width >= 3 invariant.
ScanRecord slrc_check(const VelocityVector& v, const SearchConfig& cfg = {});

enum class ReductionStatus { dismissed_coprime, settled_by_volume, survivor };

struct ReductionEntry {
    VelocityVector v;
    ReductionStatus status = ReductionStatus::survivor;
    int pair_i = -1, pair_j = -1;
    Integer ell;
};

struct ScanResult {
    std::vector<ScanRecord> records;      // sorted by (sum, lexicographic triple)
    std::vector<ReductionEntry> reduction; // same order
};

// Every strictly increasing triple with gcd 1 and v1+v2+v3 <= sum_limit,
// with a full record each, plus the reduction view: triples dismissed by the
// pairwise-coprime argument, triples settled by the volume bound (sum >= 10),
// and the survivors. Triples are dispatched to cfg.worker_count workers.
ScanResult scan(long sum_limit, const SearchConfig& cfg = {});

} // namespace covrad
