#pragma once

#include "covrad/rational.hpp"

#include <optional>

namespace covrad {

// Dense row-major matrices. Exact arithmetic throughout; no rounding ever.

class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    static RatMat identity(int n);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntVec row(int i) const;
    bool operator==(const IntMat& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> a_;
};

// Unique solution of Mx = rhs when det(M) != 0, nothing when singular.
std::optional<RatVec> solve_square(const RatMat& M, const RatVec& rhs);
std::optional<RatVec> solve_square(const IntMat& M, const IntVec& rhs);

// Exact rank over the rationals.
int rank(const RatMat& M);

Rational det(const RatMat& M);
Integer int_det(const IntMat& M);

// adj(M) with M * adj(M) = det(M) * I.
IntMat adjugate(const IntMat& M);

// Canonical row-style Hermite normal form of a full-row-rank integer matrix:
// pivots positive, zeros below, entries above a pivot reduced into [0, pivot).
IntMat hnf_rows(const IntMat& M);

// Rows form a lattice basis of Z^d intersected with the hyperplane v-perp,
// returned in HNF so the result is independent of the elimination path.
// Requires v != 0 with coprime entries.
IntMat integer_kernel_basis(const IntVec& v);

// |det| of the d maximal minors of a (d-1) x d matrix, ordered by the index
// of the deleted column.
IntVec maximal_minor_abs(const IntMat& B);

// Any nonzero rational kernel vector of M, or nothing if the kernel is {0}.
std::optional<RatVec> kernel_vector(const RatMat& M);

} // namespace covrad
