#include "covrad/linalg.hpp"

#include "covrad/errors.hpp"

#include <algorithm>
#include <utility>

namespace covrad {

RatMat RatMat::identity(int n)
{
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntVec IntMat::row(int i) const
{
    IntVec out(cols_);
    for (int j = 0; j < cols_; ++j)
        out[j] = at(i, j);
    return out;
}

namespace {

// Scale each row by the lcm of its denominators. Row-wise scaling keeps the
// solution set of M x = rhs and the rank; the determinant picks up the
// product of the scales, which the callers track.
Integer row_denominator_lcm(const RatMat& M, const RatVec* rhs, int i)
{
    Integer l = 1;
    for (int j = 0; j < M.cols(); ++j)
        l = lcm(l, M.at(i, j).get_den());
    if (rhs)
        l = lcm(l, (*rhs)[static_cast<std::size_t>(i)].get_den());
    return l;
}

Integer scaled_entry(const Rational& x, const Integer& scale)
{
    return x.get_num() * (scale / x.get_den());
}

} // namespace

Integer int_det(const IntMat& M)
{
    if (M.rows() != M.cols())
        throw UsageError("int_det: matrix not square");
    const int n = M.rows();
    if (n == 0)
        return 1;

    // Bareiss fraction-free elimination; all divisions below are exact.
    IntMat W = M;
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (W.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (W.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(W.at(k, j), W.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = W.at(k, k) * W.at(i, j) - W.at(i, k) * W.at(k, j);
                mpz_divexact(W.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            W.at(i, k) = 0;
        }
        prev = W.at(k, k);
    }
    return sign > 0 ? W.at(n - 1, n - 1) : Integer(-W.at(n - 1, n - 1));
}

Rational det(const RatMat& M)
{
    if (M.rows() != M.cols())
        throw UsageError("det: matrix not square");
    const int n = M.rows();
    IntMat W(n, n);
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        const Integer l = row_denominator_lcm(M, nullptr, i);
        for (int j = 0; j < n; ++j)
            W.at(i, j) = scaled_entry(M.at(i, j), l);
        scale *= l;
    }
    return make_rational(int_det(W), scale);
}

int rank(const RatMat& M)
{
    const int rows = M.rows(), cols = M.cols();
    IntMat W(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Integer l = row_denominator_lcm(M, nullptr, i);
        for (int j = 0; j < cols; ++j)
            W.at(i, j) = scaled_entry(M.at(i, j), l);
    }

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (W.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(W.at(r, j), W.at(piv, j));
        for (int i = r + 1; i < rows; ++i) {
            if (W.at(i, c) == 0)
                continue;
            // row_i := pivot * row_i - coef * row_r, then strip the gcd to
            // keep the entries from blowing up.
            Integer coef = W.at(i, c);
            Integer g = 0;
            for (int j = c; j < cols; ++j) {
                W.at(i, j) = W.at(r, c) * W.at(i, j) - coef * W.at(r, j);
                g = gcd(g, W.at(i, j));
            }
            if (g > 1)
                for (int j = c; j < cols; ++j)
                    mpz_divexact(W.at(i, j).get_mpz_t(), W.at(i, j).get_mpz_t(), g.get_mpz_t());
        }
        ++r;
    }
    return r;
}

std::optional<RatVec> solve_square(const RatMat& M, const RatVec& rhs)
{
    if (M.rows() != M.cols())
        throw UsageError("solve_square: matrix not square");
    const int n = M.rows();
    if (static_cast<int>(rhs.size()) != n)
        throw UsageError("solve_square: rhs dimension mismatch");

    IntMat W(n, n);
    IntVec r(n);
    for (int i = 0; i < n; ++i) {
        const Integer l = row_denominator_lcm(M, &rhs, i);
        for (int j = 0; j < n; ++j)
            W.at(i, j) = scaled_entry(M.at(i, j), l);
        r[i] = scaled_entry(rhs[i], l);
    }
    return solve_square(W, r);
}

std::optional<RatVec> solve_square(const IntMat& M, const IntVec& rhs)
{
    if (M.rows() != M.cols())
        throw UsageError("solve_square: matrix not square");
    const int n = M.rows();
    if (static_cast<int>(rhs.size()) != n)
        throw UsageError("solve_square: rhs dimension mismatch");

    const Integer D = int_det(M);
    if (D == 0)
        return std::nullopt;
    // Cramer's rule.
    RatVec x(n);
    for (int k = 0; k < n; ++k) {
        IntMat Mk = M;
        for (int i = 0; i < n; ++i)
            Mk.at(i, k) = rhs[i];
        x[k] = make_rational(int_det(Mk), D);
    }
    return x;
}

IntMat adjugate(const IntMat& M)
{
    if (M.rows() != M.cols())
        throw UsageError("adjugate: matrix not square");
    const int n = M.rows();
    IntMat adj(n, n);
    if (n == 0)
        return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    IntMat minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // adj[i][j] = (-1)^{i+j} det(M without row j, column i)
            int mi = 0;
            for (int r = 0; r < n; ++r) {
                if (r == j)
                    continue;
                int mj = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == i)
                        continue;
                    minor.at(mi, mj) = M.at(r, c);
                    ++mj;
                }
                ++mi;
            }
            Integer d = int_det(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? d : Integer(-d);
        }
    }
    return adj;
}

IntMat hnf_rows(const IntMat& M)
{
    const int rows = M.rows(), cols = M.cols();
    IntMat W = M;

    auto combine_rows = [&](int r, int i, int c) {
        // Unimodular 2x2 combination putting gcd(W[r][c], W[i][c]) at (r, c).
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   W.at(r, c).get_mpz_t(), W.at(i, c).get_mpz_t());
        Integer a_over_g = W.at(r, c) / g;
        Integer b_over_g = W.at(i, c) / g;
        for (int j = 0; j < cols; ++j) {
            Integer wr = W.at(r, j), wi = W.at(i, j);
            W.at(r, j) = s * wr + t * wi;
            W.at(i, j) = a_over_g * wi - b_over_g * wr;
        }
    };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (W.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(W.at(r, j), W.at(piv, j));
        for (int i = r + 1; i < rows; ++i)
            if (W.at(i, c) != 0)
                combine_rows(r, i, c);
        if (W.at(r, c) < 0)
            for (int j = 0; j < cols; ++j)
                W.at(r, j) = -W.at(r, j);
        // Reduce the entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            if (W.at(i, c) == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), W.at(i, c).get_mpz_t(), W.at(r, c).get_mpz_t());
            if (q != 0)
                for (int j = 0; j < cols; ++j)
                    W.at(i, j) -= q * W.at(r, j);
        }
        ++r;
    }
    if (r != rows)
        throw UsageError("hnf_rows: matrix does not have full row rank");
    return W;
}

IntMat integer_kernel_basis(const IntVec& v)
{
    const int d = static_cast<int>(v.size());
    if (d == 0)
        throw UsageError("integer_kernel_basis: empty vector");
    Integer g = 0;
    for (const Integer& x : v)
        g = gcd(g, x);
    if (g == 0)
        throw DomainError("integer_kernel_basis: zero vector has no kernel basis");
    if (g != 1)
        throw DomainError("integer_kernel_basis: vector is not primitive (gcd = " + to_string(g) + ")");

    // Build a unimodular U with U v = e1; rows 2..d of U are then a basis of
    // the lattice of integer vectors orthogonal to v.
    IntMat U(d, d);
    for (int i = 0; i < d; ++i)
        U.at(i, i) = 1;
    IntVec w = v;
    for (int i = 1; i < d; ++i) {
        if (w[i] == 0)
            continue;
        Integer gi, s, t;
        mpz_gcdext(gi.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   w[0].get_mpz_t(), w[i].get_mpz_t());
        Integer a_over_g = w[0] / gi;
        Integer b_over_g = w[i] / gi;
        for (int j = 0; j < d; ++j) {
            Integer u0 = U.at(0, j), ui = U.at(i, j);
            U.at(0, j) = s * u0 + t * ui;
            U.at(i, j) = a_over_g * ui - b_over_g * u0;
        }
        w[0] = gi;
        w[i] = 0;
    }

    IntMat B(d - 1, d);
    for (int i = 1; i < d; ++i)
        for (int j = 0; j < d; ++j)
            B.at(i - 1, j) = U.at(i, j);
    if (d == 1)
        return B;
    return hnf_rows(B);
}

IntVec maximal_minor_abs(const IntMat& B)
{
    if (B.rows() + 1 != B.cols())
        throw UsageError("maximal_minor_abs: expected a (d-1) x d matrix");
    const int d = B.cols();
    IntVec out(d);
    IntMat sub(d - 1, d - 1);
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < d - 1; ++i) {
            int jj = 0;
            for (int j = 0; j < d; ++j) {
                if (j == k)
                    continue;
                sub.at(i, jj++) = B.at(i, j);
            }
        }
        out[k] = abs(int_det(sub));
    }
    return out;
}

std::optional<RatVec> kernel_vector(const RatMat& M)
{
    const int rows = M.rows(), cols = M.cols();
    RatMat W = M;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (W.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(W.at(r, j), W.at(piv, j));
        const Rational p = W.at(r, c);
        for (int j = c; j < cols; ++j)
            W.at(r, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || W.at(i, c) == 0)
                continue;
            const Rational f = W.at(i, c);
            for (int j = c; j < cols; ++j)
                W.at(i, j) -= f * W.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (static_cast<int>(pivot_col.size()) == cols)
        return std::nullopt;

    // First free column; set it to 1 and back-substitute.
    int free_col = 0;
    while (free_col < cols &&
           std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
        ++free_col;
    RatVec x(cols, Rational(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = -W.at(static_cast<int>(i), free_col);
    return x;
}

} // namespace covrad
