#include "covrad/polytope.hpp"

#include "covrad/errors.hpp"

#include <algorithm>
#include <numeric>

namespace covrad {

namespace {

// Visit all k-subsets of {0, ..., m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F&& visit)
{
    if (k < 0 || k > m)
        return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

bool lex_less(const RatVec& a, const RatVec& b)
{
    return lex_cmp(a, b) < 0;
}

std::vector<RatVec> enumerate_vertices(const RatMat& A, const RatVec& b)
{
    const int m = A.rows(), n = A.cols();
    std::vector<RatVec> verts;
    RatMat sub(n, n);
    RatVec rhs(n);
    for_each_subset(m, n, [&](const std::vector<int>& I) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                sub.at(i, j) = A.at(I[i], j);
            rhs[i] = b[I[i]];
        }
        auto x = solve_square(sub, rhs);
        if (!x)
            return;
        for (int i = 0; i < m; ++i) {
            Rational lhs(0);
            for (int j = 0; j < n; ++j)
                lhs += A.at(i, j) * (*x)[j];
            if (lhs > b[i])
                return;
        }
        verts.push_back(std::move(*x));
    });
    std::sort(verts.begin(), verts.end(), lex_less);
    verts.erase(std::unique(verts.begin(), verts.end(),
                            [](const RatVec& a, const RatVec& b2) { return lex_cmp(a, b2) == 0; }),
                verts.end());
    return verts;
}

IntVec primitive_integer_direction(const RatVec& d)
{
    Integer l = 1;
    for (const Rational& x : d)
        l = lcm(l, x.get_den());
    IntVec out(d.size());
    Integer g = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        out[i] = d[i].get_num() * (l / d[i].get_den());
        g = gcd(g, out[i]);
    }
    if (g > 1)
        for (Integer& x : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

// A nonzero direction of the recession cone {d : Ad <= 0}, if one exists.
// Assumes rank(A) = n, so the cone is pointed and any nonzero cone is
// witnessed by an extreme ray spanned by the kernel of n-1 independent rows.
std::optional<IntVec> recession_direction(const RatMat& A)
{
    const int m = A.rows(), n = A.cols();
    if (n == 1) {
        bool all_nonneg = true, all_nonpos = true;
        for (int i = 0; i < m; ++i) {
            if (A.at(i, 0) > 0)
                all_nonpos = false;
            if (A.at(i, 0) < 0)
                all_nonneg = false;
        }
        if (all_nonpos)
            return IntVec{Integer(1)};
        if (all_nonneg)
            return IntVec{Integer(-1)};
        return std::nullopt;
    }

    std::optional<IntVec> found;
    for_each_subset(m, n - 1, [&](const std::vector<int>& I) {
        if (found)
            return;
        RatMat sub(n - 1, n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n; ++j)
                sub.at(i, j) = A.at(I[i], j);
        if (rank(sub) != n - 1)
            return;
        auto k = kernel_vector(sub);
        if (!k)
            return;
        IntVec d = primitive_integer_direction(*k);
        for (int sign = 0; sign < 2; ++sign) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                Rational lhs(0);
                for (int j = 0; j < n; ++j)
                    lhs += A.at(i, j) * Rational(d[j]);
                if (lhs > 0)
                    ok = false;
            }
            if (ok) {
                found = d;
                return;
            }
            for (Integer& x : d)
                x = -x;
        }
    });
    return found;
}

} // namespace

NormalizeResult normalize(const RatMat& Ain, const RatVec& bin)
{
    if (Ain.rows() != static_cast<int>(bin.size()))
        throw UsageError("normalize: A and b row counts differ");
    const int n = Ain.cols();
    if (n < 1 || Ain.rows() < 1)
        throw UsageError("normalize: empty system");

    // Drop trivial all-zero rows; 0 <= b_i is either vacuous or infeasible.
    RatMat A(0, 0);
    RatVec b;
    {
        std::vector<int> keep;
        for (int i = 0; i < Ain.rows(); ++i) {
            bool zero = true;
            for (int j = 0; j < n; ++j)
                if (Ain.at(i, j) != 0) {
                    zero = false;
                    break;
                }
            if (zero) {
                if (bin[i] < 0)
                    throw DomainError("normalize: row " + std::to_string(i) +
                                      " reads 0 <= " + to_string(bin[i]) + "; polytope is empty");
                continue;
            }
            keep.push_back(i);
        }
        A = RatMat(static_cast<int>(keep.size()), n);
        b.resize(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) {
            for (int j = 0; j < n; ++j)
                A.at(static_cast<int>(i), j) = Ain.at(keep[i], j);
            b[i] = bin[keep[i]];
        }
    }
    if (A.rows() == 0)
        throw DomainError("normalize: no effective inequalities; polytope is unbounded");

    if (rank(A) < n) {
        auto d = kernel_vector(A);
        throw DomainError("normalize: polytope is unbounded along direction " +
                          to_string(primitive_integer_direction(*d)) +
                          " (facet normals have rank < n)");
    }
    if (auto d = recession_direction(A))
        throw DomainError("normalize: polytope is unbounded along direction " + to_string(*d));

    const std::vector<RatVec> verts = enumerate_vertices(A, b);
    if (verts.empty())
        throw DomainError("normalize: polytope is empty");

    RatVec t(n, Rational(0));
    for (const RatVec& v : verts)
        for (int j = 0; j < n; ++j)
            t[j] += v[j];
    for (int j = 0; j < n; ++j)
        t[j] /= Rational(static_cast<long>(verts.size()));

    // b' = b - A t must be strictly positive; a tight facet at the vertex
    // centroid witnesses a lower-dimensional input.
    RatVec b2(b.size());
    for (int i = 0; i < A.rows(); ++i) {
        Rational shift(0);
        for (int j = 0; j < n; ++j)
            shift += A.at(i, j) * t[j];
        b2[i] = b[i] - shift;
        if (b2[i] <= 0)
            throw DomainError("normalize: polytope is not full-dimensional (facet " +
                              std::to_string(i) + " is tight at the vertex centroid)");
    }

    // Clear denominators row by row and make each row primitive.
    std::vector<std::pair<IntVec, Integer>> rows;
    rows.reserve(b2.size());
    for (int i = 0; i < A.rows(); ++i) {
        Integer l = b2[i].get_den();
        for (int j = 0; j < n; ++j)
            l = lcm(l, A.at(i, j).get_den());
        IntVec row(n);
        Integer g = b2[i].get_num() * (l / b2[i].get_den());
        Integer bi = g;
        for (int j = 0; j < n; ++j) {
            row[j] = A.at(i, j).get_num() * (l / A.at(i, j).get_den());
            g = gcd(g, row[j]);
        }
        if (g > 1) {
            for (Integer& x : row)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(bi.get_mpz_t(), bi.get_mpz_t(), g.get_mpz_t());
        }
        rows.emplace_back(std::move(row), std::move(bi));
    }

    auto row_less = [](const std::pair<IntVec, Integer>& x, const std::pair<IntVec, Integer>& y) {
        const int c = lex_cmp(x.first, y.first);
        if (c != 0)
            return c < 0;
        return x.second < y.second;
    };
    std::sort(rows.begin(), rows.end(), row_less);
    const auto new_end = std::unique(rows.begin(), rows.end());
    const int removed = static_cast<int>(std::distance(new_end, rows.end()));
    rows.erase(new_end, rows.end());

    NormalizeResult out;
    out.translation = std::move(t);
    out.duplicate_rows_removed = removed;
    out.polytope.A = IntMat(static_cast<int>(rows.size()), n);
    out.polytope.b.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < n; ++j)
            out.polytope.A.at(static_cast<int>(i), j) = rows[i].first[j];
        out.polytope.b[i] = rows[i].second;
    }
    return out;
}

std::vector<RatVec> vertices(const HPolytope& P)
{
    const int m = P.facets(), n = P.dim();
    RatMat A(m, n);
    RatVec b(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            A.at(i, j) = Rational(P.A.at(i, j));
        b[i] = Rational(P.b[i]);
    }
    return enumerate_vertices(A, b);
}

PolytopeBounds bounds(const HPolytope& P)
{
    const int n = P.dim();
    PolytopeBounds out;

    out.inf_norm = 0;
    for (int i = 0; i < P.facets(); ++i) {
        for (int j = 0; j < n; ++j)
            out.inf_norm = std::max(out.inf_norm, Integer(abs(P.A.at(i, j))));
        out.inf_norm = std::max(out.inf_norm, Integer(abs(P.b[i])));
    }

    const std::vector<RatVec> verts = vertices(P);
    if (verts.empty())
        throw InternalError("bounds: normalized polytope has no vertices");

    out.beta = 0;
    Integer alpha = 1;
    for (const RatVec& v : verts) {
        for (const Rational& x : v) {
            Rational ax = abs(x);
            if (ax > out.beta)
                out.beta = ax;
            alpha = lcm(alpha, x.get_den());
        }
    }
    out.alpha = Rational(alpha);

    // Cramer bound ||P||_inf^n n!; the exact beta is almost always far
    // smaller and is what keeps the candidate set tractable.
    Integer cramer = 1;
    for (int k = 1; k <= n; ++k)
        cramer *= k;
    Integer powinf;
    mpz_pow_ui(powinf.get_mpz_t(), out.inf_norm.get_mpz_t(), static_cast<unsigned long>(n));
    cramer *= powinf;
    out.beta0 = std::min(out.beta, Rational(cramer));

    out.mu0 = Rational(n) * out.alpha;
    return out;
}

Rational convex_polygon_area(const std::vector<RatVec>& verts)
{
    if (verts.size() < 3)
        throw UsageError("convex_polygon_area: need at least 3 vertices");
    for (const RatVec& v : verts)
        if (v.size() != 2)
            throw UsageError("convex_polygon_area: 2D only");

    // Counterclockwise angular order around the interior origin.
    auto half = [](const RatVec& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    auto cross = [](const RatVec& a, const RatVec& b) {
        return Rational(a[0] * b[1] - a[1] * b[0]);
    };
    std::vector<RatVec> ord = verts;
    std::sort(ord.begin(), ord.end(), [&](const RatVec& a, const RatVec& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        return cross(a, b) > 0;
    });

    Rational twice(0);
    for (std::size_t i = 0; i < ord.size(); ++i)
        twice += cross(ord[i], ord[(i + 1) % ord.size()]);
    return abs(twice) / 2;
}

} // namespace covrad
