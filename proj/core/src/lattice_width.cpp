#include "covrad/lattice_width.hpp"

#include "covrad/errors.hpp"

namespace covrad {

namespace {

Rational spread_along(const IntVec& z, const std::vector<RatVec>& verts)
{
    Rational lo, hi;
    bool first = true;
    for (const RatVec& v : verts) {
        Rational dot(0);
        for (std::size_t j = 0; j < z.size(); ++j)
            dot += Rational(z[j]) * v[j];
        if (first) {
            lo = hi = dot;
            first = false;
        } else {
            if (dot < lo)
                lo = dot;
            if (dot > hi)
                hi = dot;
        }
    }
    return hi - lo;
}

bool canonical_sign(const IntVec& z)
{
    for (const Integer& x : z) {
        if (x > 0)
            return true;
        if (x < 0)
            return false;
    }
    return false; // zero vector
}

} // namespace

WidthResult lattice_width(const HPolytope& P)
{
    const int n = P.dim();
    const std::vector<RatVec> verts = vertices(P);
    if (verts.empty())
        throw InternalError("lattice_width: polytope has no vertices");

    IntVec e1(n, Integer(0));
    e1[0] = 1;
    const Rational w1 = spread_along(e1, verts);

    // Inscribed max-norm ball radius rho = min_i b_i / ||a_i||_1. Any optimal
    // direction z satisfies 2 * rho * ||z||_1 <= w(P, z) <= w(P, e1).
    Rational rho;
    bool first = true;
    for (int i = 0; i < P.facets(); ++i) {
        Integer l1 = 0;
        for (int j = 0; j < n; ++j)
            l1 += abs(P.A.at(i, j));
        const Rational r = make_rational(P.b[i], l1);
        if (first || r < rho) {
            rho = r;
            first = false;
        }
    }
    const Integer radius = floor_rat(w1 / (2 * rho));
    {
        const Integer ball = 2 * radius + 1;
        Integer total;
        mpz_pow_ui(total.get_mpz_t(), ball.get_mpz_t(), static_cast<unsigned long>(n));
        if (!radius.fits_slong_p() || total > 100'000'000)
            throw ResourceError("lattice_width: direction ball holds " + to_string(total) +
                                " candidates; the polytope is too eccentric for the "
                                "exhaustive scan");
    }

    WidthResult best;
    best.width = w1;
    best.direction = e1;
    best.candidates_scanned = 0;

    // Exhaustive scan of the l1 ball, canonical representatives only.
    IntVec z(n);
    const long R = radius.get_si();
    std::vector<long> cur(n, -R);
    while (true) {
        long l1 = 0;
        for (long c : cur)
            l1 += c < 0 ? -c : c;
        if (l1 >= 1 && l1 <= R) {
            for (int j = 0; j < n; ++j)
                z[j] = cur[j];
            if (canonical_sign(z)) {
                ++best.candidates_scanned;
                const Rational w = spread_along(z, verts);
                const int c = cmp(w, best.width);
                if (c < 0 || (c == 0 && colex_cmp(z, best.direction) < 0)) {
                    best.width = w;
                    best.direction = z;
                }
            }
        }
        int k = n - 1;
        while (k >= 0 && cur[k] == R) {
            cur[k] = -R;
            --k;
        }
        if (k < 0)
            break;
        ++cur[k];
    }
    return best;
}

Rational flatness_constant_upper(int n)
{
    if (n < 1)
        throw UsageError("flatness_constant_upper: n must be positive");
    // n^{5/2} = n^2 sqrt(n); bound sqrt(n) from above by ceil(sqrt(n q^2))/q.
    const Integer q = 840;
    Integer nq2 = Integer(n) * q * q;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), nq2.get_mpz_t());
    if (s * s < nq2)
        s += 1;
    return make_rational(Integer(n) * n * s, q);
}

Rational flatness_mu_bound(const HPolytope& P, bool centrally_symmetric_2d)
{
    if (centrally_symmetric_2d && P.dim() != 2)
        throw UsageError("flatness_mu_bound: centrally symmetric flag requires a planar polytope");
    const WidthResult wr = lattice_width(P);
    if (centrally_symmetric_2d)
        return 2 / wr.width;
    return flatness_constant_upper(P.dim()) / wr.width;
}

} // namespace covrad
