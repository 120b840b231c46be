#include "covrad/lattice.hpp"

#include "covrad/errors.hpp"

namespace covrad {

bool LatticeBox::empty() const
{
    for (std::size_t k = 0; k < lo.size(); ++k)
        if (lo[k] > hi[k])
            return true;
    return lo.empty();
}

Integer LatticeBox::count() const
{
    if (empty())
        return 0;
    Integer c = 1;
    for (std::size_t k = 0; k < lo.size(); ++k)
        c *= hi[k] - lo[k] + 1;
    return c;
}

bool LatticeBox::contains(const IntVec& z) const
{
    if (z.size() != lo.size())
        return false;
    for (std::size_t k = 0; k < lo.size(); ++k)
        if (z[k] < lo[k] || z[k] > hi[k])
            return false;
    return true;
}

namespace {

LatticePointSet enumerate_box(const LatticeBox& box, long cap)
{
    LatticePointSet out;
    out.dim = box.dim();
    if (box.empty())
        return out;
    const Integer total = box.count();
    if (total > cap)
        throw ResourceError("lattice point cap exceeded: box holds " + to_string(total) +
                            " points, cap is " + std::to_string(cap));
    out.points.reserve(static_cast<std::size_t>(total.get_ui()));

    // Odometer with axis 0 most significant: emits points in lex order.
    IntVec z = box.lo;
    const int n = box.dim();
    while (true) {
        out.points.push_back(z);
        int k = n - 1;
        while (k >= 0 && z[k] == box.hi[k]) {
            z[k] = box.lo[k];
            --k;
        }
        if (k < 0)
            break;
        ++z[k];
    }
    return out;
}

} // namespace

LatticePointSet lattice_points_in_box(const RatVec& lo, const RatVec& hi, long cap)
{
    if (lo.size() != hi.size())
        throw UsageError("lattice_points_in_box: dimension mismatch");
    LatticeBox box;
    box.lo.resize(lo.size());
    box.hi.resize(hi.size());
    for (std::size_t k = 0; k < lo.size(); ++k) {
        if (lo[k] > hi[k])
            throw UsageError("lattice_points_in_box: lo > hi on axis " + std::to_string(k));
        box.lo[k] = ceil_rat(lo[k]);
        box.hi[k] = floor_rat(hi[k]);
    }
    return enumerate_box(box, cap);
}

LatticeBox lbar_box(const HPolytope& P, const Rational& mu0, const Rational& beta0)
{
    if (mu0 <= 0 || beta0 <= 0)
        throw UsageError("lbar: mu0 and beta0 must be positive");
    const int n = P.dim();
    const Rational reach = mu0 * beta0;
    LatticeBox box;
    box.lo.assign(n, ceil_rat(Rational(-reach)));
    box.hi.assign(n, floor_rat(Rational(1 + reach)));
    return box;
}

LatticePointSet lbar(const HPolytope& P, const Rational& mu0, const Rational& beta0, long cap)
{
    return enumerate_box(lbar_box(P, mu0, beta0), cap);
}

} // namespace covrad
