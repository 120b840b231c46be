#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covrad/errors.hpp"
#include "covrad/lattice.hpp"
#include "covrad/lonely_runner.hpp"
#include "covrad/polytope.hpp"

using namespace covrad;

namespace {

RatVec rv(std::initializer_list<Rational> xs)
{
    return RatVec(xs);
}

IntVec iv(std::initializer_list<long> xs)
{
    IntVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

HPolytope square()
{
    RatMat A(4, 2);
    RatVec b(4, Rational(1));
    A.at(0, 0) = 2;
    A.at(1, 0) = -2;
    A.at(2, 1) = 2;
    A.at(3, 1) = -2;
    return normalize(A, b).polytope;
}

// Test-only oracle for L_P: in the plane, z + mu0 P meets the unit cube iff z
// lies in the Minkowski sum [0,1]^2 + mu0 (-P), whose facet normals are the
// cube normals together with the negated facet normals of P.
bool in_lp(const HPolytope& P, const Rational& mu0, const IntVec& z)
{
    const auto verts = vertices(P);
    std::vector<RatVec> normals;
    for (int k = 0; k < 2; ++k)
        for (int s : {1, -1}) {
            RatVec n(2, Rational(0));
            n[k] = s;
            normals.push_back(n);
        }
    for (int i = 0; i < P.facets(); ++i)
        normals.push_back(rv({Rational(-P.A.at(i, 0)), Rational(-P.A.at(i, 1))}));

    for (const RatVec& n : normals) {
        // h(cube) + mu0 * h_P(-n)
        Rational h(0);
        for (int k = 0; k < 2; ++k)
            if (n[k] > 0)
                h += n[k];
        bool first = true;
        Rational hp;
        for (const RatVec& v : verts) {
            const Rational d = -(n[0] * v[0] + n[1] * v[1]);
            if (first || d > hp) {
                hp = d;
                first = false;
            }
        }
        h += mu0 * hp;
        if (Rational(n[0] * Rational(z[0]) + n[1] * Rational(z[1])) > h)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("lattice points in boxes")
{
    const auto s1 = lattice_points_in_box(rv({Rational(0), Rational(0)}),
                                          rv({Rational(1), Rational(1)}));
    REQUIRE(s1.size() == 4);
    CHECK(s1.points[0] == iv({0, 0}));
    CHECK(s1.points[1] == iv({0, 1}));
    CHECK(s1.points[2] == iv({1, 0}));
    CHECK(s1.points[3] == iv({1, 1}));

    const auto s2 = lattice_points_in_box(rv({make_rational(-1, 2), make_rational(-1, 2)}),
                                          rv({make_rational(1, 2), make_rational(1, 2)}));
    REQUIRE(s2.size() == 1);
    CHECK(s2.points[0] == iv({0, 0}));

    const auto s3 = lattice_points_in_box(rv({make_rational(-3, 2), Rational(0)}),
                                          rv({make_rational(1, 2), Rational(1)}));
    REQUIRE(s3.size() == 4);
    CHECK(s3.points[0] == iv({-1, 0}));
    CHECK(s3.points[3] == iv({0, 1}));

    // A thin box with no integer point is empty, not an error.
    const auto s4 = lattice_points_in_box(rv({make_rational(1, 4)}), rv({make_rational(3, 4)}));
    CHECK(s4.size() == 0);

    CHECK_THROWS_AS((void)lattice_points_in_box(rv({Rational(1)}), rv({Rational(0)})), UsageError);
}

TEST_CASE("the cap trips with the predicted count")
{
    CHECK_THROWS_WITH_AS((void)lattice_points_in_box(rv({Rational(0), Rational(0)}),
                                                     rv({Rational(200), Rational(200)}), 100),
                         doctest::Contains("40401"), ResourceError);
}

TEST_CASE("lbar is the box form of the candidate set")
{
    const HPolytope P = square();

    // mu0 * beta0 = 1/2 leaves {0,1}^2
    const auto s = lbar(P, Rational(1), make_rational(1, 2));
    REQUIRE(s.size() == 4);
    CHECK(s.points[0] == iv({0, 0}));
    CHECK(s.points[3] == iv({1, 1}));

    // one dimensional: box [-1, 2]
    RatMat A1(2, 1);
    RatVec b1(2, Rational(1));
    A1.at(0, 0) = 2;
    A1.at(1, 0) = -2;
    const HPolytope seg = normalize(A1, b1).polytope;
    const auto s1 = lbar(seg, Rational(2), make_rational(1, 2));
    REQUIRE(s1.size() == 4);
    CHECK(s1.points.front() == iv({-1}));
    CHECK(s1.points.back() == iv({2}));

    CHECK_THROWS_AS((void)lbar(P, Rational(0), Rational(1)), UsageError);
}

TEST_CASE("cardinality bound (2 + 2 beta0 mu0)^n")
{
    const HPolytope P = square();
    for (long num : {1L, 3L, 7L, 12L}) {
        const Rational mu0 = make_rational(num, 3);
        const Rational beta0 = bounds(P).beta;
        const auto s = lbar(P, mu0, beta0);
        const Rational bound = (2 + 2 * beta0 * mu0) * (2 + 2 * beta0 * mu0);
        CHECK(Rational(static_cast<long>(s.size())) <= bound);
    }
}

TEST_CASE("lbar size matches an independent box recount on the hexagon")
{
    const HPolytope hex = hexagon_hrep(zonotope_from_triple(normalize_velocities({1, 2, 3})));
    const PolytopeBounds bd = bounds(hex);
    const auto bar = lbar(hex, bd.mu0, bd.beta0);
    const Rational reach = bd.mu0 * bd.beta0;
    const auto recount = lattice_points_in_box(rv({-reach, -reach}), rv({1 + reach, 1 + reach}));
    CHECK(bar.size() == recount.size());
    CHECK(bar.points == recount.points);
    CHECK(Integer(static_cast<long>(bar.size())) == lbar_box(hex, bd.mu0, bd.beta0).count());
}

TEST_CASE("L_P is contained in lbar on planar instances")
{
    const HPolytope sq = square();
    const HPolytope hex = hexagon_hrep(zonotope_from_triple(normalize_velocities({1, 2, 3})));
    for (const HPolytope& P : {sq, hex}) {
        const PolytopeBounds bd = bounds(P);
        const auto bar = lbar(P, bd.mu0, bd.beta0);
        // Direct reading of the definition over a generous box.
        const Rational reach = bd.mu0 * bd.beta0 + 2;
        const auto all = lattice_points_in_box(rv({-reach, -reach}), rv({reach + 1, reach + 1}));
        std::size_t lp_count = 0;
        for (const IntVec& z : all.points) {
            if (!in_lp(P, bd.mu0, z))
                continue;
            ++lp_count;
            bool in_bar = false;
            for (const IntVec& w : bar.points)
                if (w == z)
                    in_bar = true;
            CHECK(in_bar);
        }
        CHECK(lp_count > 0);
        CHECK(lp_count <= bar.size());
    }
}
