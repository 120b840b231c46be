#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covrad/errors.hpp"
#include "covrad/lattice.hpp"
#include "covrad/lattice_width.hpp"
#include "covrad/lonely_runner.hpp"

#include <random>

using namespace covrad;

namespace {

IntVec iv(std::initializer_list<long> xs)
{
    IntVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

VelocityVector vel(std::initializer_list<long> xs)
{
    return normalize_velocities(iv(xs));
}

IntVec sorted_abs_minors(const IntMat& B)
{
    IntVec m = maximal_minor_abs(B);
    std::sort(m.begin(), m.end());
    return m;
}

long count_interior_lattice_points(const HPolytope& P)
{
    const PolytopeBounds bd = bounds(P);
    const Integer r = ceil_rat(bd.beta);
    RatVec lo(2, Rational(-r)), hi(2, Rational(r));
    long count = 0;
    for (const IntVec& z : lattice_points_in_box(lo, hi).points) {
        bool interior = true;
        for (int i = 0; i < P.facets() && interior; ++i) {
            Integer dot = 0;
            for (int j = 0; j < 2; ++j)
                dot += P.A.at(i, j) * z[j];
            if (dot >= P.b[i])
                interior = false;
        }
        if (interior)
            ++count;
    }
    return count;
}

} // namespace

TEST_CASE("velocity normalization")
{
    CHECK(vel({6, 4, 2}).v == iv({1, 2, 3}));
    CHECK(vel({1, 2, 3}).v == iv({1, 2, 3}));
    CHECK(vel({3, 6, 9}).v == iv({1, 2, 3}));
    CHECK_THROWS_AS((void)normalize_velocities(iv({2, 2, 3})), DomainError);
    CHECK_THROWS_AS((void)normalize_velocities(iv({0, 1, 2})), DomainError);
    CHECK_THROWS_AS((void)normalize_velocities(IntVec{}), UsageError);
}

TEST_CASE("pairwise coprime filter")
{
    const CoprimeDispatch d1 = pairwise_coprime_filter(vel({2, 4, 5}));
    CHECK(!d1.coprime);
    CHECK(d1.i == 0);
    CHECK(d1.j == 1);
    CHECK(d1.ell == 2);

    CHECK(pairwise_coprime_filter(vel({1, 2, 3})).coprime);

    const CoprimeDispatch d3 = pairwise_coprime_filter(vel({3, 5, 9}));
    CHECK(!d3.coprime);
    CHECK(d3.ell == 3);
    CHECK(d3.i == 0);
    CHECK(d3.j == 2); // the (3, 9) pair
}

TEST_CASE("triple zonotope construction matches the canonical Euclid witness")
{
    const Zonotope Z = zonotope_from_triple(vel({1, 2, 3}));
    REQUIRE(Z.generators.rows() == 2);
    CHECK(Z.generators.row(0) == iv({2, -1, 0}));
    CHECK(Z.generators.row(1) == iv({3, 0, -1}));

    const Zonotope Z134 = zonotope_from_triple(vel({1, 3, 4}));
    CHECK(Z134.generators.row(0) == iv({3, -1, 0}));
    CHECK(Z134.generators.row(1) == iv({4, 0, -1}));

    CHECK(sorted_abs_minors(zonotope_from_triple(vel({2, 3, 5})).generators) == iv({2, 3, 5}));
}

TEST_CASE("general zonotope construction")
{
    // gcd(v1, v2) > 1 falls back to the kernel basis
    const Zonotope Z = zonotope_from_triple(vel({2, 4, 5}));
    CHECK(sorted_abs_minors(Z.generators) == iv({2, 4, 5}));

    const Zonotope Z4 = zonotope_general(normalize_velocities(iv({1, 2, 3, 4})));
    REQUIRE(Z4.generators.rows() == 3);
    CHECK(sorted_abs_minors(Z4.generators) == iv({1, 2, 3, 4}));
    for (int i = 0; i < 3; ++i) {
        Integer dot = 0;
        for (int j = 0; j < 4; ++j)
            dot += Z4.generators.at(i, j) * (j + 1);
        CHECK(dot == 0);
    }

    // both constructions carry the same covering radius
    const HPolytope Ha = hexagon_hrep(zonotope_from_triple(vel({1, 2, 3})));
    const HPolytope Hb = hexagon_hrep(zonotope_general(vel({1, 2, 3})));
    SearchConfig cfg;
    cfg.mu0_override = make_rational(2, 3);
    CHECK(covering_radius(Ha, cfg).mu == covering_radius(Hb, cfg).mu);
}

TEST_CASE("hexagon H-representation")
{
    const HPolytope H123 = hexagon_hrep(zonotope_from_triple(vel({1, 2, 3})));
    CHECK(convex_polygon_area(vertices(H123)) == 6);
    const HPolytope H135 = hexagon_hrep(zonotope_from_triple(vel({1, 3, 5})));
    CHECK(convex_polygon_area(vertices(H135)) == 9);

    for (const HPolytope& P : {H123, H135}) {
        for (const Integer& bi : P.b)
            CHECK(bi > 0);
        // facets come in +- pairs
        for (int i = 0; i < P.facets(); ++i) {
            bool found = false;
            for (int k = 0; k < P.facets(); ++k) {
                if (P.b[k] != P.b[i])
                    continue;
                bool neg = true;
                for (int j = 0; j < 2; ++j)
                    if (P.A.at(k, j) != -P.A.at(i, j))
                        neg = false;
                if (neg)
                    found = true;
            }
            CHECK(found);
        }
    }

    // parallel generators are rejected
    IntMat G(2, 3);
    G.at(0, 0) = 1;
    G.at(0, 1) = 2;
    G.at(0, 2) = 1;
    G.at(1, 0) = 0;
    G.at(1, 1) = 0;
    G.at(1, 2) = 1;
    CHECK_THROWS_AS((void)hexagon_hrep(Zonotope{G}), DomainError);
}

TEST_CASE("hexagons contain an interior lattice point")
{
    for (auto v : {std::initializer_list<long>{1, 2, 3}, {1, 3, 5}, {2, 5, 7}, {1, 8, 9}}) {
        const HPolytope P = hexagon_hrep(zonotope_from_triple(vel(v)));
        CHECK(count_interior_lattice_points(P) >= 1);
    }
}

TEST_CASE("single triple checks")
{
    const ScanRecord r123 = slrc_check(vel({1, 2, 3}));
    CHECK(r123.mu == make_rational(1, 2));
    CHECK(r123.verdict == Verdict::tight);
    CHECK(r123.width == 3);
    CHECK(verify_certificate(hexagon_hrep(Zonotope{r123.generators}), r123.cert));

    const ScanRecord r125 = slrc_check(vel({1, 2, 5}));
    CHECK(r125.mu == make_rational(3, 7));
    CHECK(r125.verdict == Verdict::passes);

    const ScanRecord r134 = slrc_check(vel({1, 3, 4}));
    CHECK(r134.mu == make_rational(3, 7));
    CHECK(r134.verdict == Verdict::passes);
}

TEST_CASE("spectrum classification")
{
    const Spectrum half = spectrum_classify(make_rational(1, 2));
    CHECK(half.kind == Spectrum::Kind::kravitz);
    CHECK(half.m == 1);
    CHECK(!half.exception);

    const Spectrum k38 = spectrum_classify(make_rational(3, 8));
    CHECK(k38.kind == Spectrum::Kind::kravitz);
    CHECK(k38.m == 5);

    const Spectrum e49 = spectrum_classify(make_rational(4, 9));
    CHECK(e49.kind == Spectrum::Kind::extended);
    CHECK(e49.m == 3);
    CHECK(e49.j == 0);
    CHECK(e49.exception);

    const Spectrum e1541 = spectrum_classify(make_rational(15, 41));
    CHECK(e1541.kind == Spectrum::Kind::extended);
    CHECK(e1541.m == 14);
    CHECK(e1541.j == -1);
    CHECK(e1541.exception);

    const Spectrum e923 = spectrum_classify(make_rational(9, 23));
    CHECK(e923.kind == Spectrum::Kind::extended);
    CHECK(e923.m == 8);
    CHECK(e923.j == -1);

    const Spectrum e512 = spectrum_classify(make_rational(5, 12));
    CHECK(e512.kind == Spectrum::Kind::extended);
    CHECK(e512.m == 4);
    CHECK(e512.j == 0);

    CHECK(spectrum_classify(make_rational(1, 4)).kind == Spectrum::Kind::below_third);
    CHECK(spectrum_classify(make_rational(1, 3)).kind == Spectrum::Kind::below_third);
    CHECK(!spectrum_classify(make_rational(1, 3)).exception);

    CHECK(spectrum_classify(make_rational(2, 5)).m == 3); // 4/10 reduced
}

TEST_CASE("scan up to small sums")
{
    CHECK_THROWS_AS((void)scan(5), UsageError);

    const ScanResult s6 = scan(6);
    REQUIRE(s6.records.size() == 1);
    CHECK(s6.records[0].v.v == iv({1, 2, 3}));

    const ScanResult s9 = scan(9);
    REQUIRE(s9.records.size() == 7);
    // (sum, lex) order
    CHECK(s9.records[0].v.v == iv({1, 2, 3}));
    CHECK(s9.records[1].v.v == iv({1, 2, 4}));
    CHECK(s9.records[2].v.v == iv({1, 2, 5}));
    CHECK(s9.records[3].v.v == iv({1, 3, 4}));
    CHECK(s9.records[4].v.v == iv({1, 2, 6}));
    CHECK(s9.records[5].v.v == iv({1, 3, 5}));
    CHECK(s9.records[6].v.v == iv({2, 3, 4}));

    std::vector<IntVec> survivors;
    for (const ReductionEntry& e : s9.reduction) {
        if (e.status == ReductionStatus::survivor)
            survivors.push_back(e.v.v);
        CHECK(e.status != ReductionStatus::settled_by_volume); // all sums <= 9
    }
    REQUIRE(survivors.size() == 4);
    CHECK(survivors[0] == iv({1, 2, 3}));
    CHECK(survivors[1] == iv({1, 2, 5}));
    CHECK(survivors[2] == iv({1, 3, 4}));
    CHECK(survivors[3] == iv({1, 3, 5}));

    // flatness-type invariants on every record
    for (const ScanRecord& r : s9.records) {
        const Rational w(r.width);
        CHECK(r.mu * w >= 1);
        CHECK(r.mu < 2 / w);
    }
}

TEST_CASE("random unimodular images of hexagons keep the covering radius")
{
    std::mt19937 rng(7041982);
    std::uniform_int_distribution<long> shear(-2, 2);
    std::uniform_int_distribution<long> speed(1, 8);

    int done = 0;
    while (done < 8) {
        IntVec raw{Integer(speed(rng)), Integer(speed(rng)), Integer(speed(rng))};
        VelocityVector v;
        try {
            v = normalize_velocities(raw);
        } catch (const DomainError&) {
            continue; // repeated speeds
        }
        const Zonotope Z = (gcd(v.v[0], v.v[1]) == 1) ? zonotope_from_triple(v)
                                                      : zonotope_general(v);

        // U = [[1, k], [0, 1]] * [[0, -1], [1, 0]]^s applied to the generators
        const long k = shear(rng);
        const bool rot = rng() % 2 == 0;
        IntMat G2(2, 3);
        for (int j = 0; j < 3; ++j) {
            Integer x = Z.generators.at(0, j), y = Z.generators.at(1, j);
            if (rot) {
                Integer t = x;
                x = -y;
                y = t;
            }
            G2.at(0, j) = x + k * y;
            G2.at(1, j) = y;
        }

        const HPolytope P1 = hexagon_hrep(Z);
        const HPolytope P2 = hexagon_hrep(Zonotope{G2});
        SearchConfig c1, c2;
        c1.mu0_override = 2 / lattice_width(P1).width;
        c2.mu0_override = 2 / lattice_width(P2).width;
        CHECK(covering_radius(P1, c1).mu == covering_radius(P2, c2).mu);
        ++done;
    }
}

TEST_CASE("triples beyond the tabulated range still satisfy the bound")
{
    // sums 19 and 20: fresh instances, not frozen anywhere
    const ScanResult s = scan(20);
    const Rational half = make_rational(Integer(1), Integer(2));
    int beyond = 0;
    for (const ScanRecord& r : s.records) {
        if (r.v.sum() < 19)
            continue;
        ++beyond;
        CHECK(r.mu < half); // sum >= 10 already forces strict inequality
        CHECK(r.width >= 3);
        const HPolytope P = hexagon_hrep(Zonotope{r.generators});
        CHECK(verify_certificate(P, r.cert));
    }
    CHECK(beyond > 0);
}

TEST_CASE("scan is deterministic across worker counts")
{
    SearchConfig one, three;
    three.worker_count = 3;
    const ScanResult a = scan(10, one);
    const ScanResult b = scan(10, three);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].v.v == b.records[i].v.v);
        CHECK(a.records[i].mu == b.records[i].mu);
        CHECK(a.records[i].cert.last_covered == b.records[i].cert.last_covered);
    }
}
