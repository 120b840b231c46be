#include "covrad/covering_radius.hpp"
#include "covrad/lattice_width.hpp"
#include "covrad/lonely_runner.hpp"

#include <benchmark/benchmark.h>

using namespace covrad;

namespace {

HPolytope hexagon(long a, long b, long c)
{
    return hexagon_hrep(zonotope_from_triple(
        normalize_velocities(IntVec{Integer(a), Integer(b), Integer(c)})));
}

HPolytope cube(int n)
{
    RatMat A(2 * n, n);
    RatVec rhs(2 * n, Rational(1));
    for (int k = 0; k < n; ++k) {
        A.at(2 * k, k) = 2;
        A.at(2 * k + 1, k) = -2;
    }
    return normalize(A, rhs).polytope;
}

HPolytope simplex(int n)
{
    RatMat A(n + 1, n);
    RatVec b(n + 1);
    for (int k = 0; k < n; ++k) {
        A.at(k, k) = -1;
        A.at(n, k) = 1;
    }
    b[n] = 1;
    return normalize(A, b).polytope;
}

SearchConfig tight_config(const HPolytope& P)
{
    SearchConfig cfg;
    cfg.mu0_override = flatness_mu_bound(P, true);
    return cfg;
}

void BM_Hexagon123_FlatnessBound(benchmark::State& state)
{
    const HPolytope P = hexagon(1, 2, 3);
    const SearchConfig cfg = tight_config(P);
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_radius(P, cfg));
}
BENCHMARK(BM_Hexagon123_FlatnessBound);

// Same instance with the generic mu0 = n * alpha bound; the gap measures how
// much the candidate box grows when only the crude bounds are available.
void BM_Hexagon123_DefaultBounds(benchmark::State& state)
{
    const HPolytope P = hexagon(1, 2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_radius(P));
}
BENCHMARK(BM_Hexagon123_DefaultBounds);

void BM_Hexagon257(benchmark::State& state)
{
    const HPolytope P = hexagon(2, 5, 7);
    const SearchConfig cfg = tight_config(P);
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_radius(P, cfg));
}
BENCHMARK(BM_Hexagon257);

void BM_Hexagon189(benchmark::State& state)
{
    const HPolytope P = hexagon(1, 8, 9);
    const SearchConfig cfg = tight_config(P);
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_radius(P, cfg));
}
BENCHMARK(BM_Hexagon189);

void BM_Square(benchmark::State& state)
{
    const HPolytope P = cube(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_radius(P));
}
BENCHMARK(BM_Square);

void BM_Simplex2(benchmark::State& state)
{
    const HPolytope P = simplex(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_radius(P));
}
BENCHMARK(BM_Simplex2);

void BM_Simplex3(benchmark::State& state)
{
    const HPolytope P = simplex(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(covering_radius(P));
}
BENCHMARK(BM_Simplex3);

void BM_LatticeWidth_Hexagon189(benchmark::State& state)
{
    const HPolytope P = hexagon(1, 8, 9);
    for (auto _ : state)
        benchmark::DoNotOptimize(lattice_width(P));
}
BENCHMARK(BM_LatticeWidth_Hexagon189);

void BM_Scan_Sum12(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(scan(12));
}
BENCHMARK(BM_Scan_Sum12);

} // namespace

BENCHMARK_MAIN();
