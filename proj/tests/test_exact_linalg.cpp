#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "covrad/errors.hpp"
#include "covrad/linalg.hpp"

#include <random>

using namespace covrad;

namespace {

RatMat rat_mat(std::initializer_list<std::initializer_list<long>> rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    RatMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (long x : row)
            m.at(i, j++) = Rational(x);
        ++i;
    }
    return m;
}

IntVec int_vec(std::initializer_list<long> xs)
{
    IntVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

RatVec rat_vec(std::initializer_list<long> xs)
{
    RatVec v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

IntVec sorted_abs_minors(const IntMat& B)
{
    IntVec m = maximal_minor_abs(B);
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace

TEST_CASE("solve_square on the examples")
{
    auto id2 = RatMat::identity(2);
    auto x = solve_square(id2, rat_vec({3, 5}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 5);

    auto m = rat_mat({{2, -1}, {3, 0}});
    auto y = solve_square(m, rat_vec({0, 0}));
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 0);
    CHECK((*y)[1] == 0);

    auto m2 = rat_mat({{1, 1}, {1, -1}});
    auto z = solve_square(m2, rat_vec({1, 0}));
    REQUIRE(z.has_value());
    CHECK((*z)[0] == make_rational(1, 2));
    CHECK((*z)[1] == make_rational(1, 2));
}

TEST_CASE("solve_square singular and mismatched input")
{
    auto sing = rat_mat({{1, 2}, {2, 4}});
    CHECK(!solve_square(sing, rat_vec({1, 1})).has_value());

    auto id2 = RatMat::identity(2);
    CHECK_THROWS_AS((void)solve_square(id2, rat_vec({1, 2, 3})), UsageError);
    auto rect = RatMat(2, 3);
    CHECK_THROWS_AS((void)solve_square(rect, rat_vec({1, 2})), UsageError);
}

TEST_CASE("rank on the examples")
{
    CHECK(rank(RatMat(3, 3)) == 0);
    CHECK(rank(RatMat::identity(4)) == 4);
    CHECK(rank(rat_mat({{2, -1, 0}, {3, 0, -1}})) == 2);
    CHECK(rank(rat_mat({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("det on the examples")
{
    CHECK(det(RatMat::identity(5)) == 1);
    CHECK(det(rat_mat({{2, -1}, {3, 0}})) == 3);
    CHECK(det(rat_mat({{2, -1}, {1, 1}})) == 3);
    CHECK_THROWS_AS((void)det(RatMat(2, 3)), UsageError);

    // Fractional entries stay exact.
    RatMat m(2, 2);
    m.at(0, 0) = make_rational(1, 2);
    m.at(0, 1) = make_rational(1, 3);
    m.at(1, 0) = make_rational(1, 5);
    m.at(1, 1) = make_rational(1, 7);
    CHECK(det(m) == make_rational(1, 14) - make_rational(1, 15));
}

TEST_CASE("integer_kernel_basis reproduces the table bases up to equivalence")
{
    auto B = integer_kernel_basis(int_vec({1, 2, 3}));
    REQUIRE(B.rows() == 2);
    REQUIRE(B.cols() == 3);
    for (int i = 0; i < 2; ++i)
        CHECK(B.at(i, 0) * 1 + B.at(i, 1) * 2 + B.at(i, 2) * 3 == 0);
    CHECK(sorted_abs_minors(B) == int_vec({1, 2, 3}));

    auto B2 = integer_kernel_basis(int_vec({1, 1}));
    REQUIRE(B2.rows() == 1);
    CHECK(abs(B2.at(0, 0)) == 1);
    CHECK(B2.at(0, 0) + B2.at(0, 1) == 0);

    auto B3 = integer_kernel_basis(int_vec({2, 5, 7}));
    CHECK(sorted_abs_minors(B3) == int_vec({2, 5, 7}));
}

TEST_CASE("integer_kernel_basis rejects zero and non-primitive input")
{
    CHECK_THROWS_AS((void)integer_kernel_basis(int_vec({0, 0, 0})), DomainError);
    CHECK_THROWS_AS((void)integer_kernel_basis(int_vec({2, 4, 6})), DomainError);
}

TEST_CASE("hnf_rows is canonical for the spanned lattice")
{
    // Two bases of the same kernel lattice of (1,2,3).
    IntMat B1(2, 3), B2(2, 3);
    long b1[2][3] = {{2, -1, 0}, {3, 0, -1}};
    long b2[2][3] = {{2, -1, 0}, {1, 1, -1}}; // row2' = row2 - row1
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            B1.at(i, j) = b1[i][j];
            B2.at(i, j) = b2[i][j];
        }
    CHECK(hnf_rows(B1) == hnf_rows(B2));
}

TEST_CASE("randomized properties")
{
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<long> entry(-6, 6);

    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 4);
        RatMat A(n, n), B(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                A.at(i, j) = Rational(entry(rng));
                B.at(i, j) = Rational(entry(rng));
            }

        // det is multiplicative.
        RatMat AB(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s(0);
                for (int k = 0; k < n; ++k)
                    s += A.at(i, k) * B.at(k, j);
                AB.at(i, j) = s;
            }
        CHECK(det(AB) == det(A) * det(B));

        // Solutions re-multiply to the right hand side.
        RatVec rhs(n);
        for (int i = 0; i < n; ++i)
            rhs[i] = Rational(entry(rng));
        if (auto x = solve_square(A, rhs)) {
            for (int i = 0; i < n; ++i) {
                Rational s(0);
                for (int j = 0; j < n; ++j)
                    s += A.at(i, j) * (*x)[j];
                CHECK(s == rhs[i]);
                // canonical form invariant
                CHECK(gcd((*x)[i].get_num(), (*x)[i].get_den()) == 1);
                CHECK((*x)[i].get_den() > 0);
            }
        } else {
            CHECK(det(A) == 0);
        }
    }

    // Kernel bases: orthogonality and the minor identity.
    for (int iter = 0; iter < 200; ++iter) {
        const int d = 2 + static_cast<int>(rng() % 3);
        IntVec v(d);
        Integer g = 0;
        for (int k = 0; k < d; ++k) {
            v[k] = 1 + static_cast<long>(rng() % 30);
            g = gcd(g, v[k]);
        }
        if (g != 1)
            continue;
        IntMat B = integer_kernel_basis(v);
        for (int i = 0; i < B.rows(); ++i) {
            Integer dot = 0;
            for (int j = 0; j < d; ++j)
                dot += B.at(i, j) * v[j];
            CHECK(dot == 0);
        }
        IntVec expect = v;
        std::sort(expect.begin(), expect.end());
        CHECK(sorted_abs_minors(B) == expect);
    }
}
