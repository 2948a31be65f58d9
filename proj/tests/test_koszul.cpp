#include "kmk/error.hpp"
#include "kmk/grading.hpp"
#include "kmk/koszul.hpp"

#include <doctest.h>

#include <random>

using namespace kmk;

namespace {

std::size_t c2(std::size_t n) { return n * (n - 1) / 2; }

KoszulInput full(std::size_t n) { return make_koszul_input(n, RationalMatrix::identity(c2(n))); }

KoszulInput zero(std::size_t n) { return make_koszul_input(n, RationalMatrix(0, c2(n))); }

RationalMatrix random_rows(std::mt19937_64& gen, std::size_t rows, std::size_t cols)
{
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (gen() % 3 == 0)
                m(r, c) = static_cast<long>(gen() % 5) - 2;
    return m;
}

KoszulInput from_pair(const IntMatrix& m)
{
    const BracketData b = bracket_matrix(admissible(GeneralizedCartanMatrix::validate(m), 0));
    return make_koszul_input(b.g1.entries.size(), b.kernel.rows);
}

}  // namespace

TEST_CASE("bases")
{
    CHECK(monomials(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(monomials(3, 0).size() == 1);
    CHECK(monomials(4, 3).size() == 20);
    CHECK(wedge_basis(3, 2) == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(wedge_basis(2, 3).empty());
}

TEST_CASE("differential")
{
    // n = 2, p = 2, q = 0: e0^e1 -> x0 (x) e1 - x1 (x) e0
    const RationalMatrix d = koszul_differential(2, 2, 0);
    REQUIRE(d.rows() == 4);
    REQUIRE(d.cols() == 1);
    // rows: (x0, e0), (x0, e1), (x1, e0), (x1, e1)
    CHECK(d(0, 0) == 0);
    CHECK(d(1, 0) == 1);
    CHECK(d(2, 0) == -1);
    CHECK(d(3, 0) == 0);

    const RationalMatrix d3 = koszul_differential(3, 3, 0);
    CHECK(rank(d3) == 1);
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < d3.rows(); ++r)
        nonzero += d3(r, 0) != 0;
    CHECK(nonzero == 3);
    CHECK_THROWS_AS(koszul_differential(2, 3, 0), Error);

    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t p = 2; p <= n; ++p)
            for (std::size_t q = 0; q <= 3; ++q) {
                const RationalMatrix comp = koszul_differential(n, p - 1, q + 1) * koszul_differential(n, p, q);
                CHECK(comp.is_zero());
            }
}

TEST_CASE("graded dimensions")
{
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t q = 0; q <= 4; ++q)
            CHECK(graded_dim(full(n), q) == 0);
    for (std::size_t q = 0; q <= 10; ++q)
        CHECK(graded_dim(zero(2), q) == static_cast<std::int64_t>(q + 1));
    CHECK(graded_dim(zero(3), 1) == 8);
    CHECK(graded_dims(zero(3), 2).dims == std::vector<std::int64_t>{3, 8, 15});
    CHECK_THROWS_AS(graded_dim(zero(5), 3, 10), Error);
}

TEST_CASE("explicit verdicts on the worked pairs")
{
    const KoszulInput d1 = from_pair({{2, -1}, {-2, 2}});
    CHECK(d1.n == 3);
    CHECK(d1.kernel.dim() == 3);
    CHECK(graded_dim(d1, 0) == 0);
    CHECK(is_nilpotent_explicit(d1));

    const KoszulInput d2 = from_pair({{2, -2}, {-2, 2}});
    CHECK(graded_dim(d2, 0) == 3);
    CHECK_FALSE(is_nilpotent_explicit(d2));

    const KoszulInput g2 = from_pair({{2, -1}, {-3, 2}});
    CHECK(g2.n == 4);
    CHECK(g2.kernel.dim() == 5);
    CHECK(graded_dim(g2, 0) == 1);
    CHECK(graded_dim(g2, 1) == 0);
    CHECK(is_nilpotent_explicit(g2));
}

TEST_CASE("monotonicity under kernel containment")
{
    CHECK(monotonicity_check(zero(3), full(3), 2));
    CHECK(monotonicity_check(full(3), full(3), 2));
    CHECK_THROWS_AS(monotonicity_check(full(3), zero(3), 2), Error);
    CHECK_THROWS_AS(monotonicity_check(zero(3), zero(4), 2), Error);

    std::mt19937_64 gen(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + gen() % 4;
        const std::size_t big = gen() % (c2(n) + 1);
        const RationalMatrix super_rows = random_rows(gen, big, c2(n));
        const std::size_t small = big == 0 ? 0 : gen() % (big + 1);
        // sub rows are combinations of the super rows
        RationalMatrix sub_rows(small, c2(n));
        const RationalMatrix coeff = random_rows(gen, small, big);
        if (small > 0)
            sub_rows = coeff * super_rows;
        const KoszulInput sub = make_koszul_input(n, sub_rows), super = make_koszul_input(n, super_rows);
        CHECK(monotonicity_check(sub, super, 2));
    }
}

TEST_CASE("nilpotent inputs have large kernels")
{
    std::mt19937_64 gen(52);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + gen() % 3;
        const std::size_t k = gen() % (c2(n) + 1);
        const KoszulInput in = make_koszul_input(n, random_rows(gen, k, c2(n)));
        if (is_nilpotent_explicit(in))
            CHECK(in.kernel.dim() >= 2 * n - 3);
    }
}
