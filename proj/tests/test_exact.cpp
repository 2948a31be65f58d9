#include "kmk/error.hpp"
#include "kmk/exact.hpp"

#include <doctest.h>

#include <random>

using namespace kmk;

namespace {

// Laplace expansion, independent of the elimination code.
Rational cofactor_det(const RationalMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Rational d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c)
                    minor(r - 1, kk++) = m(r, k);
        const Rational t = m(0, c) * cofactor_det(minor);
        d += (c % 2 == 0) ? t : Rational(-t);
    }
    return d;
}

RationalMatrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c, int spread, int zero_bias)
{
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (static_cast<int>(gen() % 10) >= zero_bias)
                m(i, j) = static_cast<long>(gen() % (2 * spread + 1)) - spread;
    return m;
}

}  // namespace

TEST_CASE("parse_rational accepts canonical and non-canonical forms")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(10, 0) == 1);
}

TEST_CASE("row echelon, rank and null space")
{
    RationalMatrix m(2, 3);
    m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
    m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
    CHECK(rank(m) == 1);
    const RationalMatrix ns = null_space(m);
    CHECK(ns.rows() == 2);
    for (std::size_t r = 0; r < ns.rows(); ++r)
        for (const Rational& v : m.apply(ns.row(r)))
            CHECK(v == 0);
}

TEST_CASE("determinant agrees with cofactor expansion")
{
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + gen() % 5;
        const RationalMatrix m = random_matrix(gen, n, n, 4, 3);
        CHECK(determinant(m) == cofactor_det(m));
    }
    CHECK(integer_determinant({{2, -1}, {-3, 2}}) == 1);
    CHECK(integer_determinant({{2, -3}, {-3, 2}}) == -5);
}

TEST_CASE("sparse echelon rank equals dense rank")
{
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + gen() % 8, c = 1 + gen() % 8;
        const RationalMatrix m = random_matrix(gen, r, c, 3, 5 + static_cast<int>(gen() % 4));
        SparseEchelon ech;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::pair<std::size_t, Rational>> v;
            for (std::size_t j = 0; j < c; ++j)
                if (m(i, j) != 0)
                    v.emplace_back(j, m(i, j));
            if (!v.empty())
                ech.insert(primitive_integer_vector(v));
        }
        CHECK(ech.rank() == rank(m));
    }
}

TEST_CASE("primitive integer vector clears denominators and content")
{
    const SparseIntVector v = primitive_integer_vector({{0, Rational(1, 2)}, {3, Rational(-3, 4)}});
    REQUIRE(v.size() == 2);
    CHECK(v[0].first == 0);
    CHECK(v[0].second == 2);
    CHECK(v[1].second == -3);
}
