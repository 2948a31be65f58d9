#include "kmk/charring.hpp"
#include "kmk/error.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace kmk;

namespace {

RootSystem rs(IntMatrix m) { return RootSystem(GeneralizedCartanMatrix::validate(std::move(m))); }

IntMatrix type_a(std::size_t n)
{
    IntMatrix a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 2;
        if (i + 1 < n)
            a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
}

// Weight multiset of V(lambda) for sl_{n+1} from semistandard tableaux of
// shape lambda with entries 1..n+1: the weight of a tableau with content c is
// (c_1 - c_2, ..., c_n - c_{n+1}).
WeightMultiset ssyt_weights(const Weight& lambda)
{
    const std::size_t n = lambda.size();
    std::vector<int> shape(n, 0);
    for (std::size_t i = n; i-- > 0;)
        shape[i] = lambda[i] + (i + 1 < n ? shape[i + 1] : 0);
    std::vector<std::vector<int>> tab(n);
    for (std::size_t r = 0; r < n; ++r)
        tab[r].assign(shape[r], 0);
    WeightMultiset out;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == n) {
            std::vector<int> content(n + 1, 0);
            for (const auto& row : tab)
                for (int v : row)
                    ++content[v];
            Weight w{std::vector<int>(n)};
            for (std::size_t i = 0; i < n; ++i)
                w[i] = content[i] - content[i + 1];
            ++out.entries[w];
            return;
        }
        if (c == tab[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 0;
        if (c > 0)
            lo = tab[r][c - 1];
        if (r > 0)
            lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(n); ++v) {
            tab[r][c] = v;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
    return out;
}

// Exterior square through the full weight multiset: all unordered pairs of
// distinct basis vectors.
WeightMultiset wedge2_brute(const WeightMultiset& w)
{
    std::vector<Weight> basis;
    for (const auto& [mu, k] : w.entries)
        for (std::int64_t i = 0; i < k; ++i)
            basis.push_back(mu);
    WeightMultiset out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            ++out.entries[basis[i] + basis[j]];
    return out;
}

Weight random_dominant(std::mt19937_64& gen, std::size_t n, int max_sum)
{
    Weight w{std::vector<int>(n, 0)};
    int budget = static_cast<int>(gen() % (max_sum + 1));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
        const int c = static_cast<int>(gen() % (budget + 1));
        w[i] = c;
        budget -= c;
    }
    return w;
}

}  // namespace

TEST_CASE("A1 strings")
{
    const RootSystem a1 = rs({{2}});
    const WeightMultiset w = weight_multiplicities(a1, Weight{{2}});
    CHECK(w.entries == std::map<Weight, std::int64_t>{{Weight{{-2}}, 1}, {Weight{{0}}, 1}, {Weight{{2}}, 1}});
    for (int a = 0; a <= 8; ++a) {
        const WeightMultiset s = weight_multiplicities(a1, Weight{{a}});
        CHECK(s.mass() == a + 1);
        for (const auto& [mu, k] : s.entries)
            CHECK(k == 1);
    }
    CHECK(weyl_dim(a1, Weight{{2}}) == 3);
    CHECK(weyl_dim(a1, Weight{{3}}) == 4);
    CHECK(weyl_dim(rs(type_a(2)), Weight{{1, 0}}) == 3);
}

TEST_CASE("A2 adjoint")
{
    const RootSystem a2 = rs(type_a(2));
    const WeightMultiset w = weight_multiplicities(a2, Weight{{1, 1}});
    CHECK(w.mult(Weight{{0, 0}}) == 2);
    CHECK(w.mass() == 8);
}

TEST_CASE("Freudenthal agrees with semistandard tableaux in type A")
{
    std::mt19937_64 gen(31);
    for (std::size_t n = 1; n <= 3; ++n) {
        const RootSystem r = rs(type_a(n));
        for (int trial = 0; trial < 8; ++trial) {
            const Weight lambda = random_dominant(gen, n, 4);
            CHECK(weight_multiplicities(r, lambda) == ssyt_weights(lambda));
        }
    }
}

TEST_CASE("exterior square")
{
    const RootSystem a1 = rs({{2}});
    Character expect;
    expect.add(Weight{{2}}, 1);
    CHECK(exterior_square(a1, Weight{{2}}) == expect);
    CHECK(exterior_square(a1, Weight{{1}}) == irreducible(Weight{{0}}));
    Character sym3;
    sym3.add(Weight{{4}}, 1);
    sym3.add(Weight{{0}}, 1);
    CHECK(exterior_square(a1, Weight{{3}}) == sym3);

    std::mt19937_64 gen(32);
    const std::vector<IntMatrix> types = {type_a(2), {{2, -1}, {-2, 2}}, {{2, -1}, {-3, 2}}, type_a(3)};
    for (const IntMatrix& a : types) {
        const RootSystem r = rs(a);
        for (int trial = 0; trial < 4; ++trial) {
            const Weight lambda = random_dominant(gen, a.size(), 2);
            const Character e = exterior_square(r, lambda);
            CHECK(expand(r, e) == wedge2_brute(weight_multiplicities(r, lambda)));
        }
    }
}

TEST_CASE("decompose")
{
    const RootSystem a1 = rs({{2}});
    WeightMultiset m;
    m.entries = {{Weight{{1}}, 1}, {Weight{{-1}}, 1}, {Weight{{0}}, 1}};
    Character expect;
    expect.add(Weight{{1}}, 1);
    expect.add(Weight{{0}}, 1);
    CHECK(decompose(a1, m) == expect);

    WeightMultiset bad;
    bad.entries = {{Weight{{1}}, 1}};
    CHECK_THROWS_AS(decompose(a1, bad), Error);

    std::mt19937_64 gen(33);
    const std::vector<IntMatrix> types = {type_a(2), {{2, -1}, {-3, 2}}, {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}};
    for (const IntMatrix& a : types) {
        const RootSystem r = rs(a);
        for (int trial = 0; trial < 6; ++trial) {
            const Weight x = random_dominant(gen, a.size(), 3), y = random_dominant(gen, a.size(), 3);
            CHECK(decompose(r, weight_multiplicities(r, x)) == irreducible(x));
            WeightMultiset sum = weight_multiplicities(r, x);
            for (const auto& [mu, k] : weight_multiplicities(r, y).entries)
                sum.entries[mu] += k;
            CHECK(decompose(r, sum) == irreducible(x) + irreducible(y));
        }
    }
}

TEST_CASE("character arithmetic")
{
    Character a = irreducible(Weight{{2}});
    CHECK_THROWS_AS(a - irreducible(Weight{{0}}), Error);
    CHECK((a - a).empty());
    CHECK_THROWS_AS(a.add(Weight{{2}}, -2), Error);
}

TEST_CASE("dualize")
{
    const RootSystem a1 = rs({{2}});
    Character c = irreducible(Weight{{3}}) + irreducible(Weight{{1}});
    CHECK(dualize(a1, c) == c);
    const RootSystem a2 = rs(type_a(2));
    CHECK(dualize(a2, irreducible(Weight{{1, 0}})) == irreducible(Weight{{0, 1}}));
    CHECK(dimension(a2, irreducible(Weight{{1, 1}}) + irreducible(Weight{{1, 0}})) == 11);
}
