#include "kmk/error.hpp"
#include "kmk/gcm.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace kmk;

namespace {

ErrorCode code_of(const IntMatrix& m)
{
    try {
        GeneralizedCartanMatrix::validate(m);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidInput;
}

GeneralizedCartanMatrix gcm(IntMatrix m) { return GeneralizedCartanMatrix::validate(std::move(m)); }

GeneralizedCartanMatrix random_gcm(std::mt19937_64& gen, std::size_t n)
{
    IntMatrix a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 2;
        for (std::size_t j = i + 1; j < n; ++j)
            if (gen() % 2) {
                a[i][j] = -1 - static_cast<int>(gen() % 3);
                a[j][i] = -1 - static_cast<int>(gen() % 3);
            }
    }
    return gcm(a);
}

GeneralizedCartanMatrix permuted(const GeneralizedCartanMatrix& m, const std::vector<std::size_t>& p)
{
    IntMatrix a(m.size(), std::vector<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            a[i][j] = m(p[i], p[j]);
    return gcm(a);
}

}  // namespace

TEST_CASE("validate")
{
    CHECK(gcm({{2, -1}, {-2, 2}}).size() == 2);
    CHECK(gcm({{2}}).size() == 1);
    CHECK(code_of({{2, -1}, {0, 2}}) == ErrorCode::AsymmetricZero);
    CHECK(code_of({{1, -1}, {-1, 2}}) == ErrorCode::DiagonalNotTwo);
    CHECK(code_of({{2, 1}, {1, 2}}) == ErrorCode::PositiveOffDiagonal);
    CHECK(code_of({{2, -1}, {-1}}) == ErrorCode::InvalidInput);
}

TEST_CASE("classify examples")
{
    const TypeClassification d2 = classify(gcm({{2, -2}, {-2, 2}}));
    REQUIRE(d2.components.size() == 1);
    CHECK(d2.components[0].kind == Kind::Affine);
    CHECK(d2.components[0].det == 0);
    CHECK(d2.components[0].corank == 1);

    const TypeClassification g2 = classify(gcm({{2, -1}, {-3, 2}}));
    CHECK(g2.components[0].kind == Kind::Finite);
    CHECK(g2.components[0].det == 1);
    CHECK(g2.components[0].name_hint == "G2");

    const TypeClassification h = classify(gcm({{2, -3}, {-3, 2}}));
    CHECK(h.components[0].kind == Kind::Indefinite);
    CHECK(h.components[0].hyperbolic);
    CHECK(h.components[0].det == -5);

    // affine A_2^(1), a 3-cycle
    const TypeClassification a21 = classify(gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    CHECK(a21.components[0].kind == Kind::Affine);

    // disjoint union A1 + B2
    const TypeClassification u = classify(gcm({{2, 0, 0}, {0, 2, -1}, {0, -2, 2}}));
    REQUIRE(u.components.size() == 2);
    CHECK(u.all_finite());
}

TEST_CASE("classification is invariant under relabelling")
{
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + gen() % 3;
        const GeneralizedCartanMatrix m = random_gcm(gen, n);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), gen);
        const TypeClassification a = classify(m), b = classify(permuted(m, p));
        auto kinds = [](const TypeClassification& t) {
            std::vector<std::tuple<std::size_t, Kind, bool, std::string>> v;
            for (const auto& c : t.components)
                v.emplace_back(c.nodes.size(), c.kind, c.hyperbolic, c.det.get_str());
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(kinds(a) == kinds(b));
        CHECK(a.corank == b.corank);
    }
}

TEST_CASE("Dynkin diagrams")
{
    const DynkinDiagram d1 = to_diagram(gcm({{2, -1}, {-2, 2}}));
    REQUIRE(d1.arrows.size() == 2);
    // arrow i -> j carries -a[j][i]
    CHECK(d1.arrows[0] == Arrow{0, 1, 2});
    CHECK(d1.arrows[1] == Arrow{1, 0, 1});
    CHECK(to_diagram(gcm({{2}})).arrows.empty());
    const DynkinDiagram d2 = to_diagram(gcm({{2, -2}, {-2, 2}}));
    CHECK(d2.arrows == std::vector<Arrow>{{0, 1, 2}, {1, 0, 2}});

    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 30; ++trial) {
        const GeneralizedCartanMatrix m = random_gcm(gen, 1 + gen() % 4);
        CHECK(from_diagram(to_diagram(m)) == m);
    }
    CHECK_THROWS_AS(from_diagram(DynkinDiagram{2, {{0, 1, 1}}}), Error);
}

TEST_CASE("admissible pairs")
{
    const AdmissiblePair d2 = admissible(gcm({{2, -2}, {-2, 2}}), 0);
    REQUIRE(d2.residual.components.size() == 1);
    CHECK(d2.residual.components[0].name_hint == "A1");

    try {
        admissible(gcm({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}}), 0);
        FAIL("expected NotAdmissible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAdmissible);
    }

    const AdmissiblePair g2 = admissible(gcm({{2, -1}, {-3, 2}}), 0);
    CHECK(g2.residual.all_finite());

    // node moved to index 0, other component ignored
    const AdmissiblePair p = admissible(gcm({{2, 0, 0}, {0, 2, -1}, {0, -3, 2}}), 2);
    CHECK(p.component == std::vector<std::size_t>{2, 1});
    CHECK(p.ignored_components == std::vector<std::vector<std::size_t>>{{0}});
    CHECK(p.matrix.entries() == IntMatrix{{2, -3}, {-1, 2}});
    CHECK_THROWS_AS(admissible(gcm({{2}}), 1), Error);
}

TEST_CASE("thm1 criterion reads row 0")
{
    CHECK(thm1_criterion(admissible(gcm({{2, -1}, {-2, 2}}), 0)));
    CHECK_FALSE(thm1_criterion(admissible(gcm({{2, -2}, {-2, 2}}), 0)));
    CHECK(thm1_criterion(admissible(gcm({{2, -1}, {-3, 2}}), 0)));
    // transposing swaps the verdict
    CHECK_FALSE(thm1_criterion(admissible(gcm({{2, -2}, {-1, 2}}), 0)));
    CHECK_FALSE(thm1_criterion(admissible(gcm({{2, -3}, {-1, 2}}), 0)));
}

TEST_CASE("support_connected")
{
    const GeneralizedCartanMatrix a3 = gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK_FALSE(support_connected(a3, {1, 0, 1}));
    CHECK(support_connected(a3, {1, 1, 1}));
    CHECK(support_connected(gcm({{2, -4}, {-1, 2}}), {2, 1}));
    CHECK_THROWS_AS(support_connected(a3, {0, 0, 0}), Error);
}

TEST_CASE("symmetrize")
{
    const Symmetrization s = symmetrize(gcm({{2, -2}, {-3, 2}}));
    CHECK(s.d == std::vector<Integer>{3, 2});
    CHECK(s.form(0, 0) == 6);
    CHECK(s.form(0, 1) == -6);
    CHECK(s.form(1, 1) == 4);

    const Symmetrization a3 = symmetrize(gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    CHECK(a3.d == std::vector<Integer>{1, 1, 1});

    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + gen() % 3;
        const GeneralizedCartanMatrix m = random_gcm(gen, n);
        if (n == 2)
            CHECK(is_symmetrizable(m));
        if (!is_symmetrizable(m)) {
            CHECK_THROWS_AS(symmetrize(m), Error);
            continue;
        }
        const Symmetrization t = symmetrize(m);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(t.d[i] > 0);
            for (std::size_t j = 0; j < n; ++j)
                CHECK(t.form(i, j) == t.form(j, i));
        }
    }
    // the cycle 0 -> 1 -> 2 -> 0 with products 2 * 1 * 1 != 1 * 1 * 1
    CHECK_FALSE(is_symmetrizable(gcm({{2, -2, -1}, {-1, 2, -1}, {-1, -1, 2}})));
}
