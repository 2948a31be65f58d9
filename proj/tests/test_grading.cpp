#include "kmk/error.hpp"
#include "kmk/grading.hpp"
#include "kmk/report.hpp"

#include <doctest.h>

using namespace kmk;

namespace {

GradedSetup make(IntMatrix m, std::size_t node = 0)
{
    return setup(admissible(GeneralizedCartanMatrix::validate(std::move(m)), node));
}

const IntMatrix kD1 = {{2, -1}, {-2, 2}};
const IntMatrix kD2 = {{2, -2}, {-2, 2}};
const IntMatrix kG2 = {{2, -1}, {-3, 2}};

Character ch(std::initializer_list<std::pair<std::vector<int>, std::int64_t>> items)
{
    Character c;
    for (const auto& [w, k] : items)
        c.add(Weight{w}, k);
    return c;
}

std::int64_t choose2(std::int64_t d) { return d * (d - 1) / 2; }

const std::vector<DiagramFile>& corpus()
{
    static const std::vector<DiagramFile> c = random_corpus({60, 4, -3, 17});
    return c;
}

}  // namespace

TEST_CASE("setup")
{
    const GradedSetup d2 = make(kD2);
    CHECK(d2.level0.rank() == 1);
    CHECK(d2.abelian_rank == 2);
    CHECK(d2.lambda == Weight{{2}});
    const GradedSetup d1 = make(kD1);
    CHECK(d1.abelian_rank == 1);
    CHECK(d1.lambda == Weight{{2}});
    const GradedSetup g2 = make(kG2);
    CHECK(g2.lambda == Weight{{3}});
    CHECK(level_character(g2, 1).dim == 4);

    // A3 with the node at an end: g_{-1} = V(omega_1), g_1 = V(omega_2)
    const GradedSetup a3 = make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(a3.fact_weight == Weight{{1, 0}});
    CHECK(a3.lambda == Weight{{0, 1}});
}

TEST_CASE("Kostant components")
{
    const GradedSetup d2 = make(kD2);
    const auto h1 = kostant_h(d2, 1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].word.letters == std::vector<std::size_t>{0});
    CHECK(h1[0].degree == 1);
    CHECK(h1[0].weight == d2.fact_weight);

    const auto h2 = kostant_h(d2, 2);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0].degree == 3);
    CHECK(h2[0].word.letters == std::vector<std::size_t>{1, 0});

    const auto g2 = kostant_h(make(kG2), 2);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].degree == 2);
    CHECK(g2[0].weight == Weight{{4}});

    CHECK_THROWS_AS(kostant_h(d2, 3), Error);
}

TEST_CASE("level characters")
{
    CHECK(level_character(make(kD1), 2).dim == 0);
    const LevelReport d2 = level_character(make(kD2), 2);
    CHECK(d2.dim == 3);
    CHECK(d2.character == ch({{{2}, 1}}));
    const LevelReport g2 = level_character(make(kG2), 2);
    CHECK(g2.dim == 1);
    CHECK(g2.character == ch({{{0}, 1}}));
    CHECK_THROWS_AS(level_character(make(kG2), 3), Error);
}

TEST_CASE("kernel, verdicts and the maximal module")
{
    const GradedSetup d1 = make(kD1), d2 = make(kD2), g2 = make(kG2);
    CHECK(kernel_character(d2).empty());
    CHECK(kernel_character(d1) == ch({{{2}, 1}}));
    CHECK(kernel_character(g2) == ch({{{4}, 1}}));

    CHECK(ps_nilpotency(d1));
    CHECK_FALSE(ps_nilpotency(d2));
    CHECK(ps_nilpotency(g2));

    CHECK(kmax_character(g2) == ch({{{4}, 1}}));
    CHECK(kmax_character(d1) == ch({{{2}, 1}}));
    CHECK(kmax_surrogate(g2) == std::vector<std::size_t>{0});

    CHECK(theorem_max_check(d1));
    CHECK(theorem_max_check(g2));
    CHECK_THROWS_AS(theorem_max_check(d2), Error);

    const BoundCheck b1 = bound_check(d1);
    CHECK(b1.lhs == 0);
    CHECK(b1.rhs == 0);
    CHECK(b1.holds);
    const BoundCheck bg = bound_check(g2);
    CHECK(bg.lhs == 1);
    CHECK(bg.rhs == 1);
    CHECK(bg.holds);
    CHECK_FALSE(bound_check(d2).applies);
}

TEST_CASE("properties over a random corpus")
{
    for (const DiagramFile& d : corpus()) {
        const GradedSetup s = setup(admissible(d.matrix, *d.node));
        CAPTURE(d.name);

        const auto h1 = kostant_h(s, 1);
        REQUIRE(h1.size() == 1);
        CHECK(h1[0].weight == s.level0.dual(s.lambda));
        for (std::size_t k = 1; k <= 2; ++k)
            for (const KostantComponent& c : kostant_h(s, k)) {
                CHECK(c.weight.is_dominant());
                CHECK(c.phi.size() == k);
                RootVector sum{std::vector<int>(s.pair.matrix.size(), 0)};
                for (const RootVector& r : c.phi)
                    sum = sum + r;
                CHECK(rho_shift(s.pair.matrix, c.word) == sum);
                CHECK(sum[0] == c.degree);
            }

        const LevelReport l1 = level_character(s, 1), l2 = level_character(s, 2);
        CHECK(l1.character == irreducible(s.lambda));
        const Character k = kernel_character(s);
        CHECK(dimension(s.level0, k) == choose2(l1.dim) - l2.dim);
        CHECK(k + l2.character == exterior_square(s.level0, s.lambda));

        const bool thm1 = thm1_criterion(s.pair);
        CHECK(ps_nilpotency(s) == thm1);
        if (thm1) {
            CHECK(theorem_max_check(s));
            CHECK(bound_check(s).holds);
        }
    }
}
