#include "kmk/grading.hpp"

#include "kmk/error.hpp"

#include <numeric>

namespace kmk {

namespace {

GeneralizedCartanMatrix level0_matrix(const AdmissiblePair& p)
{
    std::vector<std::size_t> rest(p.matrix.size() - 1);
    std::iota(rest.begin(), rest.end(), std::size_t{1});
    return p.matrix.principal_submatrix(rest);
}

// Restriction of an ambient root-lattice element to the level-0 coroots.
Weight restrict_to_level0(const GeneralizedCartanMatrix& m, const RootVector& v)
{
    Weight w{std::vector<int>(m.size() - 1)};
    for (std::size_t k = 1; k < m.size(); ++k)
        w[k - 1] = coroot_pairing(m, k, v);
    return w;
}

Weight simple_root_weight(const GradedSetup& s, std::size_t beta)
{
    return s.level0.simple_root(beta);
}

}  // namespace

GradedSetup setup(const AdmissiblePair& p)
{
    const GeneralizedCartanMatrix& m = p.matrix;
    GradedSetup s{p, RootSystem(level0_matrix(p)), 0, {}, {}, std::vector<int>(m.size(), 1)};
    s.abelian_rank = 1 + corank(m) - corank(s.level0.cartan());
    s.fact_weight.coords.resize(m.size() - 1);
    for (std::size_t k = 1; k < m.size(); ++k)
        s.fact_weight[k - 1] = -m(k, 0);
    s.lambda = s.level0.dual(s.fact_weight);
    return s;
}

RootVector rho_shift(const GeneralizedCartanMatrix& m, const WeylWord& w)
{
    // y = w.rho - rho; r_i(rho + y) = rho + y - (1 + <y, alpha_i^vee>) alpha_i
    RootVector y{std::vector<int>(m.size(), 0)};
    for (std::size_t i : w.letters)
        y[i] -= 1 + coroot_pairing(m, i, y);
    for (int& c : y.coeffs)
        c = -c;
    return y;
}

std::vector<KostantComponent> kostant_h(const GradedSetup& s, std::size_t k)
{
    if (k >= 3)
        throw Error(ErrorCode::UnsupportedLength, "Kostant homology is only enumerated for k <= 2");
    const GeneralizedCartanMatrix& m = s.pair.matrix;
    const std::size_t n = m.size();

    std::vector<std::pair<WeylWord, std::vector<RootVector>>> words;
    if (k == 0)
        words.push_back({WeylWord{}, {}});
    else if (k == 1)
        for (std::size_t i = 0; i < n; ++i)
            words.push_back({WeylWord{{i}}, {RootVector::simple(n, i)}});
    else
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                // w = r_i r_j acts by r_j first; Phi_w = {alpha_i, r_i alpha_j}
                words.push_back({WeylWord{{j, i}},
                                 {RootVector::simple(n, i), reflect(m, i, RootVector::simple(n, j))}});
            }

    std::vector<KostantComponent> out;
    for (auto& [word, phi] : words) {
        bool avoids_level0 = true;
        for (const RootVector& r : phi)
            avoids_level0 = avoids_level0 && r.is_positive() && r[0] != 0;
        if (!avoids_level0)
            continue;
        const RootVector shift = rho_shift(m, word);
        KostantComponent c;
        c.word = word;
        c.phi = phi;
        c.weight = -restrict_to_level0(m, shift);
        c.degree = shift[0];
        out.push_back(std::move(c));
    }
    return out;
}

LevelReport level_character(const GradedSetup& s, int level)
{
    LevelReport r;
    r.level = level;
    if (level == 1) {
        r.character = irreducible(s.lambda);
    } else if (level == 2) {
        const Weight dual_lambda = s.level0.dual(s.lambda);
        Character minus_two = exterior_square(s.level0, dual_lambda);
        for (const auto& c : kostant_h(s, 2))
            if (c.degree == 2)
                minus_two.add(c.weight, -1);
        r.character = dualize(s.level0, minus_two);
    } else {
        throw Error(ErrorCode::OutOfTruncation, "level " + std::to_string(level) + " is not computed");
    }
    r.dim = dimension(s.level0, r.character);
    return r;
}

Character kernel_character(const GradedSetup& s)
{
    return exterior_square(s.level0, s.lambda) - level_character(s, 2).character;
}

bool ps_nilpotency(const GradedSetup& s)
{
    const Character k_perp = dualize(s.level0, level_character(s, 2).character);
    const Weight dual_lambda = s.level0.dual(s.lambda);
    for (std::size_t b = 0; b < s.level0.rank(); ++b) {
        const Weight w = 2 * dual_lambda - simple_root_weight(s, b);
        if (w.is_dominant() && k_perp.mult(w) > 0)
            return false;
    }
    return true;
}

Character kmax_character(const GradedSetup& s)
{
    const Character wedge = exterior_square(s.level0, s.lambda);
    const Weight dual_lambda = s.level0.dual(s.lambda);
    Character out;
    for (std::size_t b = 0; b < s.level0.rank(); ++b) {
        const Weight w = 2 * dual_lambda - simple_root_weight(s, b);
        if (!w.is_dominant())
            continue;
        const Weight target = s.level0.dual(w);
        if (wedge.mult(target) > 0)
            out.add(target, 1);
    }
    return out;
}

std::vector<std::size_t> kmax_surrogate(const GradedSetup& s)
{
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < s.level0.rank(); ++b)
        if (s.level0.scaled_form(s.lambda, simple_root_weight(s, b)) != 0)
            out.push_back(b);
    return out;
}

bool theorem_max_check(const GradedSetup& s)
{
    if (!thm1_criterion(s.pair))
        throw Error(ErrorCode::CriterionNotSatisfied, "an arrow of multiplicity >= 2 points into the node");
    return kernel_character(s) == kmax_character(s);
}

BoundCheck bound_check(const GradedSetup& s)
{
    BoundCheck b;
    const std::int64_t d = weyl_dim(s.level0, s.lambda);
    b.lhs = level_character(s, 2).dim;
    b.rhs = d * (d - 1) / 2 - (2 * d - 3);
    b.applies = thm1_criterion(s.pair);
    b.holds = b.lhs <= b.rhs;
    return b;
}

}  // namespace kmk
