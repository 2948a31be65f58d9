// The grading of g(A) by the coefficient of a distinguished simple root, seen
// through the character ring of the level-0 algebra.
//
// Everything here is computed from characters: the level-1 module, Kostant's
// formula for H_1 and H_2 of the negative part, the level-2 module, the kernel
// of the bracket on the exterior square, and the nilpotency verdicts derived
// from them.

#pragma once

#include "kmk/charring.hpp"
#include "kmk/gcm.hpp"
#include "kmk/rootsys.hpp"

#include <cstdint>
#include <vector>

namespace kmk {

struct GradedSetup {
    AdmissiblePair pair;
    /// Level-0 semisimple part: pair.matrix without node 0. Level-0 index k
    /// corresponds to index k + 1 of pair.matrix.
    RootSystem level0;
    /// Dimension of the abelian part of g_0: 1 + corank(A) - corank(A').
    std::size_t abelian_rank = 0;
    /// (-a[k][0])_k, read off column 0. This is the highest weight of g_{-1}.
    Weight fact_weight;
    /// Highest weight of g_1, the dual of fact_weight.
    Weight lambda;
    /// Values of the ambient Weyl vector on the simple coroots.
    std::vector<int> rho;
};

GradedSetup setup(const AdmissiblePair& p);

struct KostantComponent {
    WeylWord word;                // letters in the order they act on rho
    std::vector<RootVector> phi;  // ambient positive roots sent negative by w^{-1}
    Weight weight;                // w.rho - rho on the level-0 coroots
    int degree = 0;               // coefficient of alpha_0 in rho - w.rho
};

/// rho - w.rho in ambient root coordinates, tracked exactly.
RootVector rho_shift(const GeneralizedCartanMatrix& m, const WeylWord& w);

/// Words of length k (k <= 2) whose Phi_w avoids the level-0 roots. Throws
/// Error(UnsupportedLength) for k >= 3.
std::vector<KostantComponent> kostant_h(const GradedSetup& s, std::size_t k);

struct LevelReport {
    int level = 0;
    std::int64_t dim = 0;
    Character character;
};

/// Level 1 or 2. Throws Error(OutOfTruncation) otherwise.
LevelReport level_character(const GradedSetup& s, int level);

/// Character of ker([,] : wedge^2 g_1 -> g_2).
Character kernel_character(const GradedSetup& s);

/// Nilpotency verdict from the constituents of K-perp = g_{-2}: nilpotent iff
/// no 2 lambda* - beta (beta simple at level 0) is a constituent highest weight.
bool ps_nilpotency(const GradedSetup& s);

/// Sum of (2 lambda* - beta)* over simple beta for which that weight occurs in
/// wedge^2 V(lambda).
Character kmax_character(const GradedSetup& s);

/// Level-0 simple roots beta with (lambda, beta) != 0 under the invariant form.
std::vector<std::size_t> kmax_surrogate(const GradedSetup& s);

/// kernel_character == kmax_character. Throws Error(CriterionNotSatisfied)
/// when thm1_criterion fails.
bool theorem_max_check(const GradedSetup& s);

struct BoundCheck {
    std::int64_t lhs = 0;  // dim g_2
    std::int64_t rhs = 0;  // C(d, 2) - (2d - 3), d = dim g_1
    bool applies = false;  // thm1_criterion holds
    bool holds = false;
};

BoundCheck bound_check(const GradedSetup& s);

}  // namespace kmk
