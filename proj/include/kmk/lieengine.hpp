// Explicit root spaces of g(A) over Q.
//
// g_delta is built degree by degree as the quotient of the span of the
// brackets [e_i, g_{delta - alpha_i}] by the elements killed by every f_j.
// This is the quotient by the maximal graded ideal meeting h trivially, so it
// works for any GCM; for symmetrizable A it agrees with the Serre
// presentation. Each component stores the matrices of ad e_i coming in and
// ad f_j going out, which is enough to bracket any two elements.

#pragma once

#include "kmk/exact.hpp"
#include "kmk/gcm.hpp"
#include "kmk/rootsys.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace kmk {

struct GradedComponent {
    RootVector degree;
    std::size_t dim = 0;
    std::vector<std::string> basis;  // bracket words in the generators e_i
};

/// A lazily expanded truncation of the positive part of g(A). Not safe for
/// concurrent use while components are still being added.
class TruncatedAlgebra {
public:
    /// With a node, components whose coefficient at the node exceeds
    /// max_level are out of truncation. Heights above max_height always are.
    explicit TruncatedAlgebra(GeneralizedCartanMatrix m, std::optional<std::size_t> node = std::nullopt,
                              int max_level = 2, int max_height = 64);

    const GeneralizedCartanMatrix& matrix() const { return m_; }

    /// Throws Error(OutOfTruncation) or Error(InvalidInput) for a bad degree.
    GradedComponent component(const RootVector& delta);
    std::size_t dim(const RootVector& delta);

    /// ad e_i : g_delta -> g_{delta + alpha_i}.
    const RationalMatrix& raising(std::size_t i, const RootVector& delta);
    /// ad f_j : g_delta -> g_{delta - alpha_j}; delta must have height >= 2.
    const RationalMatrix& lowering(std::size_t j, const RootVector& delta);

    /// ad x : g_eps -> g_{delta + eps} for basis element b of g_delta.
    const RationalMatrix& ad(const RootVector& delta, std::size_t b, const RootVector& eps);

    /// [x, y] for coordinate vectors x in g_delta and y in g_eps.
    std::vector<Rational> bracket(const RootVector& delta, const std::vector<Rational>& x, const RootVector& eps,
                                  const std::vector<Rational>& y);

    /// Number of components computed so far.
    std::size_t computed() const { return components_.size(); }

private:
    struct Component {
        std::size_t dim = 0;
        std::vector<std::string> labels;
        std::vector<std::pair<std::size_t, std::size_t>> defs;  // basis b = [e_i, basis b' of delta - alpha_i]
        std::vector<RationalMatrix> lower;  // j -> ad f_j into g_{delta - alpha_j}
        std::vector<RationalMatrix> raise;  // i -> ad e_i from g_{delta - alpha_i}
    };

    const Component& get(const RootVector& delta);
    Component build(const RootVector& delta);
    void check_degree(const RootVector& delta) const;

    GeneralizedCartanMatrix m_;
    std::optional<std::size_t> node_;
    int max_level_;
    int max_height_;
    std::map<std::vector<int>, Component> components_;
    std::map<std::tuple<std::vector<int>, std::size_t, std::vector<int>>, RationalMatrix> ad_cache_;
    RationalMatrix empty_;
};

/// One-shot component computation on an untruncated algebra.
GradedComponent graded_component(const GeneralizedCartanMatrix& m, const RootVector& delta);

/// Ordered basis of g_1 or g_2 for an admissible pair (node at index 0).
struct LevelBasis {
    struct Entry {
        RootVector degree;
        std::size_t index;  // basis index inside g_degree
        Weight weight;      // level-0 weight
        std::string label;
    };
    std::vector<Entry> entries;           // sorted by (weight, construction order)
    std::vector<RootVector> support;      // degrees with positive dimension
    std::vector<RootVector> shell;        // frontier degrees verified to vanish
};

/// Level-1 or level-2 support found by walking up from alpha_0 (resp. from
/// alpha_0 + beta for level-1 roots beta) with the level-0 raising operators.
LevelBasis level_basis(TruncatedAlgebra& alg, int level);

/// Rows of a matrix spanning a subspace of Q^ambient, in reduced form.
struct SubspaceBasis {
    std::size_t ambient = 0;
    RationalMatrix rows;

    std::size_t dim() const { return rows.rows(); }
};

struct BracketData {
    LevelBasis g1;
    LevelBasis g2;
    /// Rows index the g_2 basis, columns the pairs (p, q), p < q, in
    /// lexicographic order over the g_1 basis.
    RationalMatrix matrix;
    SubspaceBasis kernel;
};

/// The bracket wedge^2 g_1 -> g_2 and its kernel. Throws
/// Error(SurjectivityFailure) if the rank falls short of dim g_2.
BracketData bracket_matrix(const AdmissiblePair& p);

/// (delta, delta) for the form diag(d) A in root coordinates.
Rational norm(const Symmetrization& s, const RootVector& delta);
Rational norm(const GeneralizedCartanMatrix& m, const RootVector& delta);

/// The rank-2 symmetrization with d = (b, a) for [[2, -a], [-b, 2]]; a, b > 0.
/// Unlike symmetrize, this is not reduced by gcd(a, b).
Symmetrization rank2_form(int a, int b);

enum class RootClass { Real, Imaginary, NotRoot };

std::string to_string(RootClass c);

/// Real/imaginary test through the invariant form. Requires every component to
/// be finite, affine or hyperbolic (Error(UnsupportedType)) and A symmetrizable.
RootClass classify_root(const GeneralizedCartanMatrix& m, const RootVector& delta);
RootClass classify_root(const GeneralizedCartanMatrix& m, const Symmetrization& s, const RootVector& delta);

/// All positive roots of height <= h of a rank-2 GCM, in order of height then
/// lexicographic.
std::vector<std::pair<RootVector, RootClass>> enumerate_rank2_roots(const GeneralizedCartanMatrix& m, int h);

}  // namespace kmk
