// Generalized Cartan matrices, their Dynkin diagrams, type classification and
// admissible (diagram, node) pairs.
//
// Convention: entry a[i][j] is the value of the simple root alpha_j on the
// simple coroot alpha_i^vee. The Serre relations read
// (ad e_i)^{1 - a[i][j]} e_j = 0, and the Dynkin arrow into node j coming
// from node i carries multiplicity -a[j][i].

#pragma once

#include "kmk/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kmk {

using IntMatrix = std::vector<std::vector<int>>;

class GeneralizedCartanMatrix {
public:
    /// Checks the three axioms; throws Error(DiagonalNotTwo | PositiveOffDiagonal
    /// | AsymmetricZero | InvalidInput) naming the offending entry.
    static GeneralizedCartanMatrix validate(IntMatrix entries, std::vector<std::string> labels = {});

    std::size_t size() const { return entries_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const IntMatrix& entries() const { return entries_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool adjacent(std::size_t i, std::size_t j) const { return i != j && entries_[i][j] != 0; }

    /// Rows and columns restricted to `nodes`, in the given order.
    GeneralizedCartanMatrix principal_submatrix(const std::vector<std::size_t>& nodes) const;

    /// Connected components of the diagram, each sorted, ordered by smallest node.
    std::vector<std::vector<std::size_t>> components() const;

    /// Connected component containing `node`, sorted.
    std::vector<std::size_t> component_of(std::size_t node) const;

    GeneralizedCartanMatrix transposed() const;

    friend bool operator==(const GeneralizedCartanMatrix&, const GeneralizedCartanMatrix&) = default;

    GeneralizedCartanMatrix() = default;  // empty; only useful as a placeholder

private:
    IntMatrix entries_;
    std::vector<std::string> labels_;
};

enum class Kind { Finite, Affine, Indefinite };

std::string to_string(Kind kind);

struct ComponentType {
    std::vector<std::size_t> nodes;
    Kind kind = Kind::Finite;
    bool hyperbolic = false;
    Integer det;
    std::size_t corank = 0;
    std::optional<std::string> name_hint;  // Cartan-Killing name, finite kinds only
};

struct TypeClassification {
    std::vector<ComponentType> components;
    std::size_t corank = 0;
    std::size_t realization_dim = 0;

    bool all_finite() const;
};

TypeClassification classify(const GeneralizedCartanMatrix& m);

/// Number of nodes minus rank, computed exactly.
std::size_t corank(const GeneralizedCartanMatrix& m);

struct Arrow {
    std::size_t source;
    std::size_t target;
    int multiplicity;

    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct DynkinDiagram {
    std::size_t node_count = 0;
    std::vector<Arrow> arrows;  // sorted by (source, target)
};

DynkinDiagram to_diagram(const GeneralizedCartanMatrix& m);

/// Inverse of to_diagram; rejects one-sided edges, loops and bad multiplicities.
GeneralizedCartanMatrix from_diagram(const DynkinDiagram& d);

/// A diagram together with a distinguished node whose removal leaves only
/// finite-type components. `matrix` is the principal submatrix on the
/// connected component of the node, reordered so the node sits at index 0;
/// indices 1..k of `matrix` are the level-0 nodes.
struct AdmissiblePair {
    GeneralizedCartanMatrix matrix;
    std::size_t node = 0;                      // index in the original matrix
    std::vector<std::size_t> component;        // original indices, node first
    std::vector<std::vector<std::size_t>> ignored_components;  // original indices
    TypeClassification residual;               // classification of matrix minus node 0
};

/// Throws Error(NotAdmissible) listing the non-finite residual components.
AdmissiblePair admissible(const GeneralizedCartanMatrix& m, std::size_t node);

/// True iff no arrow of multiplicity >= 2 points into the distinguished node,
/// i.e. a[0][i] >= -1 for all i != 0.
bool thm1_criterion(const AdmissiblePair& p);

/// True iff the nodes with positive coefficient induce a connected subdiagram.
/// Throws Error(ZeroVector) on the zero vector.
bool support_connected(const GeneralizedCartanMatrix& m, const std::vector<int>& coeffs);

struct Symmetrization {
    std::vector<Integer> d;  // diag(d) * A is symmetric
    RationalMatrix form;     // diag(d) * A
};

/// Per component, d is the smallest positive integer vector. Throws
/// Error(NotSymmetrizable) if a cycle of the diagram is inconsistent.
Symmetrization symmetrize(const GeneralizedCartanMatrix& m);

bool is_symmetrizable(const GeneralizedCartanMatrix& m);

}  // namespace kmk
