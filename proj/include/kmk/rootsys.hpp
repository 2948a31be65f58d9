// Finite-type root systems: positive roots, simple reflections, dominance
// normalization and dual weights.
//
// Weights live in fundamental-weight coordinates and root-lattice elements in
// simple-root coordinates. The two never convert implicitly.

#pragma once

#include "kmk/exact.hpp"
#include "kmk/gcm.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace kmk {

struct Weight {
    std::vector<int> coords;

    std::size_t size() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }

    bool is_dominant() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend Weight operator+(Weight a, const Weight& b);
    friend Weight operator-(Weight a, const Weight& b);
    friend Weight operator-(Weight a);
    friend Weight operator*(int k, Weight a);
};

struct RootVector {
    std::vector<int> coeffs;

    std::size_t size() const { return coeffs.size(); }
    int operator[](std::size_t i) const { return coeffs[i]; }
    int& operator[](std::size_t i) { return coeffs[i]; }

    static RootVector simple(std::size_t rank, std::size_t i);

    bool is_positive() const;  // nonnegative and nonzero
    int height() const;

    friend auto operator<=>(const RootVector&, const RootVector&) = default;
    friend RootVector operator+(RootVector a, const RootVector& b);
    friend RootVector operator-(RootVector a, const RootVector& b);
};

struct WeylWord {
    std::vector<std::size_t> letters;  // applied left to right to the input

    std::size_t length() const { return letters.size(); }
    friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
    std::size_t operator()(const Weight& w) const noexcept { return (*this)(w.coords); }
    std::size_t operator()(const RootVector& r) const noexcept { return (*this)(r.coeffs); }
};

/// <v, alpha_i^vee> for a root-lattice element of any GCM.
int coroot_pairing(const GeneralizedCartanMatrix& m, std::size_t i, const RootVector& v);

/// r_i on a root-lattice element: v - <v, alpha_i^vee> alpha_i. Any GCM.
RootVector reflect(const GeneralizedCartanMatrix& m, std::size_t i, const RootVector& v);

/// r_i on a weight in fundamental-weight coordinates: mu - mu_i alpha_i. Any GCM.
Weight reflect(const GeneralizedCartanMatrix& m, std::size_t i, const Weight& mu);

/// Fundamental-weight coordinates of a root-lattice element: column
/// combination of the Cartan matrix.
Weight to_weight(const GeneralizedCartanMatrix& m, const RootVector& v);

class RootSystem {
public:
    /// Throws Error(NotFiniteType) unless every component is of finite type.
    /// A 0x0 matrix (empty) gives the trivial rank-0 system.
    explicit RootSystem(GeneralizedCartanMatrix cartan);

    std::size_t rank() const { return cartan_.size(); }
    const GeneralizedCartanMatrix& cartan() const { return cartan_; }

    /// Sorted by height, then lexicographically.
    const std::vector<RootVector>& positive_roots() const { return positive_; }
    /// The same roots in fundamental-weight coordinates.
    const std::vector<Weight>& positive_root_weights() const { return positive_weights_; }

    Weight reflect(std::size_t i, const Weight& mu) const;
    RootVector reflect(std::size_t i, const RootVector& v) const;

    Weight to_weight(const RootVector& v) const { return kmk::to_weight(cartan_, v); }
    /// Exact simple-root coordinates of a weight.
    std::vector<Rational> to_root_coords(const Weight& mu) const;
    /// Root coordinates scaled by the index of the root lattice; integral.
    std::vector<Integer> scaled_root_coords(const Weight& mu) const;

    /// Lowest-index negative coordinate is reflected first. The word lists the
    /// reflections in the order they were applied.
    std::pair<Weight, WeylWord> make_dominant(Weight mu) const;
    Weight apply(const WeylWord& w, Weight mu) const;

    /// make_dominant(-lambda); throws Error(NotDominant) on non-dominant input.
    Weight dual(const Weight& lambda) const;

    Weight zero() const { return Weight{std::vector<int>(rank(), 0)}; }
    Weight rho() const { return Weight{std::vector<int>(rank(), 1)}; }
    Weight simple_root(std::size_t i) const;

    /// W-invariant form from the symmetrization, scaled to be integral on
    /// weights. Only ratios of this form are meaningful.
    std::int64_t scaled_form(const Weight& a, const Weight& b) const;

    /// Exact invariant form (per-component normalization of gcm::symmetrize).
    Rational form(const Weight& a, const Weight& b) const;

    /// a - b lies in the nonnegative root cone (and the root lattice).
    bool dominates(const Weight& a, const Weight& b) const;

    /// All weights in the Weyl orbit of mu.
    std::vector<Weight> orbit(const Weight& mu) const;

    const std::vector<Integer>& symmetrizer() const { return d_; }

private:
    GeneralizedCartanMatrix cartan_;
    std::vector<RootVector> positive_;
    std::vector<Weight> positive_weights_;
    std::vector<Integer> d_;
    RationalMatrix inverse_;                 // inverse Cartan matrix
    Integer lattice_index_ = 1;              // common denominator of inverse_
    std::vector<std::vector<std::int64_t>> gram_;  // scaled (omega_i, omega_j)
    Rational gram_scale_ = 1;                // form = gram_ / gram_scale_
};

}  // namespace kmk
