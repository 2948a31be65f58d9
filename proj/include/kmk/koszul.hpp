// Koszul modules W(V, K) for a subspace K of wedge^2 V.
//
// Bases: V has basis v_0..v_{n-1}; wedge^p V uses increasing index tuples in
// lexicographic order; Sym^q V uses exponent vectors in graded-lex order
// (x_0^q first). Tensor bases are Sym-major.

#pragma once

#include "kmk/exact.hpp"
#include "kmk/lieengine.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kmk {

inline constexpr std::size_t kDefaultBudget = 2'000'000;

struct KoszulInput {
    std::size_t n = 0;
    SubspaceBasis kernel;  // ambient C(n, 2), reduced rows
};

/// Reduces the rows and checks their length. Throws Error(InvalidInput).
KoszulInput make_koszul_input(std::size_t n, const RationalMatrix& rows);

struct GradedDims {
    std::vector<std::int64_t> dims;  // dims[q] = dim W(V, K)_q
};

/// Exponent vectors of degree q in n variables, graded-lex.
std::vector<std::vector<int>> monomials(std::size_t n, std::size_t q);

/// Increasing p-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t p);

/// delta_p : Sym^q (x) wedge^p -> Sym^{q+1} (x) wedge^{p-1},
/// v_1 ^ ... ^ v_p (x) f  |->  sum_i (-1)^{i+1} v_i f (x) (... omit v_i ...).
/// Throws Error(IndexOutOfRange) for p > n.
RationalMatrix koszul_differential(std::size_t n, std::size_t p, std::size_t q);

/// dim W(V, K)_q as the cokernel of Sym^{q-1} (x) wedge^3 -> Sym^q (x) wedge^2 / K.
/// Throws Error(DimensionOverflow) if the composite has more than `budget`
/// entries.
std::int64_t graded_dim(const KoszulInput& in, std::size_t q, std::size_t budget = kDefaultBudget);

GradedDims graded_dims(const KoszulInput& in, std::size_t max_q, std::size_t budget = kDefaultBudget);

/// Decided at q = n - 3 (n >= 3); for n <= 2, nilpotent iff K is everything.
/// Throws Error(DimensionOverflow).
bool is_nilpotent_explicit(const KoszulInput& in, std::size_t budget = kDefaultBudget);

/// dim W(V, sub)_q >= dim W(V, super)_q for all q <= max_q. Throws
/// Error(NotContained) unless sub is a subspace of super.
bool monotonicity_check(const KoszulInput& sub, const KoszulInput& super, std::size_t max_q,
                        std::size_t budget = kDefaultBudget);

}  // namespace kmk
