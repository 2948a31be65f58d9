// Characters of finite-dimensional representations of a (possibly reducible)
// finite-type algebra: Freudenthal multiplicities, Weyl dimensions, exterior
// squares, and decomposition of Weyl-invariant weight multisets.
//
// Everything is exact. Multiplicities are 64-bit; overflow is checked where
// products are formed.

#pragma once

#include "kmk/rootsys.hpp"

#include <cstdint>
#include <map>
#include <memory>

namespace kmk {

/// Full weight multiset of a module, every weight stored (not only dominant ones).
struct WeightMultiset {
    std::map<Weight, std::int64_t> entries;

    std::int64_t mult(const Weight& mu) const;
    std::int64_t mass() const;
    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

/// Dominant highest weight -> multiplicity. Zero entries are never stored.
struct Character {
    std::map<Weight, std::int64_t> constituents;

    bool empty() const { return constituents.empty(); }
    std::int64_t mult(const Weight& lambda) const;
    void add(const Weight& lambda, std::int64_t k);

    friend bool operator==(const Character&, const Character&) = default;
    friend Character operator+(Character a, const Character& b);
    /// Throws Error(NegativeMultiplicity) if a constituent would go negative.
    friend Character operator-(Character a, const Character& b);
};

Character irreducible(const Weight& lambda);

/// Multiplicities of the dominant weights of V(lambda) (Freudenthal).
/// Results are memoized per (root system, lambda) in a thread-safe cache.
const std::map<Weight, std::int64_t>& dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

WeightMultiset weight_multiplicities(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula, exact.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

std::int64_t dimension(const RootSystem& rs, const Character& c);

/// Decomposition of the exterior square of V(lambda).
Character exterior_square(const RootSystem& rs, const Weight& lambda);

/// Greedy highest-weight peeling. Throws Error(NotWeylInvariant) or
/// Error(NegativeMultiplicity).
Character decompose(const RootSystem& rs, const WeightMultiset& w);

/// Peeling on the dominant part only (the multiset is implicitly W-invariant).
Character decompose_dominant(const RootSystem& rs, std::map<Weight, std::int64_t> dominant_part);

/// Sum of the full weight multisets of the constituents.
WeightMultiset expand(const RootSystem& rs, const Character& c);

Character dualize(const RootSystem& rs, const Character& c);

}  // namespace kmk
