#pragma once

#include <vector>

#include "permlat/lattice.hpp"

namespace permlat {

// Squared successive minima with one attaining vector per index. The
// attaining vectors are pairwise linearly independent lattice members,
// sign-normalized (first nonzero coordinate positive) and chosen
// lexicographically smallest among candidates, so output is deterministic.
struct MinimaProfile {
    std::vector<Int> minima_sq;
    std::vector<std::vector<Int>> attaining;
};

struct MinimalVectorSet {
    Int norm_sq;
    std::vector<std::vector<Int>> vectors;  // closed under negation
};

// Exact rational LLL; returns a reduced basis of the same lattice (columns).
// delta defaults to 3/4 and must lie in (1/4, 1).
IntMatrix lll_reduce(const Lattice& lattice, const Rat& delta = make_rat(3, 4));

// All nonzero lattice vectors v with |v|^2 <= bound_sq, both signs, sorted by
// (norm^2, lexicographic). Fincke-Pohst enumeration over the Gram form of an
// LLL-reduced basis; rank-deficient lattices are enumerated inside their span.
std::vector<std::vector<Int>> short_vectors(const Lattice& lattice, const Int& bound_sq);

MinimaProfile successive_minima(const Lattice& lattice);

MinimalVectorSet minimal_vectors(const Lattice& lattice);

// lambda_1 = lambda_r; for rank-deficient input this is decided within the span
bool is_well_rounded(const Lattice& lattice);

// whether some vectors attaining the successive minima form a basis;
// rank capped at 6 (combinatorial search)
bool is_minkowskian(const Lattice& lattice);

// Independent enumeration path: plain coefficient-box search with per-axis
// bounds from the inverse Gram matrix. No LLL, no pruning recursion; used to
// re-verify well-rounded flags and as a cross-check for the main enumerator.
std::vector<std::vector<Int>> short_vectors_by_box(const Lattice& lattice, const Int& bound_sq);

// re-verify a well-rounded decision at the claimed first minimum
bool verify_well_rounded_by_box(const Lattice& lattice, const Int& lambda1_sq);

}  // namespace permlat
