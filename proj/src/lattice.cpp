#include "permlat/lattice.hpp"

#include <algorithm>

namespace permlat {

Lattice Lattice::from_matrix_columns(const IntMatrix& generators) {
    if (generators.rows() < 1) throw std::invalid_argument("ambient dimension must be positive");
    HnfResult res = hnf(generators);
    IntMatrix basis(generators.rows(), res.rank);
    for (int j = 0; j < res.rank; ++j)
        for (int i = 0; i < generators.rows(); ++i) basis.at(i, j) = res.h.at(i, j);
    return Lattice(generators.rows(), std::move(basis));
}

Lattice Lattice::from_generators(const std::vector<std::vector<Int>>& vectors, int ambient_dim) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
    if (vectors.empty()) return Lattice(ambient_dim, IntMatrix(ambient_dim, 0));
    return from_matrix_columns(IntMatrix::from_columns(vectors, ambient_dim));
}

Lattice Lattice::standard(int n) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
    return Lattice(n, IntMatrix::identity(n));
}

std::optional<std::vector<Int>> Lattice::coordinates(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("membership: vector length does not match ambient dimension");
    // pivot rows of the HNF staircase
    std::vector<Int> residual = v;
    std::vector<Int> coeffs(static_cast<std::size_t>(rank()), Int(0));
    int row = 0;
    for (int j = 0; j < rank(); ++j) {
        while (row < ambient_ && basis_.at(row, j) == 0) ++row;
        // basis is full column rank, so every column has a pivot
        const Int& pivot = basis_.at(row, j);
        Int q = residual[static_cast<std::size_t>(row)] / pivot;
        if (q * pivot != residual[static_cast<std::size_t>(row)]) return std::nullopt;
        if (q != 0)
            for (int i = 0; i < ambient_; ++i)
                residual[static_cast<std::size_t>(i)] -= q * basis_.at(i, j);
        coeffs[static_cast<std::size_t>(j)] = q;
        ++row;
    }
    if (!is_zero_vector(residual)) return std::nullopt;
    return coeffs;
}

bool Lattice::contains(const std::vector<Int>& v) const {
    return coordinates(v).has_value();
}

GramData Lattice::gram() const {
    if (rank() < 1) throw std::invalid_argument("gram data requires rank >= 1");
    IntMatrix g = gram_matrix(basis_);
    return {g, bareiss_determinant(g)};
}

Int Lattice::det_sq() const {
    return gram().det_sq;
}

Int Lattice::abs_det() const {
    if (!is_full_rank()) throw std::invalid_argument("determinant requires a full-rank lattice");
    return abs(bareiss_determinant(basis_));
}

bool Lattice::is_invariant_under(const Permutation& tau) const {
    if (tau.degree() != ambient_)
        throw std::invalid_argument("invariance: permutation degree does not match ambient dimension");
    // tau(L) and L share rank and determinant (the action is an isometry), so
    // containment of the permuted basis already forces equality.
    for (int j = 0; j < rank(); ++j)
        if (!contains(tau.apply(basis_column(j)))) return false;
    return true;
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of an empty list");
    int ambient = 0, total_rank = 0;
    for (const Lattice& p : parts) {
        ambient += p.ambient_dim();
        total_rank += p.rank();
    }
    IntMatrix block(ambient, total_rank);
    int row0 = 0, col0 = 0;
    for (const Lattice& p : parts) {
        for (int j = 0; j < p.rank(); ++j)
            for (int i = 0; i < p.ambient_dim(); ++i)
                block.at(row0 + i, col0 + j) = p.basis().at(i, j);
        row0 += p.ambient_dim();
        col0 += p.rank();
    }
    return Lattice::from_matrix_columns(block);
}

Int lattice_index(const Lattice& sub, const Lattice& super) {
    if (sub.ambient_dim() != super.ambient_dim())
        throw std::invalid_argument("index: ambient dimensions differ");
    if (sub.rank() != super.rank())
        throw std::invalid_argument("index: ranks differ");
    if (sub.rank() == 0) return 1;
    IntMatrix coords(super.rank(), sub.rank());
    for (int j = 0; j < sub.rank(); ++j) {
        auto c = super.coordinates(sub.basis_column(j));
        if (!c) throw std::invalid_argument("index: sublattice is not contained in the superlattice");
        for (int i = 0; i < super.rank(); ++i) coords.at(i, j) = (*c)[static_cast<std::size_t>(i)];
    }
    return abs(bareiss_determinant(coords));
}

std::vector<Permutation> sym_automorphisms(const Lattice& lattice) {
    const int n = lattice.ambient_dim();
    if (n > 8) throw std::invalid_argument("sym_automorphisms: ambient dimension capped at 8");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        Permutation tau(images);
        if (lattice.is_invariant_under(tau)) out.push_back(tau);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace permlat
