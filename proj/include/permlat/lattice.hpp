#pragma once

#include <optional>
#include <vector>

#include "permlat/matrix.hpp"
#include "permlat/perm.hpp"

namespace permlat {

struct GramData {
    IntMatrix gram;  // b^t b, symmetric positive definite
    Int det_sq;      // det(gram) = squared lattice determinant
};

// An integer lattice of rank r in Z^n, held as an n x r basis matrix in
// canonical column-style HNF. Canonical form makes equality a field-by-field
// comparison. Rank-deficient lattices are first class; rank 0 is allowed and
// carries an empty basis.
class Lattice {
public:
    static Lattice from_generators(const std::vector<std::vector<Int>>& vectors, int ambient_dim);
    static Lattice from_matrix_columns(const IntMatrix& generators);
    static Lattice standard(int n);  // Z^n

    int ambient_dim() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    bool is_full_rank() const { return rank() == ambient_; }
    const IntMatrix& basis() const { return basis_; }
    std::vector<Int> basis_column(int j) const { return basis_.column(j); }

    bool operator==(const Lattice& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }
    bool operator!=(const Lattice& other) const { return !(*this == other); }

    bool contains(const std::vector<Int>& v) const;
    // integer coordinates of v in the basis, if v is a member
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

    GramData gram() const;       // rank >= 1
    Int det_sq() const;          // rank >= 1
    Int abs_det() const;         // full rank only

    bool is_invariant_under(const Permutation& tau) const;

private:
    Lattice(int ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    int ambient_;
    IntMatrix basis_;
};

Lattice direct_sum(const std::vector<Lattice>& parts);

// [super : sub] for sub of equal rank contained in super
Int lattice_index(const Lattice& sub, const Lattice& super);

// Aut(L) intersected with S_n, by exhaustive search; ambient_dim <= 8
std::vector<Permutation> sym_automorphisms(const Lattice& lattice);

}  // namespace permlat
