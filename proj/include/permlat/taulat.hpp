#pragma once

#include <cstdint>
#include <vector>

#include "permlat/lattice.hpp"
#include "permlat/matrix.hpp"
#include "permlat/perm.hpp"
#include "permlat/poly.hpp"

namespace permlat {

// Rational subspace of R^n, held in reduced column echelon form (unit pivots,
// each pivot alone in its row) so that equality is a matrix comparison.
class Subspace {
public:
    Subspace(int ambient_dim, const std::vector<std::vector<Rat>>& spanning_columns);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    const RatMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const std::vector<Int>& v) const;

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    int ambient_;
    RatMatrix basis_;
};

// M_tau(x) = (x tau(x) ... tau^{nu-1}(x)), nu the order of tau
IntMatrix orbit_matrix(const std::vector<Int>& x, const Permutation& tau);

// integer span of the orbit; x must be nonzero
Lattice orbit_lattice(const std::vector<Int>& x, const Permutation& tau);

// rank of the orbit lattice; 0 for the zero vector
int tau_order(const std::vector<Int>& x, const Permutation& tau);

// vector constant on each cycle of tau (cycles ordered by smallest element);
// always a fixed point of tau
std::vector<Rat> cycle_constant_vector(const Permutation& tau, const std::vector<Rat>& values);

// V(f) = { a : f(t) | a(t) }, for monic non-constant f dividing t^n - 1;
// spanned by the coefficient vectors of f, t f, ..., t^{n-1-deg f} f
Subspace vf_basis(const IntPolynomial& f, int n);

// rho with tau = rho sigma_n rho^{-1}, built by walking tau's cycle from 1
Permutation align_to_standard_cycle(const Permutation& tau);

struct InvariantSubspace {
    IntPolynomial divisor;  // f with the subspace equal to rho(V(f))
    Subspace space;
};

// all tau-invariant subspaces of an n-cycle: one per non-constant monic
// divisor of t^n - 1, i.e. 2^{#divisors of n} - 1 of them
std::vector<InvariantSubspace> invariant_subspaces_ncycle(const Permutation& tau);

// whether the orbit rank of x attains the generic value for tau's cycle type
bool is_generic(const std::vector<Int>& x, const Permutation& tau);

enum class SampleMode { orbit, orbit_span, direct_sum };

SampleMode parse_sample_mode(const std::string& text);
std::string to_string(SampleMode mode);

struct RandomLatticeResult {
    Lattice lattice;
    bool full_rank;
    int orbit_attempts;                       // orbit_span: orbits drawn
    std::vector<std::vector<Int>> generators; // sampled vectors that seeded the build
};

// Seeded tau-invariant lattice generator.
//   orbit_span: union of orbit lattices of i.i.d. box vectors until full rank
//               or 10 attempts.
//   direct_sum: one orbit block per cycle of length >= 2 plus an arbitrary
//               full-rank integer lattice on the fixed-point coordinates.
RandomLatticeResult random_invariant_lattice(const Permutation& tau, long box,
                                             SampleMode mode, std::uint64_t seed);

}  // namespace permlat
