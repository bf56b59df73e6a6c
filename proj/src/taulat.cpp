#include "permlat/taulat.hpp"

#include <algorithm>
#include <stdexcept>

#include "permlat/rng.hpp"

namespace permlat {

namespace {

// reduced column echelon form: unit pivots with strictly increasing pivot
// rows, each pivot the only nonzero entry of its row
RatMatrix reduced_column_echelon(const RatMatrix& m) {
    RatMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int fixed = 0;
    for (int row = 0; row < rows && fixed < cols; ++row) {
        int p = -1;
        for (int j = fixed; j < cols; ++j)
            if (a.at(row, j) != 0) { p = j; break; }
        if (p < 0) continue;
        a.swap_columns(p, fixed);
        const Rat piv = a.at(row, fixed);
        for (int i = 0; i < rows; ++i) a.at(i, fixed) /= piv;
        for (int j = 0; j < cols; ++j) {
            if (j == fixed || a.at(row, j) == 0) continue;
            const Rat f = a.at(row, j);
            for (int i = 0; i < rows; ++i) a.at(i, j) -= f * a.at(i, fixed);
        }
        ++fixed;
    }
    RatMatrix out(rows, fixed);
    for (int j = 0; j < fixed; ++j)
        for (int i = 0; i < rows; ++i) out.at(i, j) = a.at(i, j);
    return out;
}

}  // namespace

Subspace::Subspace(int ambient_dim, const std::vector<std::vector<Rat>>& spanning_columns)
    : ambient_(ambient_dim) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
    RatMatrix raw = spanning_columns.empty()
                        ? RatMatrix(ambient_dim, 0)
                        : RatMatrix::from_columns(spanning_columns, ambient_dim);
    basis_ = reduced_column_echelon(raw);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("subspace membership: dimension mismatch");
    // eliminate v against the echelon basis
    std::vector<Rat> residual = v;
    int row = 0;
    for (int j = 0; j < basis_.cols(); ++j) {
        while (row < ambient_ && basis_.at(row, j) == 0) ++row;
        const Rat c = residual[static_cast<std::size_t>(row)];  // pivot is 1
        if (c != 0)
            for (int i = 0; i < ambient_; ++i)
                residual[static_cast<std::size_t>(i)] -= c * basis_.at(i, j);
        ++row;
    }
    for (const Rat& x : residual)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const std::vector<Int>& v) const {
    std::vector<Rat> q;
    q.reserve(v.size());
    for (const Int& x : v) q.emplace_back(x);
    return contains(q);
}

IntMatrix orbit_matrix(const std::vector<Int>& x, const Permutation& tau) {
    if (static_cast<int>(x.size()) != tau.degree())
        throw std::invalid_argument("orbit matrix: vector length does not match degree");
    const int nu = tau.order();
    IntMatrix m(tau.degree(), nu);
    std::vector<Int> cur = x;
    for (int j = 0; j < nu; ++j) {
        for (int i = 0; i < tau.degree(); ++i) m.at(i, j) = cur[static_cast<std::size_t>(i)];
        cur = tau.apply(cur);
    }
    return m;
}

Lattice orbit_lattice(const std::vector<Int>& x, const Permutation& tau) {
    if (is_zero_vector(x)) throw std::invalid_argument("orbit lattice of the zero vector");
    return Lattice::from_matrix_columns(orbit_matrix(x, tau));
}

int tau_order(const std::vector<Int>& x, const Permutation& tau) {
    if (is_zero_vector(x)) return 0;
    return rank(orbit_matrix(x, tau));
}

std::vector<Rat> cycle_constant_vector(const Permutation& tau, const std::vector<Rat>& values) {
    const auto cycles = tau.cycles();
    if (values.size() != cycles.size())
        throw std::invalid_argument("cycle_constant_vector: one value per cycle required");
    std::vector<Rat> out(static_cast<std::size_t>(tau.degree()), Rat(0));
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (int p : cycles[c]) out[static_cast<std::size_t>(p - 1)] = values[c];
    return out;
}

Subspace vf_basis(const IntPolynomial& f, int n) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("vf_basis: f must be monic and non-constant");
    if (f.degree() > n || !poly_divides(f, IntPolynomial::t_power_minus_one(n)))
        throw std::invalid_argument("vf_basis: f must divide t^n - 1");
    std::vector<std::vector<Rat>> cols;
    for (int shift = 0; shift + f.degree() <= n - 1; ++shift) {
        std::vector<Rat> col(static_cast<std::size_t>(n), Rat(0));
        for (int i = 0; i <= f.degree(); ++i)
            col[static_cast<std::size_t>(i + shift)] = Rat(f.coeff(i));
        cols.push_back(std::move(col));
    }
    return Subspace(n, cols);
}

Permutation align_to_standard_cycle(const Permutation& tau) {
    const int n = tau.degree();
    if (!tau.is_n_cycle()) throw std::invalid_argument("not an n-cycle");
    // rho(tau^j(1)) = j+1 gives tau = rho sigma_n rho^{-1}
    std::vector<int> images(static_cast<std::size_t>(n));
    int p = 1;
    for (int j = 0; j < n; ++j) {
        images[static_cast<std::size_t>(p - 1)] = j + 1;
        p = tau.image(p);
    }
    return Permutation(images);
}

std::vector<InvariantSubspace> invariant_subspaces_ncycle(const Permutation& tau) {
    const int n = tau.degree();
    const Permutation rho = align_to_standard_cycle(tau);
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<InvariantSubspace> out;
    const std::size_t subsets = (std::size_t{1} << divisors.size());
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        IntPolynomial f = IntPolynomial::one();
        for (std::size_t b = 0; b < divisors.size(); ++b)
            if (mask & (std::size_t{1} << b)) f = f * cyclotomic(divisors[b]);
        Subspace vf = vf_basis(f, n);
        std::vector<std::vector<Rat>> mapped;
        for (int j = 0; j < vf.dim(); ++j)
            mapped.push_back(rho.apply(vf.basis().column(j)));
        out.push_back({f, Subspace(n, mapped)});
    }
    // largest subspaces first; ties by divisor text for a stable order
    std::stable_sort(out.begin(), out.end(), [](const InvariantSubspace& a, const InvariantSubspace& b) {
        if (a.space.dim() != b.space.dim()) return a.space.dim() > b.space.dim();
        return a.divisor.to_string() < b.divisor.to_string();
    });
    return out;
}

bool is_generic(const std::vector<Int>& x, const Permutation& tau) {
    if (is_zero_vector(x)) throw std::invalid_argument("is_generic: zero vector");
    return tau_order(x, tau) == generic_order(tau.cycle_type()).o_generic;
}

SampleMode parse_sample_mode(const std::string& text) {
    if (text == "orbit") return SampleMode::orbit;
    if (text == "orbit-span") return SampleMode::orbit_span;
    if (text == "direct-sum") return SampleMode::direct_sum;
    throw std::invalid_argument("unknown sample mode: '" + text + "'");
}

std::string to_string(SampleMode mode) {
    switch (mode) {
        case SampleMode::orbit: return "orbit";
        case SampleMode::orbit_span: return "orbit-span";
        case SampleMode::direct_sum: return "direct-sum";
    }
    throw std::logic_error("unreachable");
}

namespace {

constexpr int kOrbitAttemptCap = 10;

RandomLatticeResult sample_orbit_span(const Permutation& tau, long box, std::uint64_t seed) {
    const int n = tau.degree();
    std::vector<std::vector<Int>> pool;
    std::vector<std::vector<Int>> generators;
    Lattice lattice = Lattice::from_generators({}, n);
    int attempts = 0;
    while (attempts < kOrbitAttemptCap && lattice.rank() < n) {
        SplitMix64 rng(sub_seed(seed, static_cast<std::uint64_t>(attempts)));
        std::vector<Int> x = rng.uniform_nonzero_vector(n, box);
        generators.push_back(x);
        for (const auto& col : orbit_matrix(x, tau).columns()) pool.push_back(col);
        lattice = Lattice::from_generators(pool, n);
        ++attempts;
    }
    return {lattice, lattice.rank() == n, attempts, generators};
}

RandomLatticeResult sample_direct_sum(const Permutation& tau, long box, std::uint64_t seed) {
    const int n = tau.degree();
    std::vector<std::vector<Int>> pool;
    std::vector<std::vector<Int>> generators;
    bool all_blocks_full = true;
    std::uint64_t stream = 0;

    std::vector<int> fixed_points;
    for (const auto& cycle : tau.cycles()) {
        if (cycle.size() == 1) {
            fixed_points.push_back(cycle.front());
            continue;
        }
        const int k = static_cast<int>(cycle.size());
        // orbit block supported on this cycle's coordinates; resample until the
        // block reaches rank k
        bool ok = false;
        for (int attempt = 0; attempt < kOrbitAttemptCap && !ok; ++attempt) {
            SplitMix64 rng(sub_seed(seed, stream++));
            std::vector<Int> x(static_cast<std::size_t>(n), Int(0));
            for (int p : cycle) x[static_cast<std::size_t>(p - 1)] = Int(rng.uniform(-box, box));
            if (is_zero_vector(x)) continue;
            if (tau_order(x, tau) == k) {
                generators.push_back(x);
                for (const auto& col : orbit_matrix(x, tau).columns()) pool.push_back(col);
                ok = true;
            }
        }
        all_blocks_full = all_blocks_full && ok;
    }

    const int q = static_cast<int>(fixed_points.size());
    if (q > 0) {
        // arbitrary full-rank integer lattice on the fixed-point coordinates
        bool ok = false;
        for (int attempt = 0; attempt < kOrbitAttemptCap && !ok; ++attempt) {
            SplitMix64 rng(sub_seed(seed, stream++));
            IntMatrix omega(q, q);
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j) omega.at(i, j) = Int(rng.uniform(-box, box));
            if (bareiss_determinant(omega) == 0) continue;
            for (int j = 0; j < q; ++j) {
                std::vector<Int> col(static_cast<std::size_t>(n), Int(0));
                for (int i = 0; i < q; ++i)
                    col[static_cast<std::size_t>(fixed_points[static_cast<std::size_t>(i)] - 1)] =
                        omega.at(i, j);
                generators.push_back(col);
                pool.push_back(col);
            }
            ok = true;
        }
        all_blocks_full = all_blocks_full && ok;
    }

    Lattice lattice = Lattice::from_generators(pool, n);
    return {lattice, lattice.rank() == n && all_blocks_full, 0, generators};
}

}  // namespace

RandomLatticeResult random_invariant_lattice(const Permutation& tau, long box,
                                             SampleMode mode, std::uint64_t seed) {
    if (box < 1) throw std::invalid_argument("box bound must be >= 1");
    RandomLatticeResult result =
        mode == SampleMode::orbit_span ? sample_orbit_span(tau, box, seed)
        : mode == SampleMode::direct_sum
            ? sample_direct_sum(tau, box, seed)
            : throw std::invalid_argument("random_invariant_lattice supports orbit-span and direct-sum");
    if (result.lattice.rank() > 0 && !result.lattice.is_invariant_under(tau))
        throw std::logic_error("sampled lattice failed the invariance check");
    return result;
}

}  // namespace permlat
