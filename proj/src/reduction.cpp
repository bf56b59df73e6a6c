#include "permlat/reduction.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace permlat {

namespace {

// Gram-Schmidt data over Q computed from the Gram matrix alone:
// mu[i][j] = <b_i, b_j*> / B_j for j < i, B[i] = |b_i*|^2.
struct Gso {
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> B;
};

Gso gso_from_gram(const IntMatrix& g) {
    const int r = g.rows();
    Gso out;
    out.mu.assign(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(r), Rat(0)));
    out.B.assign(static_cast<std::size_t>(r), Rat(0));
    // ip[i][j] = <b_i, b_j*>
    std::vector<std::vector<Rat>> ip(static_cast<std::size_t>(r),
                                     std::vector<Rat>(static_cast<std::size_t>(r), Rat(0)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j <= i; ++j) {
            Rat s = Rat(g.at(i, j));
            for (int k = 0; k < j; ++k)
                s -= out.mu[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                     ip[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            ip[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            if (j < i)
                out.mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    s / out.B[static_cast<std::size_t>(j)];
            else
                out.B[static_cast<std::size_t>(i)] = s;
        }
        if (out.B[static_cast<std::size_t>(i)] <= 0)
            throw std::invalid_argument("basis columns are not linearly independent");
    }
    return out;
}

void subtract_column_multiple(IntMatrix& b, int dst, int src, const Int& q) {
    for (int i = 0; i < b.rows(); ++i) b.at(i, dst) -= q * b.at(i, src);
}

// core Fincke-Pohst recursion over the Gram form of `basis`; returns one
// representative of each +- pair (topmost nonzero coefficient positive)
std::vector<std::vector<Int>> enumerate_half(const IntMatrix& basis, const Int& bound_sq) {
    const int r = basis.cols();
    std::vector<std::vector<Int>> found;
    if (r == 0) return found;
    const Gso gso = gso_from_gram(gram_matrix(basis));
    std::vector<Int> coeff(static_cast<std::size_t>(r), Int(0));
    const Rat budget = Rat(bound_sq);

    // level i consumes remaining budget; higher levels already chosen
    std::function<void(int, const Rat&, bool)> descend = [&](int i, const Rat& remaining, bool higher_zero) {
        // center of the allowed interval for coeff[i] is -t, where
        // t = sum_{j>i} mu[j][i] c_j
        Rat t(0);
        for (int j = i + 1; j < r; ++j)
            t += gso.mu[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                 Rat(coeff[static_cast<std::size_t>(j)]);
        const Rat center = -t;
        const Rat radius_sq = remaining / gso.B[static_cast<std::size_t>(i)];

        // integer window [lo, hi] with (m - center)^2 <= radius_sq
        Int hi = floor_rat(center);
        while ((Rat(hi + 1) - center) <= 0 || (Rat(hi + 1) - center) * (Rat(hi + 1) - center) <= radius_sq)
            ++hi;
        Int lo = ceil_rat(center);
        while ((Rat(lo - 1) - center) >= 0 || (Rat(lo - 1) - center) * (Rat(lo - 1) - center) <= radius_sq)
            --lo;
        if (higher_zero && lo < 0) lo = 0;

        for (Int m = lo; m <= hi; ++m) {
            const Rat dev = Rat(m) - center;
            const Rat used = gso.B[static_cast<std::size_t>(i)] * dev * dev;
            if (used > remaining) continue;
            coeff[static_cast<std::size_t>(i)] = m;
            const bool zero_so_far = higher_zero && m == 0;
            if (i == 0) {
                if (!zero_so_far) {
                    std::vector<Int> v(static_cast<std::size_t>(basis.rows()), Int(0));
                    for (int row = 0; row < basis.rows(); ++row)
                        for (int j = 0; j < r; ++j)
                            v[static_cast<std::size_t>(row)] += basis.at(row, j) * coeff[static_cast<std::size_t>(j)];
                    found.push_back(std::move(v));
                }
            } else {
                descend(i - 1, remaining - used, zero_so_far);
            }
        }
        coeff[static_cast<std::size_t>(i)] = 0;
    };
    descend(r - 1, budget, true);
    return found;
}

std::vector<Int> sign_normalized(const std::vector<Int>& v) {
    for (const Int& x : v) {
        if (x > 0) return v;
        if (x < 0) {
            std::vector<Int> w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
            return w;
        }
    }
    return v;
}

void sort_by_norm_then_lex(std::vector<std::vector<Int>>& vecs) {
    std::sort(vecs.begin(), vecs.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
        const Int na = norm_sq(a), nb = norm_sq(b);
        if (na != nb) return na < nb;
        return lex_less(a, b);
    });
}

std::vector<std::vector<Int>> mirror_and_sort(std::vector<std::vector<Int>> half) {
    std::vector<std::vector<Int>> out;
    out.reserve(half.size() * 2);
    for (auto& v : half) {
        std::vector<Int> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        out.push_back(std::move(v));
        out.push_back(std::move(neg));
    }
    sort_by_norm_then_lex(out);
    return out;
}

// incremental linear independence over Q (row echelon of accepted vectors)
class IndependentSet {
public:
    bool try_add(const std::vector<Int>& v) {
        std::vector<Rat> row;
        row.reserve(v.size());
        for (const Int& x : v) row.emplace_back(x);
        for (const auto& [pivot, er] : rows_) {
            const Rat c = row[static_cast<std::size_t>(pivot)];
            if (c == 0) continue;
            for (std::size_t i = 0; i < row.size(); ++i) row[i] -= c * er[i];
        }
        int pivot = -1;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) { pivot = static_cast<int>(i); break; }
        if (pivot < 0) return false;
        const Rat p = row[static_cast<std::size_t>(pivot)];
        for (auto& x : row) x /= p;
        rows_.emplace_back(pivot, std::move(row));
        return true;
    }
    int size() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::pair<int, std::vector<Rat>>> rows_;
};

}  // namespace

IntMatrix lll_reduce(const Lattice& lattice, const Rat& delta) {
    if (delta <= make_rat(1, 4) || delta >= 1)
        throw std::invalid_argument("LLL delta must lie in (1/4, 1)");
    IntMatrix b = lattice.basis();
    const int r = b.cols();
    if (r <= 1) return b;

    Gso gso = gso_from_gram(gram_matrix(b));
    int k = 1;
    while (k < r) {
        // size-reduce column k; mu row updates keep the GSO exact
        for (int j = k - 1; j >= 0; --j) {
            const Int q = round_rat(gso.mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
            if (q == 0) continue;
            subtract_column_multiple(b, k, j, q);
            for (int l = 0; l < j; ++l)
                gso.mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] -=
                    Rat(q) * gso.mu[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
            gso.mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -= Rat(q);
        }
        const Rat mu_k = gso.mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)];
        if (gso.B[static_cast<std::size_t>(k)] >= (delta - mu_k * mu_k) * gso.B[static_cast<std::size_t>(k - 1)]) {
            ++k;
        } else {
            b.swap_columns(k, k - 1);
            gso = gso_from_gram(gram_matrix(b));
            k = std::max(k - 1, 1);
        }
    }
    return b;
}

std::vector<std::vector<Int>> short_vectors(const Lattice& lattice, const Int& bound_sq) {
    if (bound_sq < 1) throw std::invalid_argument("short_vectors: bound must be >= 1");
    if (lattice.rank() == 0) return {};
    const IntMatrix reduced = lll_reduce(lattice);
    return mirror_and_sort(enumerate_half(reduced, bound_sq));
}

MinimaProfile successive_minima(const Lattice& lattice) {
    if (lattice.rank() < 1) throw std::invalid_argument("successive minima require rank >= 1");
    const int r = lattice.rank();
    const IntMatrix reduced = lll_reduce(lattice);

    Int bound = norm_sq(reduced.column(0));
    for (int j = 1; j < r; ++j) bound = std::min(bound, norm_sq(reduced.column(j)));

    for (;;) {
        std::vector<std::vector<Int>> reps = enumerate_half(reduced, bound);
        for (auto& v : reps) v = sign_normalized(v);
        sort_by_norm_then_lex(reps);

        MinimaProfile profile;
        IndependentSet indep;
        for (const auto& v : reps) {
            if (indep.try_add(v)) {
                profile.minima_sq.push_back(norm_sq(v));
                profile.attaining.push_back(v);
                if (indep.size() == r) return profile;
            }
        }
        bound *= 2;
    }
}

MinimalVectorSet minimal_vectors(const Lattice& lattice) {
    const MinimaProfile profile = successive_minima(lattice);
    const Int lambda1 = profile.minima_sq.front();
    std::vector<std::vector<Int>> vecs = short_vectors(lattice, lambda1);
    std::erase_if(vecs, [&](const std::vector<Int>& v) { return norm_sq(v) != lambda1; });
    return {lambda1, std::move(vecs)};
}

bool is_well_rounded(const Lattice& lattice) {
    const MinimaProfile profile = successive_minima(lattice);
    return profile.minima_sq.front() == profile.minima_sq.back();
}

bool is_minkowskian(const Lattice& lattice) {
    if (lattice.rank() < 1) throw std::invalid_argument("is_minkowskian requires rank >= 1");
    if (lattice.rank() > 6) throw std::invalid_argument("is_minkowskian: rank capped at 6");
    const int r = lattice.rank();
    const MinimaProfile profile = successive_minima(lattice);

    std::vector<std::vector<Int>> reps = enumerate_half(lll_reduce(lattice), profile.minima_sq.back());
    for (auto& v : reps) v = sign_normalized(v);
    sort_by_norm_then_lex(reps);

    // integer coordinates of each candidate in the lattice basis
    std::vector<std::vector<Int>> coords;
    coords.reserve(reps.size());
    for (const auto& v : reps) {
        auto c = lattice.coordinates(v);
        if (!c) throw std::logic_error("enumerated vector is not a lattice member");
        coords.push_back(*c);
    }

    // pick v_i with |v_i|^2 = lambda_i^2, independent, with unit coordinate
    // determinant; candidates within an equal-norm run are taken in increasing
    // index order to avoid revisiting permutations
    std::vector<int> chosen;
    std::function<bool(int, int)> search = [&](int level, int min_index) -> bool {
        if (level == r) {
            IntMatrix m(r, r);
            for (int j = 0; j < r; ++j)
                for (int i = 0; i < r; ++i)
                    m.at(i, j) = coords[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])]
                                       [static_cast<std::size_t>(i)];
            return abs(bareiss_determinant(m)) == 1;
        }
        const Int target = profile.minima_sq[static_cast<std::size_t>(level)];
        const bool same_run = level > 0 && profile.minima_sq[static_cast<std::size_t>(level - 1)] == target;
        const int start = same_run ? min_index : 0;
        for (int idx = start; idx < static_cast<int>(reps.size()); ++idx) {
            if (norm_sq(reps[static_cast<std::size_t>(idx)]) != target) continue;
            IndependentSet indep;
            bool ok = true;
            for (int c : chosen)
                ok = ok && indep.try_add(reps[static_cast<std::size_t>(c)]);
            if (!ok || !indep.try_add(reps[static_cast<std::size_t>(idx)])) continue;
            chosen.push_back(idx);
            if (search(level + 1, idx + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return search(0, 0);
}

std::vector<std::vector<Int>> short_vectors_by_box(const Lattice& lattice, const Int& bound_sq) {
    if (bound_sq < 1) throw std::invalid_argument("short_vectors_by_box: bound must be >= 1");
    const int r = lattice.rank();
    if (r == 0) return {};
    const IntMatrix& basis = lattice.basis();
    const RatMatrix ginv = rat_inverse(to_rational(gram_matrix(basis)));

    // |c_i| <= sqrt(bound * (G^{-1})_{ii}) for any lattice vector within bound
    std::vector<Int> box(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        box[static_cast<std::size_t>(i)] = isqrt(floor_rat(Rat(bound_sq) * ginv.at(i, i)));

    std::vector<std::vector<Int>> out;
    std::vector<Int> c(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = -box[static_cast<std::size_t>(i)];
    for (;;) {
        if (!is_zero_vector(c)) {
            std::vector<Int> v(static_cast<std::size_t>(basis.rows()), Int(0));
            for (int row = 0; row < basis.rows(); ++row)
                for (int j = 0; j < r; ++j)
                    v[static_cast<std::size_t>(row)] += basis.at(row, j) * c[static_cast<std::size_t>(j)];
            if (norm_sq(v) <= bound_sq) out.push_back(std::move(v));
        }
        int i = 0;
        while (i < r && c[static_cast<std::size_t>(i)] == box[static_cast<std::size_t>(i)]) {
            c[static_cast<std::size_t>(i)] = -box[static_cast<std::size_t>(i)];
            ++i;
        }
        if (i == r) break;
        ++c[static_cast<std::size_t>(i)];
    }
    sort_by_norm_then_lex(out);
    return out;
}

bool verify_well_rounded_by_box(const Lattice& lattice, const Int& lambda1_sq) {
    const std::vector<std::vector<Int>> vecs = short_vectors_by_box(lattice, lambda1_sq);
    if (vecs.empty()) return false;
    IndependentSet indep;
    for (const auto& v : vecs) {
        if (norm_sq(v) < lambda1_sq) return false;  // claimed minimum was not minimal
        indep.try_add(v);
    }
    return indep.size() == lattice.rank();
}

}  // namespace permlat
