#include "permlat/matrix.hpp"

#include <algorithm>

namespace permlat {

IntMatrix permutation_matrix(const Permutation& tau) {
    const int n = tau.degree();
    IntMatrix t(n, n);
    // row i has its single 1 at column tau(i), so that T x = tau(x)
    for (int i = 1; i <= n; ++i) t.at(i - 1, tau.image(i) - 1) = 1;
    return t;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
    return out;
}

IntMatrix clear_denominators_by_row(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Int den = 1;
        for (int j = 0; j < m.cols(); ++j) den = lcm(den, Int(m.at(i, j).get_den()));
        for (int j = 0; j < m.cols(); ++j) {
            Rat scaled = m.at(i, j) * Rat(den);
            out.at(i, j) = Int(scaled.get_num());
        }
    }
    return out;
}

// Fraction-free elimination with row pivoting and column skipping; divisions
// stay exact because every intermediate entry is a minor of the input.
int rank(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) a.swap_rows(p, r);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

int rank(const RatMatrix& m) {
    return rank(clear_denominators_by_row(m));
}

Int bareiss_determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant requires a square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a.at(i, k) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != k) { a.swap_rows(p, k); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

HnfResult hnf(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(cols);

    auto add_column_multiple = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) h.at(i, dst) -= q * h.at(i, src);
        for (int i = 0; i < cols; ++i) u.at(i, dst) -= q * u.at(i, src);
    };
    auto negate_column = [&](int j) {
        for (int i = 0; i < rows; ++i) h.at(i, j) = -h.at(i, j);
        for (int i = 0; i < cols; ++i) u.at(i, j) = -u.at(i, j);
    };
    auto swap_columns = [&](int a, int b) {
        if (a == b) return;
        h.swap_columns(a, b);
        u.swap_columns(a, b);
    };

    int fixed = 0;
    for (int row = 0; row < rows && fixed < cols; ++row) {
        // gcd-reduce the active part of this row to a single entry
        for (;;) {
            int best = -1;
            for (int j = fixed; j < cols; ++j) {
                if (h.at(row, j) == 0) continue;
                if (best < 0 || abs(h.at(row, j)) < abs(h.at(row, best))) best = j;
            }
            if (best < 0) break;
            swap_columns(best, fixed);
            bool others = false;
            for (int j = fixed + 1; j < cols; ++j) {
                if (h.at(row, j) == 0) continue;
                add_column_multiple(j, fixed, floor_div(h.at(row, j), h.at(row, fixed)));
                if (h.at(row, j) != 0) others = true;
            }
            if (!others) break;
        }
        if (h.at(row, fixed) == 0) continue;  // no pivot in this row
        if (h.at(row, fixed) < 0) negate_column(fixed);
        // reduce the already-fixed columns against the new pivot
        for (int k = 0; k < fixed; ++k)
            add_column_multiple(k, fixed, floor_div(h.at(row, k), h.at(row, fixed)));
        ++fixed;
    }
    return {std::move(h), std::move(u), fixed};
}

RatMatrix rat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse requires a square matrix");
    const int n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a.at(i, c) != 0) { p = i; break; }
        if (p < 0) throw std::invalid_argument("matrix is singular");
        if (p != c) { a.swap_rows(p, c); inv.swap_rows(p, c); }
        const Rat piv = a.at(c, c);
        for (int j = 0; j < n; ++j) { a.at(c, j) /= piv; inv.at(c, j) /= piv; }
        for (int i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            const Rat f = a.at(i, c);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

IntMatrix gram_matrix(const IntMatrix& basis) {
    const int r = basis.cols();
    IntMatrix g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Int s = 0;
            for (int k = 0; k < basis.rows(); ++k) s += basis.at(k, i) * basis.at(k, j);
            g.at(i, j) = s;
            g.at(j, i) = s;
        }
    return g;
}

}  // namespace permlat
