#ifndef COEXPAND_LINALG_HPP
#define COEXPAND_LINALG_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace coexpand {

/**
 * Smith normal form U*M*V = S with U, V unimodular and S diagonal with a
 * divisibility chain d1 | d2 | ... | dr, all di >= 0.
 */
struct SNFResult {
    IntMatrix U; // rows(M) x rows(M)
    IntMatrix S; // rows(M) x cols(M)
    IntMatrix V; // cols(M) x cols(M)

    std::size_t rank() const {
        std::size_t r = 0, n = std::min(S.rows(), S.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (S(i, i) != 0) ++r;
        return r;
    }

    // Nonzero diagonal entries in chain order.
    IntVec invariant_factors() const {
        IntVec d;
        std::size_t n = std::min(S.rows(), S.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (S(i, i) != 0) d.push_back(S(i, i));
        return d;
    }
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[a] += f * row[b]
inline void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += f * m(b, j);
}

inline void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += f * m(i, b);
}

inline void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

inline void negate_col(IntMatrix& m, std::size_t a) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

} // namespace detail

/**
 * Integer row/column reduction with the minimal-absolute-value pivot rule.
 * Dimensions here are desk scale, so no modular arithmetic is used and the
 * transforms are carried along explicitly.
 */
inline SNFResult smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    SNFResult res{IntMatrix::identity(R), m, IntMatrix::identity(C)};
    IntMatrix& S = res.S;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    std::size_t t = 0;
    const std::size_t nmin = std::min(R, C);
    while (t < nmin) {
        // Pivot: nonzero entry of minimal absolute value in the working block.
        std::size_t pi = t, pj = t;
        Integer best = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (S(i, j) == 0) continue;
                Integer a = int_abs(S(i, j));
                if (best == 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break; // block is zero

        detail::swap_rows(S, t, pi);
        detail::swap_rows(U, t, pi);
        detail::swap_cols(S, t, pj);
        detail::swap_cols(V, t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (S(i, t) == 0) continue;
            Integer q = S(i, t) / S(t, t); // truncated division keeps remainders small
            detail::add_row(S, i, t, -q);
            detail::add_row(U, i, t, -q);
            if (S(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (S(t, j) == 0) continue;
            Integer q = S(t, j) / S(t, t);
            detail::add_col(S, j, t, -q);
            detail::add_col(V, j, t, -q);
            if (S(t, j) != 0) clean = false;
        }
        if (!clean) continue; // remainders left; pick a smaller pivot next pass

        if (S(t, t) < 0) {
            detail::negate_row(S, t);
            detail::negate_row(U, t);
        }
        ++t;
    }

    // Enforce the divisibility chain. With S diagonal, the (i, j) blocks are
    // isolated, so diag(a, b) can be rewritten to diag(gcd, a*b/gcd) by
    // unimodular operations touching only rows/columns i and j:
    //   R_i += R_j, then Euclid on the two entries of row i by column ops,
    //   then clear the leftover entry of column i (divisible by the gcd).
    auto fix_pair = [&](std::size_t i, std::size_t j) {
        detail::add_row(S, i, j, 1);
        detail::add_row(U, i, j, 1);
        while (S(i, j) != 0) {
            if (S(i, i) != 0) {
                Integer q = S(i, i) / S(i, j);
                detail::add_col(S, i, j, -q);
                detail::add_col(V, i, j, -q);
            }
            detail::swap_cols(S, i, j);
            detail::swap_cols(V, i, j);
        }
        if (S(j, i) != 0) {
            Integer q = S(j, i) / S(i, i);
            detail::add_row(S, j, i, -q);
            detail::add_row(U, j, i, -q);
        }
        if (S(i, i) < 0) {
            detail::negate_row(S, i);
            detail::negate_row(U, i);
        }
        if (S(j, j) < 0) {
            detail::negate_row(S, j);
            detail::negate_row(U, j);
        }
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (S(j, j) % S(i, i) != 0) {
                    fix_pair(i, j);
                    changed = true;
                }
    }
    return res;
}

/**
 * Reduced row echelon form over the rationals. Returns the reduced matrix and
 * the pivot column of each pivot row.
 */
inline std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        Rational inv = a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) /= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).second.size(); }
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

/**
 * Basis of the null space {x : M x = 0}; one vector per free column,
 * linearly independent by construction.
 */
inline std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    auto [a, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<RatVec> kernel_basis(const IntMatrix& m) {
    return kernel_basis(to_rational(m));
}

/**
 * Basis of the column space: the original columns at the pivot positions.
 */
inline std::vector<RatVec> image_basis(const RatMatrix& m) {
    auto pivots = rref(m).second;
    std::vector<RatVec> basis;
    basis.reserve(pivots.size());
    for (auto c : pivots) basis.push_back(m.col(c));
    return basis;
}

inline std::vector<RatVec> image_basis(const IntMatrix& m) {
    return image_basis(to_rational(m));
}

/**
 * One rational solution of M x = b, or nullopt when b is outside the image.
 */
inline std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw IndexError("solve: shape mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [a, pivots] = rref(aug);
    for (auto c : pivots)
        if (c == m.cols()) return std::nullopt;
    RatVec x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a(r, m.cols());
    return x;
}

/**
 * Exact determinant by Bareiss fraction-free elimination.
 */
inline Integer det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw IndexError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            detail::swap_rows(a, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

/**
 * Determinant of the square submatrix picked by strictly increasing row and
 * column index sets of equal size.
 */
inline Integer minor_det(const IntMatrix& m, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size())
        throw IndexError("minor requires equal numbers of rows and columns");
    return det_bareiss(m.submatrix(rows, cols));
}

/**
 * One integer solution of M x = b, or nullopt when none exists over Z.
 * Uses U*M*V = S: with y = V^-1 x the system is S y = U b, solvable iff each
 * diagonal entry divides its right side (and zero rows match).
 */
inline std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b,
                                           const SNFResult& snf) {
    if (b.size() != m.rows()) throw IndexError("solve_integer: shape mismatch");
    IntVec ub = snf.U.apply(b);
    const std::size_t n = m.cols();
    IntVec y(n, Integer(0));
    const std::size_t nmin = std::min(m.rows(), n);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        Integer d = (i < nmin) ? snf.S(i, i) : Integer(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return snf.V.apply(y);
}

inline std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b) {
    return solve_integer(m, b, smith_normal_form(m));
}

/**
 * Basis of the integer null lattice {x in Z^n : M x = 0}: columns of V at the
 * zero diagonal positions of the Smith form.
 */
inline std::vector<IntVec> integer_kernel_basis(const IntMatrix& m, const SNFResult& snf) {
    std::vector<IntVec> basis;
    const std::size_t n = m.cols();
    const std::size_t nmin = std::min(m.rows(), n);
    for (std::size_t j = 0; j < n; ++j) {
        bool zero_diag = (j >= nmin) || (snf.S(j, j) == 0);
        if (!zero_diag) continue;
        basis.push_back(snf.V.col(j));
    }
    return basis;
}

} // namespace coexpand

#endif // COEXPAND_LINALG_HPP
