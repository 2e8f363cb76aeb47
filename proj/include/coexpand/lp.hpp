#ifndef COEXPAND_LP_HPP
#define COEXPAND_LP_HPP

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace coexpand {

enum class LpStatus { optimal, infeasible, unbounded };

/**
 * Result of min c^T x subject to G x = h, x >= 0 over exact rationals.
 * At optimality the dual y (indexed by original rows, zero on redundant rows
 * dropped in phase 1) satisfies y^T h = value and c_j - y^T G_j >= 0 for all j.
 */
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    RatVec x;
    RatVec dual;
};

/**
 * Primal simplex with Bland's anti-cycling rule on a dense exact tableau,
 * in two phases. Bland's rule guarantees termination; with exact arithmetic
 * optimality is an equality, not a tolerance.
 */
inline LpSolution solve_lp(const RatMatrix& G, const RatVec& h, const RatVec& c) {
    const std::size_t n = G.cols();
    if (h.size() != G.rows() || c.size() != n) throw IndexError("lp: shape mismatch");

    // Tableau rows: [structural columns | artificial columns | rhs], with row
    // signs normalized so every rhs is nonnegative.
    std::vector<RatVec> tab;
    std::vector<int> row_sign;
    std::vector<std::size_t> orig_row;
    const std::size_t m0 = G.rows();
    for (std::size_t i = 0; i < m0; ++i) {
        int s = (h[i] < 0) ? -1 : 1;
        RatVec row(n + m0 + 1, Rational(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = s * G(i, j);
        row[n + i] = 1;
        row[n + m0] = s * h[i];
        tab.push_back(std::move(row));
        row_sign.push_back(s);
        orig_row.push_back(i);
    }
    std::vector<std::size_t> basis(m0);
    for (std::size_t i = 0; i < m0; ++i) basis[i] = n + i;

    auto pivot = [&](std::size_t pi, std::size_t pj) {
        RatVec& prow = tab[pi];
        Rational piv = prow[pj];
        for (auto& x : prow) x /= piv;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (i == pi || tab[i][pj] == 0) continue;
            Rational f = tab[i][pj];
            for (std::size_t j = 0; j < tab[i].size(); ++j) tab[i][j] -= f * prow[j];
        }
        basis[pi] = pj;
    };

    // One simplex run over the first `ncols` columns of the tableau under the
    // given costs. Returns false on unboundedness.
    auto run = [&](const RatVec& cost, std::size_t ncols) -> bool {
        for (;;) {
            RatVec cb(tab.size());
            for (std::size_t i = 0; i < tab.size(); ++i) cb[i] = cost[basis[i]];
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
                Rational red = cost[j];
                for (std::size_t i = 0; i < tab.size(); ++i)
                    if (tab[i][j] != 0) red -= cb[i] * tab[i][j];
                if (red < 0) enter = j;
            }
            if (enter == ncols) return true;
            std::size_t leave = tab.size();
            Rational best;
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (tab[i][enter] <= 0) continue;
                Rational ratio = tab[i].back() / tab[i][enter];
                if (leave == tab.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tab.size()) return false;
            pivot(leave, enter);
        }
    };

    // Phase 1: minimize the artificial total. Restricting the entering scan
    // to structural columns keeps artificials from re-entering once out.
    RatVec c1(n + m0, Rational(0));
    for (std::size_t k = 0; k < m0; ++k) c1[n + k] = 1;
    if (!run(c1, n)) throw UnboundedError("phase one cannot be unbounded");
    Rational art_total = 0;
    for (std::size_t i = 0; i < tab.size(); ++i)
        if (basis[i] >= n) art_total += tab[i].back();
    LpSolution out;
    if (art_total != 0) {
        out.status = LpStatus::infeasible;
        return out;
    }

    // Drive leftover zero-value artificials out of the basis; a row with no
    // structural pivot left is a dependent combination of others and is
    // dropped (its dual component stays zero).
    for (std::size_t i = 0; i < tab.size();) {
        if (basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t j = 0;
        while (j < n && tab[i][j] == 0) ++j;
        if (j < n) {
            pivot(i, j);
            ++i;
        } else {
            tab.erase(tab.begin() + i);
            basis.erase(basis.begin() + i);
            row_sign.erase(row_sign.begin() + i);
            orig_row.erase(orig_row.begin() + i);
        }
    }

    // Phase 2.
    RatVec c2(n + m0, Rational(0));
    for (std::size_t j = 0; j < n; ++j) c2[j] = c[j];
    if (!run(c2, n)) {
        out.status = LpStatus::unbounded;
        return out;
    }

    out.status = LpStatus::optimal;
    out.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.size(); ++i) out.x[basis[i]] = tab[i].back();
    out.value = 0;
    for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];

    // Dual recovery from scratch: solve B^T y = c_B on the surviving scaled
    // rows, then undo the row scaling. Independent of the pivot history.
    const std::size_t m = tab.size();
    RatMatrix BT(m, m);
    RatVec cb(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t r = 0; r < m; ++r)
            BT(k, r) = row_sign[r] * G(orig_row[r], basis[k]);
        cb[k] = c[basis[k]];
    }
    auto y = solve(BT, cb);
    out.dual.assign(m0, Rational(0));
    if (y)
        for (std::size_t r = 0; r < m; ++r)
            out.dual[orig_row[r]] = row_sign[r] * (*y)[r];
    return out;
}

} // namespace coexpand

#endif // COEXPAND_LP_HPP
