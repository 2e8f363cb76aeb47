#ifndef COEXPAND_TU_HPP
#define COEXPAND_TU_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace coexpand {

struct MinorWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Integer det;
};

struct TUReport {
    bool is_tu = false;
    std::optional<MinorWitness> witness;
    enum class Method { exhaustive, row_criterion } method = Method::exhaustive;
    std::size_t minors_checked = 0;
};

/**
 * Sufficient condition: entries in {-1,0,1} and every row has at most one +1
 * and at most one -1.
 */
inline bool row_criterion(const IntMatrix& M) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
        int plus = 0, minus = 0;
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (M(i, j) == 1)
                ++plus;
            else if (M(i, j) == -1)
                ++minus;
            else if (M(i, j) != 0)
                return false;
        }
        if (plus > 1 || minus > 1) return false;
    }
    return true;
}

namespace detail_tu {

// Bareiss on a small copy in machine integers. Entries are in {-1,0,1}, so
// intermediate values stay below k^(k/2): safe in 64 bits through k = 20.
inline std::int64_t det64(std::int64_t* a, std::size_t k) {
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a[p * k + p] == 0) {
            std::size_t q = p + 1;
            while (q < k && a[q * k + p] == 0) ++q;
            if (q == k) return 0;
            for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[q * k + j]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i)
            for (std::size_t j = p + 1; j < k; ++j)
                a[i * k + j] = (a[i * k + j] * a[p * k + p] - a[i * k + p] * a[p * k + j]) / prev;
        prev = a[p * k + p];
    }
    return sign * a[k * k - 1];
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail_tu

/**
 * Exhaustive total-unimodularity test: every square minor must have
 * determinant -1, 0 or 1. Minors are scanned in increasing size with an early
 * exit, so a returned witness is size-minimal (and then has |det| = 2).
 * Exponential by nature; `size_guard` caps min(rows, cols) and callers may
 * raise it deliberately.
 */
inline TUReport is_totally_unimodular(const IntMatrix& M, std::size_t size_guard = 8) {
    TUReport rep;
    rep.method = TUReport::Method::exhaustive;
    const std::size_t nmin = std::min(M.rows(), M.cols());
    if (nmin > size_guard)
        throw SizeGuardError("matrix needs minors up to " + std::to_string(nmin) +
                             "x" + std::to_string(nmin) +
                             "; raise the guard to enumerate them");

    // 1x1 minors: every entry must already be in {-1,0,1}
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            ++rep.minors_checked;
            if (int_abs(M(i, j)) > 1) {
                rep.witness = MinorWitness{{i}, {j}, M(i, j)};
                return rep;
            }
        }

    std::vector<std::int64_t> buf;
    for (std::size_t k = 2; k <= nmin; ++k) {
        buf.resize(k * k);
        std::vector<std::size_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            std::vector<std::size_t> cols(k);
            for (std::size_t j = 0; j < k; ++j) cols[j] = j;
            do {
                Integer dv;
                if (k <= 20) {
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = 0; j < k; ++j)
                            buf[i * k + j] =
                                static_cast<std::int64_t>(M(rows[i], cols[j]));
                    dv = detail_tu::det64(buf.data(), k);
                } else {
                    dv = det_bareiss(M.submatrix(rows, cols));
                }
                ++rep.minors_checked;
                if (int_abs(dv) > 1) {
                    rep.witness = MinorWitness{rows, cols, dv};
                    return rep;
                }
            } while (detail_tu::next_combination(cols, M.cols()));
        } while (detail_tu::next_combination(rows, M.rows()));
    }
    rep.is_tu = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Hoffman-Kruskal polyhedra {u : b <= u <= b', c <= Mu <= c'}
// ---------------------------------------------------------------------------

struct Bound {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind = Kind::finite;
    Integer value;

    static Bound minus_inf() { return {Kind::neg_inf, 0}; }
    static Bound plus_inf() { return {Kind::pos_inf, 0}; }
    static Bound at(Integer v) { return {Kind::finite, std::move(v)}; }
    bool finite() const { return kind == Kind::finite; }
};

struct BoundsBox {
    std::vector<Bound> var_lo, var_hi; // length n
    std::vector<Bound> row_lo, row_hi; // length m

    void validate(std::size_t n, std::size_t m) const {
        if (var_lo.size() != n || var_hi.size() != n || row_lo.size() != m ||
            row_hi.size() != m)
            throw FormatError("bounds box has wrong lengths");
        for (std::size_t j = 0; j < n; ++j)
            if (var_lo[j].finite() && var_hi[j].finite() &&
                var_lo[j].value > var_hi[j].value)
                throw DomainError("variable bounds cross");
        for (std::size_t i = 0; i < m; ++i)
            if (row_lo[i].finite() && row_hi[i].finite() &&
                row_lo[i].value > row_hi[i].value)
                throw DomainError("row bounds cross");
    }
};

struct HKReport {
    std::vector<RatVec> vertices;
    bool all_integral = true;
    std::optional<RatVec> fractional_witness;
};

namespace detail_tu {

struct Halfspace {
    IntVec normal;  // a
    Integer rhs;    // a^T u <= rhs
};

struct DDVertex {
    RatVec x;
    std::vector<std::uint16_t> active; // sorted indices into the inserted list
};

inline Rational eval(const Halfspace& h, const RatVec& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (h.normal[i] != 0) s += Rational(h.normal[i]) * x[i];
    return s - Rational(h.rhs);
}

inline std::size_t common_active_count(const std::vector<std::uint16_t>& a,
                                       const std::vector<std::uint16_t>& b) {
    std::size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++c;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return c;
}

} // namespace detail_tu

/**
 * Exact vertex enumeration of the pointed polyhedron
 * {u : b <= u <= b', c <= Mu <= c'}. The variable box must be finite (this is
 * what makes the polyhedron pointed and bounded); row bounds may be infinite.
 *
 * Incremental construction: start from the box, insert one row halfspace at a
 * time, keep the satisfied vertices and cut every crossing edge. Two vertices
 * span an edge exactly when their common active constraints have rank n-1,
 * checked algebraically, which stays correct on degenerate instances.
 */
inline HKReport hk_vertex_integrality(const IntMatrix& M, const BoundsBox& box,
                                      std::size_t guard = 1u << 20) {
    using detail_tu::DDVertex;
    using detail_tu::Halfspace;
    const std::size_t n = M.cols(), m = M.rows();
    box.validate(n, m);
    for (std::size_t j = 0; j < n; ++j)
        if (!box.var_lo[j].finite() || !box.var_hi[j].finite())
            throw NotPointedError("variable bounds must be finite");
    if (n >= 20 || (std::size_t(1) << n) > guard)
        throw SizeGuardError("box has 2^" + std::to_string(n) + " corners");

    // Constraint pool in insertion order: the 2n box halfspaces, then the
    // finite row halfspaces.
    std::vector<Halfspace> cons;
    for (std::size_t j = 0; j < n; ++j) {
        IntVec lo(n, Integer(0)), hi(n, Integer(0));
        lo[j] = -1;
        hi[j] = 1;
        cons.push_back({lo, -box.var_lo[j].value}); // -u_j <= -b_j
        cons.push_back({hi, box.var_hi[j].value});  //  u_j <= b'_j
    }
    std::vector<Halfspace> rows;
    for (std::size_t i = 0; i < m; ++i) {
        if (box.row_lo[i].finite()) {
            IntVec a(n);
            for (std::size_t j = 0; j < n; ++j) a[j] = -M(i, j);
            rows.push_back({a, -box.row_lo[i].value});
        }
        if (box.row_hi[i].finite()) {
            IntVec a(n);
            for (std::size_t j = 0; j < n; ++j) a[j] = M(i, j);
            rows.push_back({a, box.row_hi[i].value});
        }
    }

    // Seed: the box corners.
    std::vector<DDVertex> verts;
    {
        std::set<RatVec> seen;
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            RatVec x(n);
            for (std::size_t j = 0; j < n; ++j)
                x[j] = Rational((mask >> j) & 1 ? box.var_hi[j].value
                                                : box.var_lo[j].value);
            if (seen.insert(x).second) verts.push_back({x, {}});
        }
    }

    auto recompute_active = [&](DDVertex& v, std::size_t upto) {
        v.active.clear();
        for (std::size_t t = 0; t < upto; ++t)
            if (detail_tu::eval(cons[t], v.x) == 0)
                v.active.push_back(static_cast<std::uint16_t>(t));
    };
    for (auto& v : verts) recompute_active(v, cons.size());

    auto adjacent = [&](const DDVertex& a, const DDVertex& b) {
        if (detail_tu::common_active_count(a.active, b.active) + 1 < n) return false;
        std::vector<std::uint16_t> common;
        std::set_intersection(a.active.begin(), a.active.end(), b.active.begin(),
                              b.active.end(), std::back_inserter(common));
        RatMatrix N(common.size(), n);
        for (std::size_t r = 0; r < common.size(); ++r)
            for (std::size_t j = 0; j < n; ++j)
                N(r, j) = Rational(cons[common[r]].normal[j]);
        return rank(N) == n - 1;
    };

    for (const auto& hs : rows) {
        std::vector<Rational> val(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            val[i] = detail_tu::eval(hs, verts[i].x);
        std::vector<DDVertex> next;
        std::set<RatVec> seen;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (val[i] <= 0 && seen.insert(verts[i].x).second)
                next.push_back(verts[i]);
        for (std::size_t p = 0; p < verts.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < verts.size(); ++q) {
                if (val[q] >= 0) continue;
                if (!adjacent(verts[p], verts[q])) continue;
                Rational t = val[p] / (val[p] - val[q]);
                RatVec x(n);
                for (std::size_t j = 0; j < n; ++j)
                    x[j] = verts[p].x[j] + t * (verts[q].x[j] - verts[p].x[j]);
                if (seen.insert(x).second) next.push_back({std::move(x), {}});
            }
        }
        cons.push_back(hs);
        verts = std::move(next);
        if (verts.size() > guard) throw SizeGuardError("vertex set exceeded the guard");
        for (auto& v : verts) recompute_active(v, cons.size());
    }

    HKReport rep;
    std::set<RatVec> ordered;
    for (const auto& v : verts) ordered.insert(v.x);
    for (const auto& x : ordered) {
        rep.vertices.push_back(x);
        bool integral = true;
        for (const auto& c : x) integral = integral && is_integer(c);
        if (!integral && rep.all_integral) {
            rep.all_integral = false;
            rep.fractional_witness = x;
        }
    }
    return rep;
}

} // namespace coexpand

#endif // COEXPAND_TU_HPP
