#ifndef COEXPAND_COMPLEX_HPP
#define COEXPAND_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "expansion.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace coexpand {

// Vertex labels are either integers or strings; a single complex must use one
// kind throughout so the canonical order is unambiguous.
using VertexLabel = std::variant<long long, std::string>;

inline bool label_less(const VertexLabel& a, const VertexLabel& b) {
    if (a.index() != b.index()) throw FormatError("mixed vertex label kinds");
    return a < b;
}

inline std::string label_str(const VertexLabel& l) {
    if (std::holds_alternative<long long>(l)) return std::to_string(std::get<long long>(l));
    return std::get<std::string>(l);
}

/**
 * Finitely supported chain in degree `dim`; coefficients indexed by the
 * simplex position in the canonical ordering.
 */
struct Chain {
    int dim = 0;
    std::map<std::size_t, Rational> coeffs;

    Rational l1_norm() const {
        Rational s = 0;
        for (const auto& [idx, c] : coeffs) s += rat_abs(c);
        return s;
    }
};

struct HomologyReport {
    int k = 0;
    std::size_t betti = 0;
    IntVec torsion; // invariant factors > 1, divisibility chain
};

struct ManifoldReport {
    bool is_pseudomanifold = false;
    bool is_closed = false;
    bool is_orientable = false;
    bool is_connected = false;
    int dim = -1;
    std::optional<Chain> fundamental_class;
};

/**
 * Finite abstract simplicial complex, downward closed, with a fixed canonical
 * ordering: vertices sorted by label, k-simplices sorted lexicographically as
 * strictly increasing index tuples. The ordering is normative for all matrix
 * indexing, so results are reproducible bit for bit.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /**
     * Build from facets over an explicitly ordered vertex list; tuples are
     * vertex indices into that list. Used directly by the cover construction,
     * which fixes its own (base vertex, sheet) order.
     */
    static SimplicialComplex from_indexed_facets(std::vector<VertexLabel> labels,
                                                 const std::vector<std::vector<int>>& facets) {
        SimplicialComplex X;
        X.labels_ = std::move(labels);
        if (facets.empty()) throw FormatError("complex needs at least one facet");
        int dim = 0;
        for (const auto& f : facets) {
            if (f.empty()) throw FormatError("empty facet");
            dim = std::max(dim, static_cast<int>(f.size()) - 1);
        }
        X.dim_ = dim;
        std::vector<std::set<std::vector<int>>> by_dim(dim + 1);
        for (const auto& f : facets) {
            std::vector<int> t = f;
            std::sort(t.begin(), t.end());
            if (std::adjacent_find(t.begin(), t.end()) != t.end())
                throw FormatError("repeated vertex within a facet");
            for (int v : t)
                if (v < 0 || v >= static_cast<int>(X.labels_.size()))
                    throw IndexError("facet vertex out of range");
            // downward closure over nonempty subsets
            const std::size_t n = t.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
                std::vector<int> face;
                for (std::size_t b = 0; b < n; ++b)
                    if (mask & (std::size_t(1) << b)) face.push_back(t[b]);
                by_dim[face.size() - 1].insert(std::move(face));
            }
        }
        // every vertex of the label list must occur
        if (by_dim[0].size() != X.labels_.size())
            throw FormatError("label list contains vertices not used by any facet");
        for (int k = 0; k <= dim; ++k)
            X.simplices_.emplace_back(by_dim[k].begin(), by_dim[k].end());
        for (int k = 0; k <= dim; ++k) {
            std::map<std::vector<int>, std::size_t> idx;
            for (std::size_t i = 0; i < X.simplices_[k].size(); ++i)
                idx[X.simplices_[k][i]] = i;
            X.index_.push_back(std::move(idx));
        }
        return X;
    }

    int dim() const { return dim_; }

    std::size_t num_simplices(int k) const {
        if (k < 0 || k > dim_) return 0;
        return simplices_[k].size();
    }

    const std::vector<int>& simplex(int k, std::size_t i) const {
        return simplices_[k][i];
    }

    const std::vector<std::vector<int>>& simplices(int k) const { return simplices_[k]; }

    std::size_t simplex_index(int k, const std::vector<int>& s) const {
        auto it = index_[k].find(s);
        if (it == index_[k].end()) throw IndexError("unknown simplex");
        return it->second;
    }

    std::size_t num_vertices() const { return labels_.size(); }
    const VertexLabel& vertex_label(std::size_t i) const { return labels_[i]; }
    const std::vector<VertexLabel>& labels() const { return labels_; }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int k = 0; k <= dim_; ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(num_simplices(k));
        return chi;
    }

    // Connectivity of the 1-skeleton (isolated vertices count as components).
    bool is_connected() const {
        const std::size_t n = labels_.size();
        if (n == 0) return true;
        std::vector<std::vector<int>> adj(n);
        if (dim_ >= 1)
            for (const auto& e : simplices_[1]) {
                adj[e[0]].push_back(e[1]);
                adj[e[1]].push_back(e[0]);
            }
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        std::size_t cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    q.push(w);
                }
        }
        return cnt == n;
    }

private:
    std::vector<VertexLabel> labels_;
    std::vector<std::vector<std::vector<int>>> simplices_; // [k] -> sorted tuples
    std::vector<std::map<std::vector<int>, std::size_t>> index_;
    int dim_ = 0;
};

/**
 * Downward closure of a facet list; vertex order is the canonical label order
 * (numeric for integer labels, lexicographic for strings).
 */
inline SimplicialComplex build_complex(const std::vector<std::vector<VertexLabel>>& facets) {
    if (facets.empty()) throw FormatError("complex needs at least one facet");
    std::vector<VertexLabel> labels;
    for (const auto& f : facets)
        for (const auto& v : f) labels.push_back(v);
    std::sort(labels.begin(), labels.end(), label_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::map<VertexLabel, int> pos;
    for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> indexed;
    indexed.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<int> t;
        t.reserve(f.size());
        for (const auto& v : f) t.push_back(pos.at(v));
        indexed.push_back(std::move(t));
    }
    return SimplicialComplex::from_indexed_facets(std::move(labels), indexed);
}

// Convenience for integer-labelled facets.
inline SimplicialComplex build_complex_int(const std::vector<std::vector<long long>>& facets) {
    std::vector<std::vector<VertexLabel>> fs;
    fs.reserve(facets.size());
    for (const auto& f : facets) fs.emplace_back(f.begin(), f.end());
    return build_complex(fs);
}

/**
 * Signed boundary matrix: entry (i, j) is (-1)^p when the i-th (k-1)-simplex
 * is the j-th k-simplex with its p-th vertex removed. Vertices are stored in
 * increasing order, which fixes the orientation convention.
 */
inline IntMatrix boundary_matrix(const SimplicialComplex& X, int k) {
    if (k < 1 || k > X.dim()) throw RangeError("boundary dimension out of range");
    IntMatrix d(X.num_simplices(k - 1), X.num_simplices(k));
    for (std::size_t j = 0; j < X.num_simplices(k); ++j) {
        const auto& s = X.simplex(k, j);
        int sign = 1;
        for (std::size_t p = 0; p < s.size(); ++p) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (std::size_t q = 0; q < s.size(); ++q)
                if (q != p) face.push_back(s[q]);
            d(X.simplex_index(k - 1, face), j) = sign;
            sign = -sign;
        }
    }
    return d;
}

/**
 * Coboundary d^k for -1 <= k < dim: the transpose of the (k+1)-boundary, and
 * the all-ones column in the augmented degree k = -1.
 */
inline IntMatrix coboundary_matrix(const SimplicialComplex& X, int k) {
    if (k < -1 || k >= X.dim()) throw RangeError("coboundary dimension out of range");
    if (k == -1) {
        IntMatrix d(X.num_simplices(0), 1);
        for (std::size_t i = 0; i < X.num_simplices(0); ++i) d(i, 0) = 1;
        return d;
    }
    return boundary_matrix(X, k + 1).transpose();
}

inline HomologyReport homology(const SimplicialComplex& X, int k) {
    if (k < 0 || k > X.dim()) throw RangeError("homology dimension out of range");
    std::size_t rank_k = 0, rank_k1 = 0;
    IntVec torsion;
    if (k >= 1) rank_k = rank(boundary_matrix(X, k));
    if (k < X.dim()) {
        auto snf = smith_normal_form(boundary_matrix(X, k + 1));
        rank_k1 = snf.rank();
        for (const auto& d : snf.invariant_factors())
            if (d > 1) torsion.push_back(d);
    }
    HomologyReport r;
    r.k = k;
    r.betti = X.num_simplices(k) - rank_k - rank_k1;
    r.torsion = std::move(torsion);
    return r;
}

/**
 * Combinatorial stand-in for "closed oriented manifold": pure and
 * non-branching, every ridge in exactly two facets, orientations propagating
 * coherently across facet adjacency. When the complex is also connected the
 * fundamental class (the +-1 top cycle) is returned.
 */
inline ManifoldReport manifold_check(const SimplicialComplex& X) {
    ManifoldReport rep;
    const int m = X.dim();
    rep.dim = m;
    rep.is_connected = X.is_connected();

    // pure: every simplex of dimension < m has a coface
    for (int k = 0; k < m; ++k)
        for (std::size_t i = 0; i < X.num_simplices(k); ++i) {
            const auto& s = X.simplex(k, i);
            bool has_coface = false;
            for (std::size_t j = 0; j < X.num_simplices(k + 1) && !has_coface; ++j) {
                const auto& t = X.simplex(k + 1, j);
                has_coface = std::includes(t.begin(), t.end(), s.begin(), s.end());
            }
            if (!has_coface) return rep; // not pure, all flags stay false
        }

    if (m == 0) {
        rep.is_pseudomanifold = true;
        rep.is_closed = true;
        rep.is_orientable = true;
        if (rep.is_connected) {
            Chain c;
            c.dim = 0;
            c.coeffs[0] = 1;
            rep.fundamental_class = c;
        }
        return rep;
    }

    // ridge degrees
    const std::size_t nf = X.num_simplices(m);
    IntMatrix dm = boundary_matrix(X, m);
    std::vector<std::vector<std::size_t>> cofacets(X.num_simplices(m - 1));
    for (std::size_t i = 0; i < dm.rows(); ++i)
        for (std::size_t j = 0; j < nf; ++j)
            if (dm(i, j) != 0) cofacets[i].push_back(j);
    bool nonbranching = true, closed = true;
    for (const auto& cf : cofacets) {
        if (cf.size() > 2) nonbranching = false;
        if (cf.size() != 2) closed = false;
    }
    rep.is_pseudomanifold = nonbranching;
    rep.is_closed = nonbranching && closed;
    if (!rep.is_pseudomanifold) return rep;

    // orientation propagation across shared ridges
    std::vector<int> eps(nf, 0);
    bool orientable = true;
    for (std::size_t start = 0; start < nf && orientable; ++start) {
        if (eps[start] != 0) continue;
        eps[start] = 1;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty() && orientable) {
            std::size_t f = q.front();
            q.pop();
            for (std::size_t i = 0; i < dm.rows(); ++i) {
                if (dm(i, f) == 0) continue;
                for (std::size_t g : cofacets[i]) {
                    if (g == f) continue;
                    // entries here are +-1, so sign equals value
                    int want = -eps[f] * sign_of(dm(i, f)) * sign_of(dm(i, g));
                    if (eps[g] == 0) {
                        eps[g] = want;
                        q.push(g);
                    } else if (eps[g] != want) {
                        orientable = false;
                    }
                }
            }
        }
    }
    rep.is_orientable = orientable;

    if (rep.is_closed && rep.is_orientable && rep.is_connected) {
        Chain c;
        c.dim = m;
        for (std::size_t j = 0; j < nf; ++j) c.coeffs[j] = eps[j];
        rep.fundamental_class = c;
    }
    return rep;
}

/**
 * The two top expansion constants (Xi(d_m), Xi(d_{m-1})) of a closed oriented
 * complex. Poincare duality identifies the simplicial basis with the dual
 * cellular one isometrically, so Xi(d^k) of the dual structure equals
 * Xi(d_{m-k}) of these matrices; no dual complex is ever materialized.
 */
inline std::pair<ExpansionResult, ExpansionResult>
codim_expansion_constants(const SimplicialComplex& X,
                          std::size_t guard = default_size_guard()) {
    auto rep = manifold_check(X);
    if (!(rep.is_closed && rep.is_orientable))
        throw NotAManifoldError("codim expansion needs a closed orientable complex");
    if (X.dim() < 2) throw NotAManifoldError("dimension must be at least 2");
    const int m = X.dim();
    return {xi_real_global(boundary_matrix(X, m), guard),
            xi_real_global(boundary_matrix(X, m - 1), guard)};
}

} // namespace coexpand

#endif // COEXPAND_COMPLEX_HPP
