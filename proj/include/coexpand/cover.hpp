#ifndef COEXPAND_COVER_HPP
#define COEXPAND_COVER_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "expansion.hpp"

namespace coexpand {

/**
 * Permutation voltages on the 1-skeleton: identity on a spanning tree,
 * an explicit permutation of the sheets {0..d-1} on every other edge, read
 * along the increasing-vertex orientation. Reversing the orientation inverts
 * the permutation. An assignment defines a cover of the whole complex when
 * every triangle's boundary word is the identity.
 */
struct VoltageAssignment {
    std::size_t degree = 1;
    std::vector<std::pair<int, int>> tree;                          // u < v index pairs
    std::map<std::pair<int, int>, std::vector<std::size_t>> voltages;

    // normalizes orientation: setting the voltage of (v, u) stores its inverse at (u, v)
    void set_voltage(int u, int v, std::vector<std::size_t> perm) {
        if (perm.size() != degree) throw FormatError("voltage has wrong degree");
        std::vector<bool> hit(degree, false);
        for (auto s : perm) {
            if (s >= degree || hit[s]) throw FormatError("voltage is not a permutation");
            hit[s] = true;
        }
        if (u == v) throw FormatError("voltage on a loop");
        if (u < v) {
            voltages[{u, v}] = std::move(perm);
        } else {
            std::vector<std::size_t> inv(degree);
            for (std::size_t i = 0; i < degree; ++i) inv[perm[i]] = i;
            voltages[{v, u}] = std::move(inv);
        }
    }
};

namespace detail_cover {

inline std::vector<std::size_t> identity_perm(std::size_t d) {
    std::vector<std::size_t> p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = i;
    return p;
}

inline std::vector<std::size_t> compose(const std::vector<std::size_t>& outer,
                                        const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> r(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

// Validates tree + voltage data and returns the voltage of every edge of X.
inline std::map<std::pair<int, int>, std::vector<std::size_t>> edge_voltages(
    const SimplicialComplex& X, const VoltageAssignment& va) {
    if (va.degree < 1) throw FormatError("cover degree must be at least 1");
    if (X.dim() < 1) {
        if (!va.tree.empty() || !va.voltages.empty())
            throw FormatError("voltages given for a complex without edges");
        return {};
    }
    std::set<std::pair<int, int>> edges;
    for (const auto& e : X.simplices(1)) edges.insert({e[0], e[1]});
    std::set<std::pair<int, int>> tree;
    for (auto [u, v] : va.tree) {
        if (u > v) std::swap(u, v);
        if (!edges.count({u, v})) throw FormatError("tree edge is not an edge of the complex");
        if (!tree.insert({u, v}).second) throw FormatError("duplicate tree edge");
    }
    // spanning tree: |V|-1 edges and connected
    const std::size_t n = X.num_vertices();
    if (tree.size() != n - 1) throw FormatError("tree must have exactly #vertices-1 edges");
    {
        std::vector<std::vector<int>> adj(n);
        for (const auto& [u, v] : tree) {
            adj[u].push_back(v);
            adj[v].push_back(u);
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
        if (cnt != n) throw FormatError("tree does not span the complex");
    }
    std::map<std::pair<int, int>, std::vector<std::size_t>> volt;
    for (const auto& [e, perm] : va.voltages) {
        if (!edges.count(e)) throw FormatError("voltage edge is not an edge of the complex");
        if (tree.count(e)) throw FormatError("voltage given on a tree edge");
        if (perm.size() != va.degree) throw FormatError("voltage has wrong degree");
        volt[e] = perm;
    }
    auto id = identity_perm(va.degree);
    for (const auto& e : edges)
        if (!volt.count(e)) volt[e] = id; // tree edges and omitted non-tree edges
    return volt;
}

} // namespace detail_cover

/**
 * Finite cover from a voltage assignment. Vertices of the cover are
 * (base vertex, sheet) pairs in lexicographic order; every k-simplex of the
 * base lifts d times, so all cell counts are multiplied by the degree.
 * Triangle boundary words must act trivially, otherwise the data does not
 * describe a cover of the 2-skeleton and VoltageInconsistent is raised.
 */
inline SimplicialComplex build_cover(const SimplicialComplex& X,
                                     const VoltageAssignment& va) {
    if (!X.is_connected()) throw NotConnectedError("cover base must be connected");
    auto volt = detail_cover::edge_voltages(X, va);
    const std::size_t d = va.degree;

    // consistency on every 2-simplex: volt(bc) o volt(ab) == volt(ac)
    if (X.dim() >= 2)
        for (const auto& t : X.simplices(2)) {
            const auto& ab = volt.at({t[0], t[1]});
            const auto& bc = volt.at({t[1], t[2]});
            const auto& ac = volt.at({t[0], t[2]});
            if (detail_cover::compose(bc, ab) != ac)
                throw VoltageInconsistentError(
                    "triangle (" + label_str(X.vertex_label(t[0])) + "," +
                    label_str(X.vertex_label(t[1])) + "," +
                    label_str(X.vertex_label(t[2])) + ") has nontrivial boundary word");
        }

    // labels in (base position, sheet) order
    std::vector<VertexLabel> labels;
    labels.reserve(X.num_vertices() * d);
    for (std::size_t v = 0; v < X.num_vertices(); ++v)
        for (std::size_t s = 0; s < d; ++s)
            labels.emplace_back(label_str(X.vertex_label(v)) + "@" + std::to_string(s));
    auto lifted_index = [&](int v, std::size_t sheet) {
        return static_cast<int>(static_cast<std::size_t>(v) * d + sheet);
    };

    // maximal simplices of the base
    std::vector<std::vector<int>> maximal;
    for (int k = X.dim(); k >= 0; --k)
        for (const auto& s : X.simplices(k)) {
            bool covered = false;
            if (k < X.dim())
                for (const auto& t : X.simplices(k + 1)) {
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        covered = true;
                        break;
                    }
                }
            if (!covered) maximal.push_back(s);
        }

    std::vector<std::vector<int>> facets;
    facets.reserve(maximal.size() * d);
    for (const auto& s : maximal)
        for (std::size_t sheet = 0; sheet < d; ++sheet) {
            std::vector<int> lift;
            lift.reserve(s.size());
            lift.push_back(lifted_index(s[0], sheet));
            for (std::size_t a = 1; a < s.size(); ++a) {
                const auto& p = volt.at({s[0], s[a]});
                lift.push_back(lifted_index(s[a], p[sheet]));
            }
            facets.push_back(std::move(lift));
        }
    return SimplicialComplex::from_indexed_facets(std::move(labels), facets);
}

/**
 * Orbit count of the sheet set under the group generated by all voltages;
 * the cover is connected exactly when this is 1 (for a connected base).
 */
inline std::size_t voltage_orbit_count(const SimplicialComplex& X,
                                       const VoltageAssignment& va) {
    auto volt = detail_cover::edge_voltages(X, va);
    const std::size_t d = va.degree;
    std::vector<std::size_t> parent(d);
    for (std::size_t i = 0; i < d; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& [e, perm] : volt)
        for (std::size_t i = 0; i < d; ++i) {
            auto a = find(i), b = find(perm[i]);
            if (a != b) parent[a] = b;
        }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < d; ++i) roots.insert(find(i));
    return roots.size();
}

struct SweepRow {
    std::size_t degree = 1;
    Rational xi_top;
    std::optional<Rational> xi_codim1;
};

/**
 * One row per cover: the degree and the expansion constants of the two top
 * boundary matrices. The paper-level claim is uniformity over all finite
 * covers; a sweep only samples, and no exhaustiveness is implied.
 */
inline std::vector<SweepRow> cover_expansion_sweep(
    const SimplicialComplex& X, const std::vector<VoltageAssignment>& vas,
    std::size_t guard = default_size_guard()) {
    std::vector<SweepRow> rows;
    for (const auto& va : vas) {
        SimplicialComplex cover = build_cover(X, va);
        SweepRow row;
        row.degree = va.degree;
        const int m = cover.dim();
        row.xi_top = xi_real_global(boundary_matrix(cover, m), guard).value;
        if (m >= 2)
            row.xi_codim1 = xi_real_global(boundary_matrix(cover, m - 1), guard).value;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace coexpand

#endif // COEXPAND_COVER_HPP
