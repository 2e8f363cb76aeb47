#ifndef COEXPAND_BUNDLED_HPP
#define COEXPAND_BUNDLED_HPP

#include <random>
#include <set>
#include <vector>

#include "complex.hpp"

namespace coexpand::bundled {

// Full triangle (one 2-cell on three vertices).
inline SimplicialComplex triangle() { return build_complex_int({{0, 1, 2}}); }

// The 3-cycle graph, no 2-cells.
inline SimplicialComplex cycle3() { return build_complex_int({{0, 1}, {0, 2}, {1, 2}}); }

inline SimplicialComplex path3() { return build_complex_int({{0, 1}, {1, 2}}); }

// Boundary of the 3-simplex: the 2-sphere on 4 vertices.
inline SimplicialComplex delta3_boundary() {
    return build_complex_int({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Boundary of the 4-simplex: the 3-sphere on 5 vertices.
inline SimplicialComplex delta4_boundary() {
    std::vector<std::vector<long long>> facets;
    for (long long skip = 0; skip < 5; ++skip) {
        std::vector<long long> f;
        for (long long v = 0; v < 5; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return build_complex_int(facets);
}

// Vertex-minimal projective plane: antipodal quotient of the icosahedron.
inline SimplicialComplex rp2_6() {
    return build_complex_int({{0, 1, 2},
                              {0, 2, 3},
                              {0, 3, 4},
                              {0, 4, 5},
                              {0, 1, 5},
                              {1, 2, 4},
                              {2, 3, 5},
                              {1, 3, 4},
                              {2, 4, 5},
                              {1, 3, 5}});
}

// Vertex-minimal torus on 7 vertices (every pair is an edge).
inline SimplicialComplex torus7() {
    std::vector<std::vector<long long>> facets;
    for (long long i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return build_complex_int(facets);
}

// Two disjoint 2-spheres.
inline SimplicialComplex two_spheres() {
    std::vector<std::vector<long long>> facets;
    for (long long base : {0LL, 4LL})
        for (long long skip = 0; skip < 4; ++skip) {
            std::vector<long long> f;
            for (long long v = 0; v < 4; ++v)
                if (v != skip) f.push_back(base + v);
            facets.push_back(f);
        }
    return build_complex_int(facets);
}

// Seeded random 2-complex on 4..6 vertices, used by the randomized suites.
inline SimplicialComplex random_complex2(std::mt19937_64& gen) {
    long long nv = 4 + static_cast<long long>(gen() % 3);
    std::set<std::vector<long long>> facets;
    std::size_t want = 2 + gen() % 4;
    while (facets.size() < want) {
        long long a = static_cast<long long>(gen() % nv);
        long long b = static_cast<long long>(gen() % nv);
        long long c = static_cast<long long>(gen() % nv);
        if (a == b || b == c || a == c) continue;
        std::vector<long long> f{a, b, c};
        std::sort(f.begin(), f.end());
        facets.insert(f);
    }
    return build_complex_int({facets.begin(), facets.end()});
}

// The ten complexes of the coboundary total-unimodularity battery.
inline std::vector<std::pair<std::string, SimplicialComplex>> dtu_suite_complexes(
    std::uint64_t seed = 20240601) {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    out.emplace_back("triangle", triangle());
    out.emplace_back("delta3-boundary", delta3_boundary());
    out.emplace_back("delta4-boundary", delta4_boundary());
    out.emplace_back("rp2-6", rp2_6());
    out.emplace_back("torus-7", torus7());
    std::mt19937_64 gen(seed);
    for (int i = 0; i < 5; ++i)
        out.emplace_back("random-2complex-" + std::to_string(i), random_complex2(gen));
    return out;
}

} // namespace coexpand::bundled

#endif // COEXPAND_BUNDLED_HPP
