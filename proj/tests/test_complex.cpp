#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <coexpand/bundled.hpp>
#include <coexpand/complex.hpp>

#include "oracles.hpp"

using namespace coexpand;

namespace {

// Independent closure count: enumerate subsets of each facet into sets.
std::vector<std::size_t> closure_counts(const std::vector<std::vector<long long>>& facets,
                                        std::size_t top_dim) {
    std::vector<std::set<std::vector<long long>>> by_dim(top_dim + 1);
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            std::vector<long long> face;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (std::size_t(1) << b)) face.push_back(f[b]);
            by_dim[face.size() - 1].insert(face);
        }
    }
    std::vector<std::size_t> counts;
    for (const auto& s : by_dim) counts.push_back(s.size());
    return counts;
}

} // namespace

TEST_CASE("build_complex closure and ordering") {
    SECTION("single triangle") {
        auto X = bundled::triangle();
        REQUIRE(X.dim() == 2);
        REQUIRE(X.num_simplices(0) == 3);
        REQUIRE(X.num_simplices(1) == 3);
        REQUIRE(X.num_simplices(2) == 1);
    }
    SECTION("boundary of the 3-simplex") {
        auto X = bundled::delta3_boundary();
        REQUIRE(X.num_simplices(0) == 4);
        REQUIRE(X.num_simplices(1) == 6);
        REQUIRE(X.num_simplices(2) == 4);
    }
    SECTION("six-vertex projective plane matches the closure oracle") {
        std::vector<std::vector<long long>> facets{{0, 1, 2}, {0, 2, 3}, {0, 3, 4},
                                                   {0, 4, 5}, {0, 1, 5}, {1, 2, 4},
                                                   {2, 3, 5}, {1, 3, 4}, {2, 4, 5},
                                                   {1, 3, 5}};
        auto counts = closure_counts(facets, 2);
        auto X = bundled::rp2_6();
        REQUIRE(X.num_simplices(0) == counts[0]);
        REQUIRE(X.num_simplices(1) == counts[1]);
        REQUIRE(X.num_simplices(2) == counts[2]);
        REQUIRE(counts == std::vector<std::size_t>{6, 15, 10});
    }
    SECTION("repeated vertex in a facet is rejected") {
        REQUIRE_THROWS_AS(build_complex_int({{0, 1, 1}}), FormatError);
    }
    SECTION("string labels are ordered lexicographically") {
        auto X = build_complex({{VertexLabel{std::string("b")}, VertexLabel{std::string("a")}}});
        REQUIRE(label_str(X.vertex_label(0)) == "a");
        REQUIRE_THROWS_AS(
            build_complex({{VertexLabel{std::string("a")}, VertexLabel{2LL}}}),
            FormatError);
    }
}

TEST_CASE("boundary matrices") {
    auto tri = bundled::triangle();
    SECTION("edge incidence of the triangle") {
        auto d1 = boundary_matrix(tri, 1);
        REQUIRE(d1.rows() == 3);
        REQUIRE(d1.cols() == 3);
        for (std::size_t j = 0; j < 3; ++j) {
            int plus = 0, minus = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                if (d1(i, j) == 1) ++plus;
                if (d1(i, j) == -1) ++minus;
            }
            REQUIRE(plus == 1);
            REQUIRE(minus == 1);
        }
    }
    SECTION("alternating signs on the 2-cell: rows (01),(02),(12)") {
        auto d2 = boundary_matrix(tri, 2);
        REQUIRE(d2.rows() == 3);
        REQUIRE(d2.cols() == 1);
        REQUIRE(d2(0, 0) == 1);  // (01), the face removing vertex 2
        REQUIRE(d2(1, 0) == -1); // (02), removing vertex 1
        REQUIRE(d2(2, 0) == 1);  // (12), removing vertex 0
    }
    SECTION("boundary composition vanishes on every bundled complex") {
        for (const auto& [name, X] : bundled::dtu_suite_complexes()) {
            CAPTURE(name);
            for (int k = 2; k <= X.dim(); ++k) {
                auto prod = boundary_matrix(X, k - 1) * boundary_matrix(X, k);
                REQUIRE(prod.is_zero());
            }
            for (int k = -1; k + 1 < X.dim(); ++k) {
                auto prod = coboundary_matrix(X, k + 1) * coboundary_matrix(X, k);
                REQUIRE(prod.is_zero());
            }
        }
    }
    SECTION("range errors") {
        REQUIRE_THROWS_AS(boundary_matrix(tri, 0), RangeError);
        REQUIRE_THROWS_AS(boundary_matrix(tri, 3), RangeError);
        REQUIRE_THROWS_AS(coboundary_matrix(tri, 2), RangeError);
        REQUIRE_THROWS_AS(coboundary_matrix(tri, -2), RangeError);
    }
    SECTION("augmented coboundary is the ones column") {
        auto d = coboundary_matrix(bundled::delta3_boundary(), -1);
        REQUIRE(d.rows() == 4);
        REQUIRE(d.cols() == 1);
        for (std::size_t i = 0; i < 4; ++i) REQUIRE(d(i, 0) == 1);
    }
    SECTION("coboundary is the transposed boundary") {
        REQUIRE(coboundary_matrix(tri, 0) == boundary_matrix(tri, 1).transpose());
    }
}

TEST_CASE("homology") {
    SECTION("a point") {
        auto X = build_complex_int({{0}});
        auto h = homology(X, 0);
        REQUIRE(h.betti == 1);
        REQUIRE(h.torsion.empty());
    }
    SECTION("2-sphere") {
        auto X = bundled::delta3_boundary();
        REQUIRE(homology(X, 0).betti == 1);
        REQUIRE(homology(X, 1).betti == 0);
        REQUIRE(homology(X, 1).torsion.empty());
        REQUIRE(homology(X, 2).betti == 1);
    }
    SECTION("projective plane has 2-torsion") {
        auto X = bundled::rp2_6();
        auto h1 = homology(X, 1);
        REQUIRE(h1.betti == 0);
        REQUIRE(h1.torsion == IntVec{Integer(2)});
        REQUIRE(homology(X, 2).betti == 0);
    }
    SECTION("torus") {
        auto X = bundled::torus7();
        REQUIRE(homology(X, 1).betti == 2);
        REQUIRE(homology(X, 2).betti == 1);
    }
    SECTION("Euler characteristic equals the alternating Betti sum") {
        for (const auto& [name, X] : bundled::dtu_suite_complexes()) {
            CAPTURE(name);
            long long alt = 0;
            for (int k = 0; k <= X.dim(); ++k)
                alt += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(homology(X, k).betti);
            REQUIRE(alt == X.euler_characteristic());
        }
    }
    SECTION("kernel and image counts from the complex") {
        auto X = bundled::delta3_boundary();
        REQUIRE(kernel_basis(boundary_matrix(X, 2)).size() == 1); // b2(S^2) = 1
        REQUIRE(image_basis(coboundary_matrix(bundled::triangle(), 0)).size() == 2);
    }
    REQUIRE_THROWS_AS(homology(bundled::triangle(), 5), RangeError);
}

TEST_CASE("chain l1 norm") {
    Chain c;
    c.dim = 1;
    c.coeffs[0] = Rational(3);
    c.coeffs[2] = Rational(-5, 2);
    REQUIRE(c.l1_norm() == Rational(11, 2));
    SECTION("homogeneity and positivity") {
        std::mt19937_64 gen(5);
        for (int t = 0; t < 30; ++t) {
            Chain a;
            a.dim = 2;
            for (int i = 0; i < 5; ++i)
                a.coeffs[i] = Rational(static_cast<int>(gen() % 11) - 5);
            Integer n = Integer(static_cast<int>(gen() % 9) - 4);
            Chain na;
            na.dim = 2;
            for (const auto& [k, q] : a.coeffs) na.coeffs[k] = Rational(n) * q;
            REQUIRE(na.l1_norm() == Rational(int_abs(n)) * a.l1_norm());
            bool all_zero = true;
            for (const auto& [k, q] : a.coeffs) all_zero = all_zero && q == 0;
            REQUIRE((a.l1_norm() == 0) == all_zero);
        }
    }
}

TEST_CASE("manifold recognition") {
    SECTION("2-sphere is closed and orientable with a +-1 fundamental class") {
        auto rep = manifold_check(bundled::delta3_boundary());
        REQUIRE(rep.is_pseudomanifold);
        REQUIRE(rep.is_closed);
        REQUIRE(rep.is_orientable);
        REQUIRE(rep.dim == 2);
        REQUIRE(rep.fundamental_class.has_value());
        const auto& fc = *rep.fundamental_class;
        REQUIRE(fc.coeffs.size() == 4);
        for (const auto& [idx, c] : fc.coeffs) REQUIRE(rat_abs(c) == 1);
        // the class is a cycle
        auto d2 = to_rational(boundary_matrix(bundled::delta3_boundary(), 2));
        RatVec coef(4, Rational(0));
        for (const auto& [idx, c] : fc.coeffs) coef[idx] = c;
        for (const auto& x : d2.apply(coef)) REQUIRE(x == 0);
        // uniqueness up to sign: the top kernel is one-dimensional
        REQUIRE(kernel_basis(boundary_matrix(bundled::delta3_boundary(), 2)).size() == 1);
    }
    SECTION("projective plane is closed but not orientable") {
        auto rep = manifold_check(bundled::rp2_6());
        REQUIRE(rep.is_pseudomanifold);
        REQUIRE(rep.is_closed);
        REQUIRE_FALSE(rep.is_orientable);
        REQUIRE_FALSE(rep.fundamental_class.has_value());
    }
    SECTION("solid triangle is a pseudomanifold with boundary") {
        auto rep = manifold_check(bundled::triangle());
        REQUIRE(rep.is_pseudomanifold);
        REQUIRE_FALSE(rep.is_closed);
    }
    SECTION("disjoint spheres are closed and orientable but not connected") {
        auto rep = manifold_check(bundled::two_spheres());
        REQUIRE(rep.is_closed);
        REQUIRE(rep.is_orientable);
        REQUIRE_FALSE(rep.is_connected);
        REQUIRE_FALSE(rep.fundamental_class.has_value());
    }
    SECTION("torus is closed and orientable") {
        auto rep = manifold_check(bundled::torus7());
        REQUIRE(rep.is_closed);
        REQUIRE(rep.is_orientable);
        REQUIRE(rep.fundamental_class.has_value());
    }
}

TEST_CASE("codimension expansion constants") {
    SECTION("rejects non-closed complexes") {
        REQUIRE_THROWS_AS(codim_expansion_constants(bundled::triangle()), NotAManifoldError);
        REQUIRE_THROWS_AS(codim_expansion_constants(bundled::rp2_6()), NotAManifoldError);
    }
    SECTION("2-sphere value matches the brute-force oracle") {
        auto X = bundled::delta3_boundary();
        auto [top, codim1] = codim_expansion_constants(X);
        auto oracle_top = oracle::xi_real_global_enum(boundary_matrix(X, 2));
        auto oracle_codim1 = oracle::xi_real_global_enum(boundary_matrix(X, 1));
        REQUIRE(oracle_top.has_value());
        REQUIRE(top.value == *oracle_top);
        REQUIRE(codim1.value == *oracle_codim1);
        REQUIRE(top.value > 0);
    }
    SECTION("disjoint union leaves the constant unchanged") {
        auto one = codim_expansion_constants(bundled::delta3_boundary());
        auto two = codim_expansion_constants(bundled::two_spheres());
        REQUIRE(one.first.value == two.first.value);
        REQUIRE(one.second.value == two.second.value);
    }
}
