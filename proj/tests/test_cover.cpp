#include <catch2/catch_amalgamated.hpp>

#include <coexpand/bundled.hpp>
#include <coexpand/cover.hpp>

using namespace coexpand;

namespace {

VoltageAssignment cycle3_cyclic(std::size_t d) {
    VoltageAssignment va;
    va.degree = d;
    va.tree = {{0, 1}, {0, 2}};
    std::vector<std::size_t> cyc(d);
    for (std::size_t i = 0; i < d; ++i) cyc[i] = (i + 1) % d;
    va.set_voltage(1, 2, cyc);
    return va;
}

VoltageAssignment trivial_assignment(const SimplicialComplex& X, std::size_t d) {
    VoltageAssignment va;
    va.degree = d;
    // star spanning tree at the lexicographically first vertex works for all
    // bundled complexes, whose 1-skeletons contain that star
    for (std::size_t v = 1; v < X.num_vertices(); ++v)
        va.tree.push_back({0, static_cast<int>(v)});
    return va;
}

// Explicit lift enumeration: the 1-skeleton of the cover, walked as a graph.
bool is_single_cycle(const SimplicialComplex& X, std::size_t len) {
    if (X.num_simplices(0) != len || X.num_simplices(1) != len) return false;
    std::vector<int> degree(X.num_simplices(0), 0);
    for (const auto& e : X.simplices(1)) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (int d : degree)
        if (d != 2) return false;
    return X.is_connected();
}

} // namespace

TEST_CASE("cyclic voltage on the 3-cycle gives the 9-cycle") {
    auto X = bundled::cycle3();
    auto cover = build_cover(X, cycle3_cyclic(3));
    REQUIRE(cover.num_simplices(0) == 9);
    REQUIRE(cover.num_simplices(1) == 9);
    REQUIRE(is_single_cycle(cover, 9));
    REQUIRE(cover.euler_characteristic() == 0);
}

TEST_CASE("trivial voltages give disjoint copies") {
    auto X = bundled::delta3_boundary();
    auto cover = build_cover(X, trivial_assignment(X, 2));
    for (int k = 0; k <= X.dim(); ++k)
        REQUIRE(cover.num_simplices(k) == 2 * X.num_simplices(k));
    REQUIRE_FALSE(cover.is_connected());
    REQUIRE(cover.euler_characteristic() == 2 * X.euler_characteristic());
    auto rep = manifold_check(cover);
    REQUIRE(rep.is_closed);
    REQUIRE(rep.is_orientable);
}

TEST_CASE("simply connected base forces trivial covers") {
    // On the 2-sphere every admissible degree-2 voltage assignment must have
    // identity boundary words everywhere, hence a disconnected double cover.
    auto X = bundled::delta3_boundary();
    // tree = star at vertex 0; non-tree edges are (1,2), (1,3), (2,3)
    std::vector<std::pair<int, int>> nontree{{1, 2}, {1, 3}, {2, 3}};
    int admissible = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
        VoltageAssignment va = trivial_assignment(X, 2);
        for (int b = 0; b < 3; ++b)
            if (mask & (1u << b))
                va.set_voltage(nontree[b].first, nontree[b].second, {1, 0});
        if (mask == 0) {
            auto cover = build_cover(X, va);
            REQUIRE_FALSE(cover.is_connected());
            ++admissible;
        } else {
            REQUIRE_THROWS_AS(build_cover(X, va), VoltageInconsistentError);
        }
    }
    REQUIRE(admissible == 1);
    REQUIRE(homology(X, 1).betti == 0); // the obstruction is trivial pi_1 (via H_1 = 0)
}

TEST_CASE("cell count multiplicativity and fiber sums") {
    auto X = bundled::torus7();
    VoltageAssignment va = trivial_assignment(X, 3);
    // torus has plenty of non-tree edges; put a 3-cycle on one and keep the
    // triangle conditions satisfied by leaving the rest to fail or pass --
    // here we only use the trivial assignment, which is always consistent.
    auto cover = build_cover(X, va);
    for (int k = 0; k <= X.dim(); ++k)
        REQUIRE(cover.num_simplices(k) == 3 * X.num_simplices(k));
    REQUIRE(cover.euler_characteristic() == 3 * X.euler_characteristic());

    SECTION("boundary matrices of the cover compose to zero") {
        auto d1 = boundary_matrix(cover, 1);
        auto d2 = boundary_matrix(cover, 2);
        REQUIRE((d1 * d2).is_zero());
    }
    SECTION("summing cover columns over a fiber reproduces the base pattern") {
        auto base_d2 = boundary_matrix(X, 2);
        auto cov_d2 = boundary_matrix(cover, 2);
        const std::size_t d = 3;
        // fibers are contiguous: cover vertex (v, s) sits at index v*d+s, and
        // simplex lifts project by dropping sheets; recover the projection by
        // matching vertex tuples
        auto project_simplex = [&](const std::vector<int>& s) {
            std::vector<int> base;
            for (int v : s) base.push_back(v / static_cast<int>(d));
            std::sort(base.begin(), base.end());
            return base;
        };
        for (std::size_t j = 0; j < cov_d2.cols(); ++j) {
            auto base_col = X.simplex_index(2, project_simplex(cover.simplex(2, j)));
            for (std::size_t bi = 0; bi < base_d2.rows(); ++bi) {
                Integer sum = 0, abs_sum = 0;
                for (std::size_t i = 0; i < cov_d2.rows(); ++i) {
                    if (project_simplex(cover.simplex(1, i)) != X.simplex(1, bi)) continue;
                    sum += cov_d2(i, j);
                    abs_sum += int_abs(cov_d2(i, j));
                }
                REQUIRE(abs_sum == int_abs(base_d2(bi, base_col)));
                // column sums over each fiber reproduce the base column up to
                // the lift's sign, which is +1 with increasing-vertex lifts
                REQUIRE(sum == base_d2(bi, base_col));
            }
        }
    }
}

TEST_CASE("connectivity matches voltage orbit transitivity") {
    auto X = bundled::cycle3();
    SECTION("cyclic voltage is transitive") {
        REQUIRE(voltage_orbit_count(X, cycle3_cyclic(4)) == 1);
        REQUIRE(build_cover(X, cycle3_cyclic(4)).is_connected());
    }
    SECTION("trivial voltage has d orbits") {
        auto va = trivial_assignment(X, 3);
        REQUIRE(voltage_orbit_count(X, va) == 3);
        REQUIRE_FALSE(build_cover(X, va).is_connected());
    }
    SECTION("product of transpositions") {
        VoltageAssignment va;
        va.degree = 4;
        va.tree = {{0, 1}, {0, 2}};
        va.set_voltage(1, 2, {1, 0, 3, 2});
        REQUIRE(voltage_orbit_count(X, va) == 2);
        auto cover = build_cover(X, va);
        REQUIRE_FALSE(cover.is_connected());
        REQUIRE(cover.num_simplices(0) == 12);
    }
}

TEST_CASE("cover expansion sweep") {
    auto X = bundled::cycle3();
    std::vector<VoltageAssignment> vas;
    for (std::size_t d = 1; d <= 4; ++d) vas.push_back(cycle3_cyclic(d));
    auto rows = cover_expansion_sweep(X, vas);
    REQUIRE(rows.size() == 4);
    SECTION("degree one reproduces the base complex values") {
        REQUIRE(rows[0].degree == 1);
        REQUIRE(rows[0].xi_top == xi_real_global(boundary_matrix(X, 1)).value);
        REQUIRE_FALSE(rows[0].xi_codim1.has_value());
    }
    SECTION("cyclic covers are longer cycles with growing expansion") {
        // the 3d-cycle: expansion of its boundary grows linearly with length
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto cyc = build_cover(X, vas[i]);
            REQUIRE(rows[i].xi_top == xi_real_global(boundary_matrix(cyc, 1)).value);
        }
        REQUIRE(rows[1].xi_top > rows[0].xi_top);
    }
    SECTION("trivial voltages leave the value unchanged") {
        std::vector<VoltageAssignment> triv{trivial_assignment(X, 2),
                                            trivial_assignment(X, 3)};
        auto trows = cover_expansion_sweep(X, triv);
        Rational base = xi_real_global(boundary_matrix(X, 1)).value;
        REQUIRE(trows[0].xi_top == base);
        REQUIRE(trows[1].xi_top == base);
    }
}

TEST_CASE("voltage validation errors") {
    auto X = bundled::cycle3();
    SECTION("disconnected base") {
        auto Y = bundled::two_spheres();
        VoltageAssignment va;
        va.degree = 2;
        REQUIRE_THROWS_AS(build_cover(Y, va), NotConnectedError);
    }
    SECTION("bad tree") {
        VoltageAssignment va;
        va.degree = 2;
        va.tree = {{0, 1}};
        REQUIRE_THROWS_AS(build_cover(X, va), FormatError); // too few edges
        va.tree = {{0, 1}, {0, 2}, {1, 2}};
        REQUIRE_THROWS_AS(build_cover(X, va), FormatError); // too many
    }
    SECTION("voltage on a tree edge") {
        VoltageAssignment va;
        va.degree = 2;
        va.tree = {{0, 1}, {0, 2}};
        va.set_voltage(0, 1, {1, 0});
        REQUIRE_THROWS_AS(build_cover(X, va), FormatError);
    }
    SECTION("non-permutation voltage") {
        VoltageAssignment va;
        va.degree = 2;
        REQUIRE_THROWS_AS(va.set_voltage(1, 2, {0, 0}), FormatError);
    }
    SECTION("orientation reversal inverts") {
        VoltageAssignment va;
        va.degree = 3;
        va.set_voltage(2, 1, {1, 2, 0}); // stored at (1,2) as the inverse
        REQUIRE(va.voltages.at({1, 2}) == std::vector<std::size_t>{2, 0, 1});
    }
}
