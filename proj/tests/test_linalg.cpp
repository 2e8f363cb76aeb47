#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <coexpand/linalg.hpp>

#include "oracles.hpp"

using namespace coexpand;

namespace {

IntMatrix random_int_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols,
                            int lo, int hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Integer(lo + static_cast<int>(gen() % (hi - lo + 1)));
    return m;
}

// Signed vertex-edge incidence of the full triangle on {0,1,2}:
// rows = vertices, columns = edges (01),(02),(12).
IntMatrix triangle_d1() {
    return IntMatrix{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
}

} // namespace

TEST_CASE("smith normal form on pinned instances") {
    SECTION("identity") {
        auto snf = smith_normal_form(IntMatrix::identity(3));
        REQUIRE(snf.S == IntMatrix::identity(3));
        REQUIRE(snf.rank() == 3);
    }
    SECTION("diag(2,3) has invariant factors 1, 6") {
        IntMatrix m{{2, 0}, {0, 3}};
        auto snf = smith_normal_form(m);
        REQUIRE(snf.S(0, 0) == 1);
        REQUIRE(snf.S(1, 1) == 6);
        REQUIRE(snf.U * m * snf.V == snf.S);
        REQUIRE(int_abs(det_bareiss(snf.U)) == 1);
        REQUIRE(int_abs(det_bareiss(snf.V)) == 1);
    }
    SECTION("triangle boundary reduces to diag(1,1,0)") {
        auto snf = smith_normal_form(triangle_d1());
        REQUIRE(snf.S(0, 0) == 1);
        REQUIRE(snf.S(1, 1) == 1);
        REQUIRE(snf.S(2, 2) == 0);
        REQUIRE(snf.rank() == 2);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
        IntMatrix m = random_int_matrix(gen, rows, cols, -6, 6);
        auto snf = smith_normal_form(m);
        CAPTURE(trial, rows, cols);
        REQUIRE(snf.U * m * snf.V == snf.S);
        REQUIRE(int_abs(det_bareiss(snf.U)) == 1);
        REQUIRE(int_abs(det_bareiss(snf.V)) == 1);
        // diagonal, nonnegative, divisibility chain
        for (std::size_t i = 0; i < snf.S.rows(); ++i)
            for (std::size_t j = 0; j < snf.S.cols(); ++j)
                if (i != j) REQUIRE(snf.S(i, j) == 0);
        auto d = snf.invariant_factors();
        for (std::size_t i = 0; i < d.size(); ++i) {
            REQUIRE(d[i] > 0);
            if (i + 1 < d.size()) REQUIRE(d[i + 1] % d[i] == 0);
        }
        // rank from the Smith form agrees with rational elimination
        REQUIRE(snf.rank() == rank(m));
    }
}

TEST_CASE("kernel basis") {
    SECTION("identity has trivial kernel") {
        REQUIRE(kernel_basis(IntMatrix::identity(2)).empty());
    }
    SECTION("(1,2) has kernel spanned by (-2,1)") {
        auto ker = kernel_basis(IntMatrix{{1, 2}});
        REQUIRE(ker.size() == 1);
        REQUIRE(ker[0][1] != 0);
        REQUIRE(ker[0][0] == Rational(-2) * ker[0][1]);
    }
    SECTION("kernel vectors are annihilated and complete") {
        std::mt19937_64 gen(7);
        for (int trial = 0; trial < 40; ++trial) {
            IntMatrix m = random_int_matrix(gen, 1 + gen() % 4, 1 + gen() % 5, -3, 3);
            auto ker = kernel_basis(m);
            REQUIRE(ker.size() + rank(m) == m.cols());
            for (const auto& k : ker) {
                auto y = to_rational(m).apply(k);
                for (const auto& x : y) REQUIRE(x == 0);
            }
        }
    }
}

TEST_CASE("image basis") {
    SECTION("zero matrix") { REQUIRE(image_basis(IntMatrix(2, 3)).empty()); }
    SECTION("(1,2) as a 1x2 matrix") {
        auto im = image_basis(IntMatrix{{1, 2}});
        REQUIRE(im.size() == 1);
        REQUIRE(im[0][0] == 1);
    }
    SECTION("count equals rank") {
        std::mt19937_64 gen(11);
        for (int trial = 0; trial < 30; ++trial) {
            IntMatrix m = random_int_matrix(gen, 1 + gen() % 4, 1 + gen() % 5, -3, 3);
            REQUIRE(image_basis(m).size() == rank(m));
        }
    }
}

TEST_CASE("minor determinants") {
    SECTION("pinned values") {
        REQUIRE(minor_det(IntMatrix::identity(2), {0}, {0}) == 1);
        REQUIRE(minor_det(IntMatrix{{1, 2}}, {0}, {1}) == 2);
        REQUIRE(minor_det(IntMatrix{{1, 1}, {-1, 1}}, {0, 1}, {0, 1}) == 2);
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(minor_det(IntMatrix::identity(2), {0, 1}, {0}), IndexError);
        REQUIRE_THROWS_AS(minor_det(IntMatrix::identity(2), {0}, {5}), IndexError);
        REQUIRE_THROWS_AS(minor_det(IntMatrix::identity(3), {1, 0}, {0, 1}), IndexError);
    }
    SECTION("agrees with cofactor expansion on all minors up to 5x5") {
        std::mt19937_64 gen(13);
        for (int trial = 0; trial < 10; ++trial) {
            std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 5;
            IntMatrix m = random_int_matrix(gen, rows, cols, -4, 4);
            for (std::size_t k = 1; k <= std::min(rows, cols); ++k)
                for (const auto& r : oracle::subsets(rows, k))
                    for (const auto& c : oracle::subsets(cols, k))
                        REQUIRE(minor_det(m, r, c) == oracle::det_cofactor(m.submatrix(r, c)));
        }
    }
}

TEST_CASE("rational solve and integer solve") {
    IntMatrix a{{1, 2}};
    auto x = solve(to_rational(a), RatVec{Rational(1)});
    REQUIRE(x);
    REQUIRE((*x)[0] + 2 * (*x)[1] == 1);

    SECTION("integer solvability via the Smith form") {
        REQUIRE(solve_integer(IntMatrix{{2}}, IntVec{Integer(1)}) == std::nullopt);
        auto u = solve_integer(IntMatrix{{1, 2}}, IntVec{Integer(3)});
        REQUIRE(u);
        REQUIRE((*u)[0] + 2 * (*u)[1] == 3);
    }
    SECTION("integer kernel lattice") {
        IntMatrix m{{1, 2}};
        auto snf = smith_normal_form(m);
        auto lat = integer_kernel_basis(m, snf);
        REQUIRE(lat.size() == 1);
        REQUIRE(lat[0][0] + 2 * lat[0][1] == 0);
        REQUIRE((int_abs(lat[0][0]) == 2 && int_abs(lat[0][1]) == 1));
    }
}
