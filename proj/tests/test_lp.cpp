#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <coexpand/lp.hpp>

using namespace coexpand;

namespace {

// Exact optimality certificate: primal feasible, dual feasible, objectives
// equal. Any point passing all three is optimal by weak duality.
void require_certified_optimum(const RatMatrix& G, const RatVec& h, const RatVec& c,
                               const LpSolution& s) {
    REQUIRE(s.status == LpStatus::optimal);
    RatVec gx = G.apply(s.x);
    for (std::size_t i = 0; i < h.size(); ++i) REQUIRE(gx[i] == h[i]);
    for (const auto& xi : s.x) REQUIRE(xi >= 0);
    Rational yh = 0;
    for (std::size_t i = 0; i < h.size(); ++i) yh += s.dual[i] * h[i];
    REQUIRE(yh == s.value);
    for (std::size_t j = 0; j < G.cols(); ++j) {
        Rational red = c[j];
        for (std::size_t i = 0; i < G.rows(); ++i) red -= s.dual[i] * G(i, j);
        REQUIRE(red >= 0);
    }
}

} // namespace

TEST_CASE("simplex solves pinned instances") {
    SECTION("split l1 toy: min p+q with p-q=1") {
        RatMatrix G{{Rational(1), Rational(-1)}};
        RatVec h{Rational(1)}, c{Rational(1), Rational(1)};
        auto s = solve_lp(G, h, c);
        require_certified_optimum(G, h, c, s);
        REQUIRE(s.value == 1);
    }
    SECTION("negative rhs is normalized") {
        RatMatrix G{{Rational(1), Rational(-1)}};
        RatVec h{Rational(-2)}, c{Rational(1), Rational(1)};
        auto s = solve_lp(G, h, c);
        require_certified_optimum(G, h, c, s);
        REQUIRE(s.value == 2);
        REQUIRE(s.x[1] == 2);
    }
    SECTION("infeasible system") {
        RatMatrix G{{Rational(1), Rational(1)}};
        RatVec h{Rational(-1)}, c{Rational(0), Rational(0)};
        REQUIRE(solve_lp(G, h, c).status == LpStatus::infeasible);
    }
    SECTION("unbounded objective") {
        RatMatrix G{{Rational(1), Rational(-1)}};
        RatVec h{Rational(0)}, c{Rational(-1), Rational(0)};
        REQUIRE(solve_lp(G, h, c).status == LpStatus::unbounded);
    }
    SECTION("redundant rows are tolerated") {
        RatMatrix G{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
        RatVec h{Rational(1), Rational(2)}, c{Rational(1), Rational(3)};
        auto s = solve_lp(G, h, c);
        require_certified_optimum(G, h, c, s);
        REQUIRE(s.value == 1);
    }
}

TEST_CASE("Bland's rule survives the classic degenerate instance") {
    // Beale's cycling example; plain Dantzig pivoting cycles on it.
    RatMatrix G{
        {Rational(1), Rational(0), Rational(0), Rational(1, 4), Rational(-60),
         Rational(-1, 25), Rational(9)},
        {Rational(0), Rational(1), Rational(0), Rational(1, 2), Rational(-90),
         Rational(-1, 50), Rational(3)},
        {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0), Rational(1),
         Rational(0)},
    };
    RatVec h{Rational(0), Rational(0), Rational(1)};
    RatVec c{Rational(0), Rational(0), Rational(0), Rational(-3, 4),
             Rational(150), Rational(-1, 50), Rational(6)};
    auto s = solve_lp(G, h, c);
    require_certified_optimum(G, h, c, s);
    REQUIRE(s.value == Rational(-1, 20));
}

TEST_CASE("random feasible instances carry exact certificates") {
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t m = 1 + gen() % 4, n = 1 + gen() % 6;
        RatMatrix G(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                G(i, j) = Rational(static_cast<int>(gen() % 7) - 3);
        // feasible by construction: h = G * (nonnegative point)
        RatVec x0(n);
        for (auto& v : x0) v = Rational(static_cast<int>(gen() % 4));
        RatVec h = G.apply(x0);
        RatVec c(n);
        for (auto& v : c) v = Rational(static_cast<int>(gen() % 9)); // >= 0 keeps it bounded
        auto s = solve_lp(G, h, c);
        CAPTURE(trial, m, n);
        require_certified_optimum(G, h, c, s);
    }
}
