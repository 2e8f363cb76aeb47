#ifndef COEXPAND_EXPANSION_HPP
#define COEXPAND_EXPANSION_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace coexpand {

enum class Ring { real, integer };

/**
 * Optimality evidence attached to a result. LP results carry an exact dual
 * vector y with ||A^T y||_inf <= 1 and y^T v equal to the optimum; integer
 * results record the exhausted branch-and-bound search; global results record
 * the enumeration that was maximized over.
 */
struct Certificate {
    enum class Kind { lp_dual, branch_and_bound, vertex_enumeration, formula };
    Kind kind = Kind::formula;
    RatVec dual;
    std::size_t count = 0; // nodes explored / candidates enumerated
    std::string note;
};

struct L1Problem {
    IntMatrix A;
    IntVec v;
};

struct ExpansionResult {
    Rational value; // raw minimum for the at-a-vector solvers, ratio for global
    RatVec minimizer;
    Certificate certificate;
    Ring ring = Ring::real;
    IntVec witness; // global results: primitive integer witness vector
};

// Default ceiling on enumeration sizes; the CLI can override it through
// COEXPAND_SIZE_GUARD and callers can pass an explicit value.
inline std::size_t default_size_guard() { return 500000; }

namespace detail_exp {

// min ||u||_1 over {u : A u = v} via the split u = p - q, p,q >= 0,
// objective sum(p+q). Returns the LP solution in split coordinates.
inline LpSolution split_l1_lp(const RatMatrix& A, const RatVec& v) {
    const std::size_t m = A.rows(), n = A.cols();
    RatMatrix G(m, 2 * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            G(i, j) = A(i, j);
            G(i, n + j) = -A(i, j);
        }
    RatVec c(2 * n, Rational(1));
    return solve_lp(G, v, c);
}

inline RatVec split_to_u(const RatVec& x, std::size_t n) {
    RatVec u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = x[j] - x[n + j];
    return u;
}

struct L1Optimum {
    Rational value;
    RatVec u;
    RatVec dual;
};

inline L1Optimum l1_min_rational(const RatMatrix& A, const RatVec& v) {
    auto lp = split_l1_lp(A, v);
    if (lp.status == LpStatus::infeasible)
        throw InfeasibleError("right-hand side is not in the image");
    if (lp.status != LpStatus::optimal)
        throw UnboundedError("l1 minimization cannot be unbounded"); // defensive
    return {lp.value, split_to_u(lp.x, A.cols()), lp.dual};
}

} // namespace detail_exp

/**
 * Exact global minimum of ||u||_1 over real solutions of A u = v, with the
 * dual vector as optimality certificate.
 */
inline ExpansionResult l1_min_real(const L1Problem& p) {
    auto opt = detail_exp::l1_min_rational(to_rational(p.A), to_rational(p.v));
    ExpansionResult r;
    r.value = opt.value;
    r.minimizer = opt.u;
    r.ring = Ring::real;
    r.certificate.kind = Certificate::Kind::lp_dual;
    r.certificate.dual = opt.dual;
    return r;
}

/**
 * Independent certificate check: the minimizer solves A u = v with the claimed
 * norm, and the dual y proves no solution can do better, via
 * ||A^T y||_inf <= 1 and y^T v = value.
 */
inline bool verify_dual_certificate(const IntMatrix& A, const IntVec& v,
                                    const ExpansionResult& r) {
    if (r.certificate.kind != Certificate::Kind::lp_dual) return false;
    if (r.minimizer.size() != A.cols() || r.certificate.dual.size() != A.rows())
        return false;
    RatMatrix Ar = to_rational(A);
    RatVec au = Ar.apply(r.minimizer);
    for (std::size_t i = 0; i < A.rows(); ++i)
        if (au[i] != Rational(v[i])) return false;
    if (l1_norm(r.minimizer) != r.value) return false;
    const RatVec& y = r.certificate.dual;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        Rational aty = 0;
        for (std::size_t i = 0; i < A.rows(); ++i) aty += Rational(A(i, j)) * y[i];
        if (rat_abs(aty) > 1) return false;
    }
    Rational yv = 0;
    for (std::size_t i = 0; i < A.rows(); ++i) yv += y[i] * Rational(v[i]);
    return yv == r.value;
}

/**
 * Exact global minimum of ||u||_1 over integer solutions of A u = v.
 * Branch-and-bound on the LP relaxation, branching on the most fractional
 * coordinate, depth first, with exact rational bounds so pruning is sound.
 * An integer particular solution from the Smith form seeds the incumbent and
 * bounds the search region; total-unimodularity shows up as the regression
 * that such instances solve at the root node.
 */
inline ExpansionResult l1_min_int(const L1Problem& p) {
    const std::size_t m = p.A.rows(), n = p.A.cols();
    if (p.v.size() != m) throw IndexError("l1_min_int: shape mismatch");
    RatMatrix Ar = to_rational(p.A);
    RatVec vr = to_rational(p.v);
    if (!solve(Ar, vr)) throw InfeasibleError("right-hand side is not in the image");
    auto snf = smith_normal_form(p.A);
    auto particular = solve_integer(p.A, p.v, snf);
    if (!particular)
        throw NoIntegerSolutionError("solvable over Q but not over Z");

    // The raw particular solution can be enormous; reduce it greedily against
    // the integer kernel lattice so the incumbent bounds a small search box.
    IntVec seed = *particular;
    {
        auto lattice = integer_kernel_basis(p.A, snf);
        bool improved = !lattice.empty();
        while (improved) {
            improved = false;
            for (const auto& k : lattice) {
                // candidate shifts: integers around each breakpoint u_i / k_i
                std::set<Integer> cand{Integer(0)};
                for (std::size_t i = 0; i < n; ++i) {
                    if (k[i] == 0) continue;
                    Rational b = Rational(seed[i]) / Rational(k[i]);
                    cand.insert(floor_int(b));
                    cand.insert(ceil_int(b));
                }
                Integer cur = l1_norm(seed);
                Integer best_t = 0;
                for (const auto& t : cand) {
                    if (t == 0) continue;
                    IntVec u = seed;
                    for (std::size_t i = 0; i < n; ++i) u[i] -= t * k[i];
                    Integer nrm = l1_norm(u);
                    if (nrm < cur) {
                        cur = nrm;
                        best_t = t;
                    }
                }
                if (best_t != 0) {
                    for (std::size_t i = 0; i < n; ++i) seed[i] -= best_t * k[i];
                    improved = true;
                }
            }
        }
    }

    Integer ub0 = l1_norm(seed);
    Rational best = Rational(ub0);
    RatVec best_u = to_rational(seed);

    struct BranchBound {
        std::size_t var;
        bool upper; // true: u_var <= value, false: u_var >= value
        Integer value;
    };

    std::size_t nodes = 0;
    std::vector<std::vector<BranchBound>> stack;
    stack.push_back({});
    while (!stack.empty()) {
        auto bounds = std::move(stack.back());
        stack.pop_back();
        ++nodes;

        // rows: A(p-q) = v, then sum(p+q) + s = ub0, then one row per branch bound
        const std::size_t extra = 1 + bounds.size();
        const std::size_t ncols = 2 * n + extra;
        RatMatrix G(m + extra, ncols);
        RatVec h(m + extra);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                G(i, j) = Ar(i, j);
                G(i, n + j) = -Ar(i, j);
            }
            h[i] = vr[i];
        }
        for (std::size_t j = 0; j < 2 * n; ++j) G(m, j) = 1;
        G(m, 2 * n) = 1;
        h[m] = Rational(ub0);
        for (std::size_t t = 0; t < bounds.size(); ++t) {
            const auto& b = bounds[t];
            G(m + 1 + t, b.var) = 1;
            G(m + 1 + t, n + b.var) = -1;
            G(m + 1 + t, 2 * n + 1 + t) = b.upper ? Rational(1) : Rational(-1);
            h[m + 1 + t] = Rational(b.value);
        }
        RatVec c(ncols, Rational(0));
        for (std::size_t j = 0; j < 2 * n; ++j) c[j] = 1;

        auto lp = solve_lp(G, h, c);
        if (lp.status != LpStatus::optimal) continue; // infeasible branch
        // integer points have integer norms here, so the bound rounds up
        if (Rational(ceil_int(lp.value)) >= best) continue;

        RatVec u = detail_exp::split_to_u(lp.x, n);
        std::size_t frac_var = n;
        Rational frac_best = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Rational d = frac_distance(u[j]);
            if (d > frac_best) {
                frac_best = d;
                frac_var = j;
            }
        }
        if (frac_var == n) {
            best = lp.value; // integral relaxation optimum improves incumbent
            best_u = u;
            continue;
        }
        auto lo = bounds, hi = bounds;
        lo.push_back({frac_var, true, floor_int(u[frac_var])});
        hi.push_back({frac_var, false, ceil_int(u[frac_var])});
        stack.push_back(std::move(hi));
        stack.push_back(std::move(lo)); // explore the floor branch first
    }

    ExpansionResult r;
    r.value = best;
    r.minimizer = best_u;
    r.ring = Ring::integer;
    r.certificate.kind = Certificate::Kind::branch_and_bound;
    r.certificate.count = nodes;
    r.certificate.note = "exhausted branch-and-bound tree";
    return r;
}

/**
 * Expansion ratio at a single vector: minimal norm over solutions divided by
 * the norm of the vector.
 */
inline Rational xi_real_at(const IntMatrix& A, const IntVec& v) {
    if (l1_norm(v) == 0) throw ZeroVectorError();
    return l1_min_real({A, v}).value / Rational(l1_norm(v));
}

inline Rational xi_int_at(const IntMatrix& A, const IntVec& v) {
    if (l1_norm(v) == 0) throw ZeroVectorError();
    return l1_min_int({A, v}).value / Rational(l1_norm(v));
}

namespace detail_exp {

inline void combinations_next(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
    const std::size_t k = idx.size();
    if (k == 0) {
        done = true;
        return;
    }
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return;
        }
    }
    done = true;
}

inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

} // namespace detail_exp

/**
 * Global real expansion constant: the maximum of the quotient norm
 * N(w) = min{||u||_1 : A u = w} over the unit ball of the l1-norm restricted
 * to image(A). Both norms are polyhedral, so the maximum of the convex N is
 * attained at a vertex of the ball. Vertices are enumerated in image
 * coordinates: writing w = B s for a column basis B, every vertex spans the
 * one-dimensional kernel of a set of coordinate rows, so scanning the
 * (rank-1)-subsets of rows and keeping the rank-deficient ones reaches every
 * vertex; extra candidates that are not vertices sit on the ball's boundary
 * and cannot exceed the maximum.
 */
inline ExpansionResult xi_real_global(const IntMatrix& A,
                                      std::size_t guard = default_size_guard()) {
    if (A.is_zero() || A.rows() == 0 || A.cols() == 0) throw ZeroMapError();
    RatMatrix Ar = to_rational(A);
    auto basis = image_basis(Ar);
    const std::size_t r = basis.size();
    const std::size_t m = A.rows();
    RatMatrix B(m, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < m; ++i) B(i, j) = basis[j][i];

    if (detail_exp::binomial(m, r - 1) > Integer(guard))
        throw SizeGuardError("vertex enumeration needs " +
                             detail_exp::binomial(m, r - 1).str() + " row subsets");

    std::set<IntVec> seen;
    ExpansionResult bestres;
    bestres.ring = Ring::real;
    Rational best = -1;
    std::size_t candidates = 0;

    std::vector<std::size_t> zset(r - 1);
    for (std::size_t i = 0; i < zset.size(); ++i) zset[i] = i;
    bool done = (r - 1 > m);
    while (!done) {
        RatMatrix BZ(zset.size(), r);
        for (std::size_t i = 0; i < zset.size(); ++i)
            for (std::size_t j = 0; j < r; ++j) BZ(i, j) = B(zset[i], j);
        auto ker = kernel_basis(BZ);
        if (ker.size() == 1) {
            RatVec w = B.apply(ker[0]);
            IntVec w0 = to_primitive_integer(w);
            for (const auto& x : w0) {
                if (x == 0) continue;
                if (x < 0)
                    for (auto& y : w0) y = -y;
                break;
            }
            if (seen.insert(w0).second) {
                ++candidates;
                auto opt = detail_exp::l1_min_rational(Ar, to_rational(w0));
                Rational ratio = opt.value / Rational(l1_norm(w0));
                if (ratio > best) {
                    best = ratio;
                    bestres.witness = w0;
                    bestres.minimizer = opt.u;
                    bestres.certificate.dual = opt.dual;
                }
            }
        }
        detail_exp::combinations_next(zset, m, done);
    }

    bestres.value = best;
    bestres.certificate.kind = Certificate::Kind::vertex_enumeration;
    bestres.certificate.count = candidates;
    bestres.certificate.note = "max of the quotient norm over the image unit ball";
    return bestres;
}

/**
 * Lower bound for the integer expansion constant: maximum of xi_int_at over
 * the integer image vectors with sup-norm at most R. The image lattice
 * A(Z^n) is generated by d_j times the j-th column of U^-1 from the Smith
 * form; candidates are scanned through an exact coefficient box.
 */
inline Rational xi_int_probe(const IntMatrix& A, const Integer& R,
                             std::size_t guard = default_size_guard()) {
    if (R < 1) throw DomainError("probe radius must be at least 1");
    if (A.is_zero() || A.rows() == 0 || A.cols() == 0) throw ZeroMapError();
    const std::size_t m = A.rows();
    auto snf = smith_normal_form(A);
    const std::size_t r = snf.rank();

    // U^-1 is integral; solve over Q and read off the entries.
    RatMatrix Uinv(m, m);
    {
        RatMatrix U = to_rational(snf.U);
        for (std::size_t j = 0; j < m; ++j) {
            RatVec e(m, Rational(0));
            e[j] = 1;
            auto col = solve(U, e);
            for (std::size_t i = 0; i < m; ++i) Uinv(i, j) = (*col)[i];
        }
    }
    RatMatrix L(m, r); // lattice basis of A(Z^n)
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < m; ++i) L(i, j) = Uinv(i, j) * Rational(snf.S(j, j));

    // coefficient box: |c_j| <= R * l1-norm of the j-th row of pinv(L)
    RatMatrix Lt = L.transpose();
    RatMatrix gram = Lt * L;
    std::vector<Integer> cap(r);
    Integer total = 1;
    for (std::size_t j = 0; j < r; ++j) {
        RatVec ej(r, Rational(0));
        ej[j] = 1;
        auto gj = solve(gram, ej); // j-th column of gram^-1
        RatVec pinv_row(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            Rational s = 0;
            for (std::size_t k = 0; k < r; ++k) s += (*gj)[k] * Lt(k, i);
            pinv_row[i] = s;
        }
        cap[j] = floor_int(Rational(R) * l1_norm(pinv_row));
        total *= 2 * cap[j] + 1;
        if (total > Integer(guard))
            throw SizeGuardError("probe box has " + total.str() + " candidates");
    }

    Rational best = 0;
    std::vector<Integer> c(r);
    for (std::size_t j = 0; j < r; ++j) c[j] = -cap[j];
    for (;;) {
        IntVec w(m, Integer(0));
        bool zero = true;
        for (std::size_t i = 0; i < m; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < r; ++j) s += L(i, j) * Rational(c[j]);
            w[i] = num(s); // lattice vectors are integral
            if (w[i] != 0) zero = false;
        }
        if (!zero && linf_norm(w) <= R) {
            Rational x = xi_int_at(A, w);
            if (x > best) best = x;
        }
        std::size_t j = 0;
        while (j < r && c[j] == cap[j]) {
            c[j] = -cap[j];
            ++j;
        }
        if (j == r) break;
        ++c[j];
    }
    return best;
}

/**
 * Integral rounding for totally unimodular systems: given a real optimum u0
 * of min ||u||_1 over A u = v, produce an integer solution of the same norm
 * inside the orthant of u0. The orthant pins the sign pattern, making the
 * norm linear; a basic optimum of that LP is a vertex of the optimal face,
 * and vertices are integral exactly when the TU hypothesis holds, so a
 * fractional vertex is reported as the NotTU failure.
 */
inline IntVec tu_round(const IntMatrix& A, const IntVec& v, const RatVec& u0) {
    const std::size_t m = A.rows(), n = A.cols();
    if (u0.size() != n || v.size() != m) throw IndexError("tu_round: shape mismatch");
    RatMatrix Ar = to_rational(A);
    RatVec au = Ar.apply(u0);
    for (std::size_t i = 0; i < m; ++i)
        if (au[i] != Rational(v[i])) throw DomainError("u0 does not solve A u0 = v");

    std::vector<std::size_t> support;
    std::vector<int> sgn;
    for (std::size_t j = 0; j < n; ++j)
        if (u0[j] != 0) {
            support.push_back(j);
            sgn.push_back(sign_of(u0[j]));
        }
    RatMatrix G(m, support.size());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < support.size(); ++t)
            G(i, t) = Rational(sgn[t]) * Ar(i, support[t]);
    RatVec c(support.size(), Rational(1));
    auto lp = solve_lp(G, to_rational(v), c);
    if (lp.status != LpStatus::optimal)
        throw InfeasibleError("orthant face is empty"); // cannot happen when u0 is feasible
    if (lp.value != l1_norm(u0))
        throw DomainError("u0 is not an l1-optimal solution");
    IntVec u1(n, Integer(0));
    for (std::size_t t = 0; t < support.size(); ++t) {
        if (!is_integer(lp.x[t]))
            throw NotTUError("face vertex came out fractional");
        u1[support[t]] = Integer(sgn[t]) * num(lp.x[t]);
    }
    return u1;
}

/**
 * Integral rounding across an exact pair A, B with A totally unimodular:
 * given w with B v0 = B v1 = w, v0 real optimal and v1 integral, produce an
 * integer v2 = A u1 + v1 with B v2 = w and ||v2||_1 = ||v0||_1. The search
 * space is the set of u whose image A u + v1 lies in the (closed) orthant of
 * v0; there the norm is linear with integral row data, and a basic optimum is
 * integral under the TU hypothesis.
 */
inline IntVec exact_round(const IntMatrix& A, const IntMatrix& B, const IntVec& w,
                          const RatVec& v0, const IntVec& v1) {
    const std::size_t m = A.rows(), n = A.cols();
    if (B.cols() != m || v0.size() != m || v1.size() != m || w.size() != B.rows())
        throw IndexError("exact_round: shape mismatch");
    // exactness: B A = 0 and rank A + rank B = m
    if (!(B * A).is_zero()) throw NotExactError("B * A is nonzero");
    if (rank(A) + rank(B) != m) throw NotExactError("image(A) is smaller than kernel(B)");
    RatMatrix Br = to_rational(B);
    RatVec bv0 = Br.apply(v0);
    IntVec bv1 = B.apply(v1);
    for (std::size_t i = 0; i < B.rows(); ++i) {
        if (bv0[i] != Rational(w[i])) throw DomainError("B v0 does not equal w");
        if (bv1[i] != w[i]) throw DomainError("B v1 does not equal w");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (int_abs(A(i, j)) > 1) throw NotTUError("entry outside {-1,0,1}");

    // variables: u+ (n), u- (n), g_i for sign(v0_i) != 0
    std::vector<std::size_t> act;
    std::vector<int> sgn(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        sgn[i] = sign_of(v0[i]);
        if (sgn[i] != 0) act.push_back(i);
    }
    const std::size_t ncols = 2 * n + act.size();
    RatMatrix G(m, ncols);
    RatVec h(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            G(i, j) = Rational(A(i, j));
            G(i, n + j) = Rational(-A(i, j));
        }
        h[i] = Rational(-v1[i]);
    }
    for (std::size_t t = 0; t < act.size(); ++t) G(act[t], 2 * n + t) = Rational(-sgn[act[t]]);
    RatVec c(ncols, Rational(0));
    for (std::size_t t = 0; t < act.size(); ++t) c[2 * n + t] = 1;

    auto lp = solve_lp(G, h, c);
    if (lp.status != LpStatus::optimal)
        throw InfeasibleError("orthant set is empty"); // cannot happen under exactness
    if (lp.value != l1_norm(v0)) throw DomainError("v0 is not an l1-optimal solution");

    IntVec u1(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational uj = lp.x[j] - lp.x[n + j];
        if (!is_integer(uj)) throw NotTUError("face vertex came out fractional");
        u1[j] = num(uj);
    }
    IntVec v2 = A.apply(u1);
    for (std::size_t i = 0; i < m; ++i) v2[i] += v1[i];
    return v2;
}

/**
 * Explicit waist-inequality constant 1 / (1 + 3C + 12C^2).
 */
inline Rational waist_constant(const Rational& C) {
    if (C < 0) throw DomainError("waist constant requires C >= 0");
    return Rational(1) / (1 + 3 * C + 12 * C * C);
}

/**
 * Isoperimetric constant (Xi * D^(2m) + E) * E from the cellular expansion
 * constant and the bilipschitz/deformation inputs.
 */
inline Rational combine_constants(const Rational& xi, const Rational& D, const Rational& E,
                                  unsigned m) {
    if (D < 1) throw DomainError("bilipschitz constant D must be at least 1");
    if (E <= 0) throw DomainError("deformation constant E must be positive");
    Rational dpow = 1;
    for (unsigned i = 0; i < 2 * m; ++i) dpow *= D;
    return (xi * dpow + E) * E;
}

} // namespace coexpand

#endif // COEXPAND_EXPANSION_HPP
