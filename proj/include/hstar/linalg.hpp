#pragma once

// Exact linear algebra kernels: rational Gaussian elimination, Bareiss
// determinants, Smith normal form, and a simplex-method LP core with
// Edmonds-style integer pivoting (int64 fast path, arbitrary-precision
// fallback).  No floating point anywhere.

#include "hstar/rational.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hstar {

using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

// ---------------------------------------------------------------- gaussian --

// Solves A x = b over the rationals with free variables set to zero.
// Columns are eliminated in the given order (indices into 0..ncols-1), so the
// caller controls which unknowns become free.  Returns nullopt if
// inconsistent.
inline std::optional<RatVec> gauss_solve_free_zero(RatMat a, RatVec b,
                                                   const std::vector<int>& col_order) {
    const int m = (int)a.size();
    const int n = m ? (int)a[0].size() : 0;
    std::vector<int> pivot_col_of_row(m, -1);
    int row = 0;
    for (int ci = 0; ci < (int)col_order.size() && row < m; ++ci) {
        int c = col_order[ci];
        int pr = -1;
        for (int r = row; r < m; ++r)
            if (a[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        std::swap(b[row], b[pr]);
        Rat inv = Rat(1) / a[row][c];
        for (int j = 0; j < n; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[row][j];
            b[r] -= f * b[row];
        }
        pivot_col_of_row[row] = c;
        ++row;
    }
    for (int r = row; r < m; ++r)
        if (b[r] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = b[r];
    return x;
}

inline int rat_rank(RatMat a) {
    const int m = (int)a.size();
    const int n = m ? (int)a[0].size() : 0;
    int row = 0;
    for (int c = 0; c < n && row < m; ++c) {
        int pr = -1;
        for (int r = row; r < m; ++r)
            if (a[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        for (int r = row + 1; r < m; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[row][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[row][j];
        }
        ++row;
    }
    return row;
}

// ----------------------------------------------------------------- bareiss --

// Fraction-free determinant of a square integer matrix.
inline Int bareiss_det(IntMat a) {
    const int n = (int)a.size();
    if (n == 0) return 1;
    Int det_sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pr = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { pr = r; break; }
            if (pr < 0) return 0;
            std::swap(a[k], a[pr]);
            det_sign = -det_sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return det_sign * a[n - 1][n - 1];
}

// Adjugate of a square integer matrix: adj(A) * A = det(A) * I.
// Cofactor expansion is fine at the sizes used here (<= 8x8).
inline IntMat adjugate(const IntMat& a) {
    const int n = (int)a.size();
    IntMat adj(n, IntVec(n));
    if (n == 1) { adj[0][0] = 1; return adj; }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, IntVec(n - 1));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = a[r][c];
                }
                ++rr;
            }
            Int cof = bareiss_det(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

// ------------------------------------------------------- smith normal form --

// Invariant factors d_1 | d_2 | ... of an integer matrix (nonzero ones only),
// via the classic gcd-reduction algorithm.
inline IntVec smith_invariant_factors(IntMat a) {
    const int m = (int)a.size();
    const int n = m ? (int)a[0].size() : 0;
    IntVec factors;
    int top = 0;
    while (top < m && top < n) {
        int pr = -1, pc = -1;
        for (int r = top; r < m && pr < 0; ++r)
            for (int c = top; c < n; ++c)
                if (a[r][c] != 0) { pr = r; pc = c; break; }
        if (pr < 0) break;
        std::swap(a[top], a[pr]);
        for (int r = 0; r < m; ++r) std::swap(a[r][top], a[r][pc]);
        for (;;) {
            bool clean = true;
            for (int r = top + 1; r < m; ++r) {
                if (a[r][top] == 0) continue;
                Int q = a[r][top] / a[top][top];
                for (int c = top; c < n; ++c) a[r][c] -= q * a[top][c];
                if (a[r][top] != 0) { std::swap(a[top], a[r]); clean = false; }
            }
            for (int c = top + 1; c < n; ++c) {
                if (a[top][c] == 0) continue;
                Int q = a[top][c] / a[top][top];
                for (int r = top; r < m; ++r) a[r][c] -= q * a[r][top];
                if (a[top][c] != 0) {
                    for (int r = top; r < m; ++r) std::swap(a[r][top], a[r][c]);
                    clean = false;
                }
            }
            if (clean) break;
        }
        factors.push_back(abs(a[top][top]));
        ++top;
    }
    // Enforce divisibility d_i | d_{i+1}.
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j) {
            Int g = gcd(factors[i], factors[j]);
            Int l = factors[i] / g * factors[j];
            factors[i] = g;
            factors[j] = l;
        }
    return factors;
}

// ------------------------------------------------------------ LP (simplex) --

// Thrown internally when the int64 fast path would overflow; the public
// entry points retry with arbitrary-precision integers.
struct lp_overflow {};

namespace detail {

// Scalar policies for the tableau.  The int64 policy does all intermediate
// arithmetic in __int128 and only range-checks final tableau entries; exact
// divisions never round.
struct OpsInt {
    using V = Int;
    static V fused(const V& p, const V& x, const V& f, const V& y, const V& den) {
        return (p * x - f * y) / den;  // (p*x - f*y)/den, division exact
    }
    static int cmp_mul(const V& a, const V& b, const V& c, const V& d) {
        V t = a * b - c * d;
        return t < 0 ? -1 : t > 0 ? 1 : 0;
    }
};

struct Ops64 {
    using V = int64_t;
    static V fused(V p, V x, V f, V y, V den) {
        __int128 t = (__int128)p * x - (__int128)f * y;
        __int128 q = t / den;
        static constexpr __int128 lim = (__int128)1 << 62;
        if (q > lim || q < -lim) throw lp_overflow{};
        return (V)q;
    }
    static int cmp_mul(V a, V b, V c, V d) {
        __int128 t = (__int128)a * b - (__int128)c * d;
        return t < 0 ? -1 : t > 0 ? 1 : 0;
    }
};

// Dense simplex tableau over exact integers: the true tableau is a/den with
// den > 0, and every pivot keeps all entries equal to subdeterminants of the
// original system (Edmonds), so the divisions below are exact.
template <class Ops>
struct SimplexTableau {
    using I = typename Ops::V;
    int m = 0, n = 0;                  // constraint rows, structural+artificial cols
    std::vector<std::vector<I>> a;     // m rows of n cols
    std::vector<I> rhs;                // m entries
    std::vector<std::vector<I>> obj;   // objective rows (reduced-cost rows)
    std::vector<I> objval;             // objective row rhs (phase 2: = c.x * den)
    I den = 1;
    std::vector<int> basis;

    void pivot(int pr, int pc) {
        const I p = a[pr][pc];
        auto update_row = [&](std::vector<I>& row, I& r_rhs) {
            const I f = row[pc];
            for (int j = 0; j < n; ++j)
                row[j] = Ops::fused(p, row[j], f, a[pr][j], den);
            r_rhs = Ops::fused(p, r_rhs, f, rhs[pr], den);
        };
        for (int r = 0; r < m; ++r)
            if (r != pr) update_row(a[r], rhs[r]);
        for (size_t k = 0; k < obj.size(); ++k) update_row(obj[k], objval[k]);
        den = p;
        basis[pr] = pc;
    }

    // Minimizes objective row `orow` with Bland's rule.  `allowed(j)` masks
    // columns that may enter.  Returns false iff unbounded.
    template <class Allowed>
    bool solve(size_t orow, Allowed&& allowed) {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < n; ++j)
                if (allowed(j) && obj[orow][j] < 0) { pc = j; break; }
            if (pc < 0) return true;
            int pr = -1;
            for (int r = 0; r < m; ++r) {
                if (a[r][pc] <= 0) continue;
                if (pr < 0) { pr = r; continue; }
                // rhs[r]/a[r][pc] vs rhs[pr]/a[pr][pc], exact cross-multiply.
                int cmp = Ops::cmp_mul(rhs[r], a[pr][pc], rhs[pr], a[r][pc]);
                if (cmp < 0 || (cmp == 0 && basis[r] < basis[pr])) pr = r;
            }
            if (pr < 0) return false;
            pivot(pr, pc);
        }
    }
};

// Phase-1 feasibility (and optional phase-2 maximization) for
//   A x = b, x >= 0, maximize c.x
// over integer data.  Returns nullopt if infeasible, else the optimum.
// `solution` (if given) receives the optimal x.
template <class Ops>
std::optional<Rat> lp_solve_impl(const std::vector<std::vector<typename Ops::V>>& A,
                                 const std::vector<typename Ops::V>& b,
                                 const std::vector<typename Ops::V>& c,
                                 RatVec* solution) {
    using I = typename Ops::V;
    const int m = (int)A.size();
    const int nvars = m ? (int)A[0].size() : (int)c.size();
    SimplexTableau<Ops> t;
    t.m = m;
    t.n = nvars + m;  // structural + one artificial per row
    t.a.assign(m, std::vector<I>(t.n, I(0)));
    t.rhs.assign(m, I(0));
    t.basis.assign(m, 0);
    for (int r = 0; r < m; ++r) {
        const bool neg = b[r] < 0;
        for (int j = 0; j < nvars; ++j) t.a[r][j] = neg ? I(-A[r][j]) : A[r][j];
        t.rhs[r] = neg ? I(-b[r]) : b[r];
        t.a[r][nvars + r] = 1;
        t.basis[r] = nvars + r;
    }
    // Row 0: phase-1 objective (sum of artificials); row 1: -c for phase 2.
    t.obj.assign(2, std::vector<I>(t.n, I(0)));
    t.objval.assign(2, I(0));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < nvars; ++j) t.obj[0][j] -= t.a[r][j];
        t.objval[0] -= t.rhs[r];
    }
    for (int j = 0; j < nvars; ++j) t.obj[1][j] = -c[j];

    if (!t.solve(0, [&](int j) { return j < nvars; }))
        throw std::logic_error("phase-1 objective unbounded");
    if (t.objval[0] != 0) return std::nullopt;  // infeasible: artificials remain positive

    // Drive any residual artificial out of the basis (degenerate rows).
    for (int r = 0; r < m; ++r) {
        if (t.basis[r] < nvars) continue;
        int pc = -1;
        for (int j = 0; j < nvars; ++j)
            if (t.a[r][j] != 0) { pc = j; break; }
        if (pc >= 0) {
            if (t.a[r][pc] < 0) {  // flip the row so the pivot is positive
                for (int j = 0; j < t.n; ++j) t.a[r][j] = -t.a[r][j];
                t.rhs[r] = -t.rhs[r];
            }
            t.pivot(r, pc);
        }
        // else: the row is all zeros on structural columns (redundant).
    }

    if (!t.solve(1, [&](int j) { return j < nvars && t.obj[0][j] == 0; }))
        throw std::logic_error("LP objective unbounded");

    if (solution) {
        solution->assign(nvars, Rat(0));
        for (int r = 0; r < m; ++r)
            if (t.basis[r] < nvars)
                (*solution)[t.basis[r]] = Rat(Int(t.rhs[r]), Int(t.den));
    }
    // The phase-2 row starts as -c with rhs 0; eliminating each basic column
    // adds back c_B x_B, so objval[1]/den is the maximum of c.x itself.
    return Rat(Int(t.objval[1]), Int(t.den));
}

}  // namespace detail

// Maximizes c.x subject to A x = b, x >= 0.  All data integral and small;
// runs on int64 minors first and falls back to arbitrary precision on
// overflow.  Returns nullopt iff infeasible.
inline std::optional<Rat> lp_maximize(const IntMat& A, const IntVec& b, const IntVec& c,
                                      RatVec* solution = nullptr) {
    auto fits = [](const Int& v) {
        static const Int lim = (Int(1) << 62);
        return v > -lim && v < lim;
    };
    bool small = true;
    for (const auto& row : A)
        for (const auto& v : row) small = small && fits(v);
    for (const auto& v : b) small = small && fits(v);
    for (const auto& v : c) small = small && fits(v);
    if (small) {
        try {
            std::vector<std::vector<int64_t>> a64(A.size());
            for (size_t r = 0; r < A.size(); ++r)
                for (const auto& v : A[r]) a64[r].push_back((int64_t)v);
            std::vector<int64_t> b64, c64;
            for (const auto& v : b) b64.push_back((int64_t)v);
            for (const auto& v : c) c64.push_back((int64_t)v);
            return detail::lp_solve_impl<detail::Ops64>(a64, b64, c64, solution);
        } catch (const lp_overflow&) {
            // fall through to exact big-int arithmetic
        }
    }
    std::vector<std::vector<Int>> a(A.begin(), A.end());
    return detail::lp_solve_impl<detail::OpsInt>(a, b, c, solution);
}

inline bool lp_feasible(const IntMat& A, const IntVec& b) {
    return lp_maximize(A, b, IntVec(A.empty() ? 0 : A[0].size(), 0)).has_value();
}

}  // namespace hstar
