#pragma once

// Lattice geometry for graph polytopes: edge vectors, tree simplices,
// facet functionals, visibility from a reference point, exact membership,
// box lattice-point enumeration, and relative-interior disjointness.
//
// Points are 0-indexed vectors of length n (coordinate u-1 belongs to vertex
// u).  All polytopes here live in the sum-zero hyperplane.

#include "hstar/errors.hpp"
#include "hstar/graphs.hpp"
#include "hstar/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace hstar {

// ---------------------------------------------------------------- vectors --

// x_e = 1_head - 1_tail.
inline IntVec edge_vector(const Digraph& g, int edge_id) {
    const Edge& e = g.edge(edge_id);
    IntVec x(g.n, 0);
    x[e.head - 1] = 1;
    x[e.tail - 1] = -1;
    return x;
}

// Vertex set of the root polytope Q_G (one point per edge, id order).
inline std::vector<IntVec> root_polytope_vertices(const Digraph& g) {
    std::vector<IntVec> verts;
    verts.reserve(g.m());
    for (int e = 1; e <= g.m(); ++e) verts.push_back(edge_vector(g, e));
    return verts;
}

// An affine functional z -> coeffs.z + constant.
struct Functional {
    RatVec coeffs;  // length n
    Rat constant = 0;

    Rat eval(const RatVec& z) const {
        Rat v = constant;
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) v += coeffs[i] * z[i];
        return v;
    }
    Rat eval(const IntVec& z) const {
        Rat v = constant;
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) v += coeffs[i] * Rat(z[i]);
        return v;
    }
    std::string to_string() const {
        std::ostringstream os;
        os << "coeffs";
        for (const Rat& c : coeffs) os << ' ' << rat_to_string(c);
        os << " constant " << rat_to_string(constant);
        return os.str();
    }
};

// --------------------------------------------------------------- simplices --

struct Simplex {
    std::vector<IntVec> verts;  // affinely independent lattice points
    std::vector<int> edge_ids;  // provenance: edge id per vertex, 0 = cone apex
    int dim() const { return (int)verts.size() - 1; }
};

namespace detail {

inline IntMat difference_matrix(const std::vector<IntVec>& verts) {
    IntMat diff;
    for (size_t i = 1; i < verts.size(); ++i) {
        IntVec row(verts[i].size());
        for (size_t j = 0; j < row.size(); ++j) row[j] = verts[i][j] - verts[0][j];
        diff.push_back(std::move(row));
    }
    return diff;
}

inline int affine_rank(const std::vector<IntVec>& verts) {
    IntMat diff = difference_matrix(verts);
    RatMat rm;
    for (auto& r : diff) rm.push_back(to_rat_vec(r));
    return rat_rank(rm);
}

}  // namespace detail

// Q_T: one vertex x_f per tree edge, ascending id order.
inline Simplex tree_simplex(const Digraph& g, const SpanningTree& t) {
    Simplex s;
    for (int id : t.edges) {
        s.verts.push_back(edge_vector(g, id));
        s.edge_ids.push_back(id);
    }
    return s;
}

// conv({0} u Q_T): the cone piece over a boundary tree simplex.
inline Simplex cone_simplex(const Digraph& g, const SpanningTree& t) {
    Simplex s;
    s.verts.push_back(IntVec(g.n, 0));
    s.edge_ids.push_back(0);
    for (int id : t.edges) {
        s.verts.push_back(edge_vector(g, id));
        s.edge_ids.push_back(id);
    }
    return s;
}

// True iff the lattice simplex spans the same lattice as its affine hull's
// intersection with Z^n: all Smith invariant factors of the difference matrix
// are 1.
inline bool is_unimodular(const Simplex& s) {
    if (s.verts.size() < 1) throw input_error("empty simplex");
    IntMat diff = detail::difference_matrix(s.verts);
    IntVec factors = smith_invariant_factors(diff);
    if ((int)factors.size() != s.dim())
        throw input_error("simplex vertices are not affinely independent");
    for (const Int& f : factors)
        if (f != 1) return false;
    return true;
}

// The affine functional that is 0 on every vertex of s except 1 on vertex
// `opposite`.  Solved exactly; coordinate columns pivot before the constant
// term, free variables are zero, and for sum-zero vertex sets the coefficient
// vector is shifted so its minimum is 0.  With that normalization the result
// coincides with the cut-indicator construction on tree simplices.
inline Functional facet_functional(const Simplex& s, int opposite) {
    const int n = (int)s.verts[0].size();
    const int k = (int)s.verts.size();
    if (opposite < 0 || opposite >= k) throw input_error("facet index out of range");
    RatMat a(k, RatVec(n + 1));
    RatVec b(k, Rat(0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(s.verts[i][j]);
        a[i][n] = 1;  // constant-term column, pivoted last
    }
    b[opposite] = 1;
    std::vector<int> col_order(n + 1);
    for (int j = 0; j <= n; ++j) col_order[j] = j;
    auto sol = gauss_solve_free_zero(a, b, col_order);
    if (!sol) throw input_error("degenerate simplex: facet functional has no solution");
    Functional f;
    f.coeffs.assign(sol->begin(), sol->begin() + n);
    f.constant = (*sol)[n];
    bool sum_zero = true;
    for (const auto& v : s.verts) {
        Int sum = 0;
        for (const Int& c : v) sum += c;
        sum_zero = sum_zero && (sum == 0);
    }
    if (sum_zero) {  // adding a multiple of the all-ones vector is free here
        Rat lo = f.coeffs[0];
        for (const Rat& c : f.coeffs) lo = std::min(lo, c);
        for (Rat& c : f.coeffs) c -= lo;
    }
    return f;
}

// Indices of the facets of s visible from q: facet opposite vertex j is
// visible iff its functional (normalized to 1 at vertex j) is negative at q.
// A zero value means q lies on the facet hyperplane: that is a genericity
// failure and always raises.
inline std::vector<int> visible_facets(const Simplex& s, const RatVec& q) {
    std::vector<int> vis;
    for (int j = 0; j < (int)s.verts.size(); ++j) {
        Functional f = facet_functional(s, j);
        Rat v = f.eval(q);
        if (v == 0)
            throw genericity_error("reference point lies on a facet hyperplane",
                                   f.to_string());
        if (v < 0) vis.push_back(j);
    }
    return vis;
}

// -------------------------------------------------------------- membership --

// Decides z in t*conv(verts) by exact LP feasibility (phase-1 simplex,
// Bland's rule, integer pivoting).  The constraint matrix depends only on the
// vertex set, so one tester serves many query points.
class MembershipTester {
public:
    explicit MembershipTester(const std::vector<IntVec>& verts) {
        const int n = (int)verts[0].size();
        const int k = (int)verts.size();
        rows_.assign(n + 1, IntVec(k));
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < n; ++i) rows_[i][j] = verts[j][i];
            rows_[n][j] = 1;
        }
    }

    bool contains(const IntVec& z, const Int& t) const {
        IntVec b(z.begin(), z.end());
        b.push_back(t);
        return lp_feasible(rows_, b);
    }

private:
    IntMat rows_;
};

// z in t*conv(verts), rational data allowed (cleared to integers first).
inline bool contains_point(const std::vector<RatVec>& verts, const RatVec& z,
                           const Int& t = 1) {
    Int d = 1;
    for (const auto& v : verts)
        for (const Rat& c : v) d = lcm(d, denominator(c));
    for (const Rat& c : z) d = lcm(d, denominator(c));
    std::vector<IntVec> iv;
    for (const auto& v : verts) {
        IntVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = numerator(Rat(v[i] * d));
        iv.push_back(std::move(w));
    }
    IntVec zi(z.size());
    for (size_t i = 0; i < z.size(); ++i) zi[i] = numerator(Rat(z[i] * d));
    return MembershipTester(iv).contains(zi, t);
}

// Maximum s such that z = sum(lambda_i * verts_i), sum(lambda) = 1,
// lambda_i >= s; nullopt when z is outside the affine hull.  z lies in the
// relative interior of conv(verts) iff the optimum is positive.
inline std::optional<Rat> relint_margin(const std::vector<RatVec>& verts,
                                        const RatVec& z) {
    Int d = 1;
    for (const auto& v : verts)
        for (const Rat& c : v) d = lcm(d, denominator(c));
    for (const Rat& c : z) d = lcm(d, denominator(c));
    const int n = (int)z.size();
    const int k = (int)verts.size();
    // Variables: u_1..u_k (lambda_i = u_i + s), s = sp - sm.
    IntMat A(n + 1, IntVec(k + 2, 0));
    IntVec b(n + 1), c(k + 2, 0);
    for (int i = 0; i < n; ++i) {
        Int coef_s = 0;
        for (int j = 0; j < k; ++j) {
            A[i][j] = numerator(Rat(verts[j][i] * d));
            coef_s += A[i][j];
        }
        A[i][k] = coef_s;
        A[i][k + 1] = -coef_s;
        b[i] = numerator(Rat(z[i] * d));
    }
    for (int j = 0; j < k; ++j) A[n][j] = 1;
    A[n][k] = k;
    A[n][k + 1] = -k;
    b[n] = 1;
    c[k] = 1;
    c[k + 1] = -1;
    return lp_maximize(A, b, c);
}

inline bool relint_contains(const std::vector<RatVec>& verts, const RatVec& z) {
    auto margin = relint_margin(verts, z);
    return margin && *margin > 0;
}

// ------------------------------------------------------ interior disjoint --

struct InteriorDisjointness {
    bool disjoint = false;
    std::optional<RatVec> common_point;  // a shared relative-interior point if not disjoint
};

// Do conv(a) and conv(b) have a common relative-interior point?  LP: find a
// common point with all coefficients >= s on both sides and maximize s.
inline InteriorDisjointness interior_disjoint(const std::vector<IntVec>& a,
                                              const std::vector<IntVec>& b) {
    const int n = (int)a[0].size();
    const int ka = (int)a.size(), kb = (int)b.size();
    // Variables: u_1..u_ka, w_1..w_kb, sp, sm  (alpha = u + s, beta = w + s).
    const int nv = ka + kb + 2;
    IntMat A(n + 2, IntVec(nv, 0));
    IntVec rhs(n + 2, 0), c(nv, 0);
    for (int i = 0; i < n; ++i) {
        Int coef_s = 0;
        for (int j = 0; j < ka; ++j) {
            A[i][j] = a[j][i];
            coef_s += a[j][i];
        }
        for (int j = 0; j < kb; ++j) {
            A[i][ka + j] = -b[j][i];
            coef_s -= b[j][i];
        }
        A[i][ka + kb] = coef_s;
        A[i][ka + kb + 1] = -coef_s;
    }
    for (int j = 0; j < ka; ++j) A[n][j] = 1;
    A[n][ka + kb] = ka;
    A[n][ka + kb + 1] = -ka;
    rhs[n] = 1;
    for (int j = 0; j < kb; ++j) A[n + 1][ka + j] = 1;
    A[n + 1][ka + kb] = kb;
    A[n + 1][ka + kb + 1] = -kb;
    rhs[n + 1] = 1;
    c[ka + kb] = 1;
    c[ka + kb + 1] = -1;

    RatVec x;
    auto opt = lp_maximize(A, rhs, c, &x);
    InteriorDisjointness result;
    if (!opt || *opt <= 0) {
        result.disjoint = true;
        return result;
    }
    Rat s = x[ka + kb] - x[ka + kb + 1];
    RatVec pt(n, Rat(0));
    for (int j = 0; j < ka; ++j) {
        Rat alpha = x[j] + s;
        for (int i = 0; i < n; ++i) pt[i] += alpha * Rat(a[j][i]);
    }
    result.common_point = std::move(pt);
    return result;
}

inline InteriorDisjointness interior_disjoint(const Simplex& a, const Simplex& b) {
    return interior_disjoint(a.verts, b.verts);
}

// ------------------------------------------------------------ affine hulls --

// For a set of >= 1 points spanning an affine hyperplane *within* the
// sum-zero space (rank n-2), returns the integral functional c with
// c.p = c0 on all points, normalized: sum(c) = 0, gcd 1, and c0 >= 0.
// Returns nullopt if the points do not span rank n-2.
struct HullHyperplane {
    IntVec normal;  // length n, sum 0, primitive
    Int offset = 0;
    bool operator<(const HullHyperplane& o) const {
        return std::tie(offset, normal) < std::tie(o.offset, o.normal);
    }
    bool operator==(const HullHyperplane& o) const {
        return offset == o.offset && normal == o.normal;
    }
};

inline std::optional<HullHyperplane> sum_zero_hull_hyperplane(
    const std::vector<IntVec>& pts) {
    const int n = (int)pts[0].size();
    IntMat diff = detail::difference_matrix(pts);
    // Nullspace of the difference matrix must be exactly span{1, w}.
    RatMat a;
    for (auto& r : diff) a.push_back(to_rat_vec(r));
    // Eliminate to find the nullspace basis.
    std::vector<int> pivot_of_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < (int)a.size(); ++col) {
        int pr = -1;
        for (int r = row; r < (int)a.size(); ++r)
            if (a[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        Rat inv = Rat(1) / a[row][col];
        for (int j = 0; j < n; ++j) a[row][j] *= inv;
        for (int r = 0; r < (int)a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    if (row != n - 2) return std::nullopt;
    std::vector<RatVec> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        RatVec v(n, Rat(0));
        v[col] = 1;
        for (int c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = -a[pivot_of_col[c2]][col];
        basis.push_back(std::move(v));
    }
    // Combine the two basis vectors into the unique (up to scale) sum-zero one.
    Rat s0 = 0, s1 = 0;
    for (int i = 0; i < n; ++i) {
        s0 += basis[0][i];
        s1 += basis[1][i];
    }
    RatVec cr(n);
    for (int i = 0; i < n; ++i) cr[i] = s1 * basis[0][i] - s0 * basis[1][i];
    Int den = 1;
    for (const Rat& v : cr) den = lcm(den, denominator(v));
    IntVec c(n);
    Int g = 0;
    for (int i = 0; i < n; ++i) {
        c[i] = numerator(Rat(cr[i] * den));
        g = gcd(g, c[i]);
    }
    if (g == 0) return std::nullopt;
    for (Int& v : c) v /= g;
    Int c0 = 0;
    for (int i = 0; i < n; ++i) c0 += c[i] * pts[0][i];
    if (c0 < 0) {
        for (Int& v : c) v = -v;
        c0 = -c0;
    } else if (c0 == 0) {
        // orient deterministically: first nonzero coefficient positive
        for (const Int& v : c) {
            if (v == 0) continue;
            if (v < 0)
                for (Int& w : c) w = -w;
            break;
        }
    }
    return HullHyperplane{std::move(c), c0};
}

// ---------------------------------------------------- lattice enumeration --

// All lattice points of t*conv(verts), in lexicographic coordinate order.
// Box enumeration over exact per-coordinate bounds with partial-sum and
// positive/negative-part pruning (those statistics are convex, so vertex
// maxima bound the whole polytope), then exact LP membership per candidate.
inline std::vector<IntVec> lattice_points(const std::vector<IntVec>& verts,
                                          const Int& t) {
    std::vector<IntVec> out;
    if (t < 0) throw input_error("dilation must be nonnegative");
    const int n = (int)verts[0].size();
    if (t == 0) {
        out.push_back(IntVec(n, 0));  // conv is nonempty, 0*P = {0}
        return out;
    }
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Int mn = verts[0][i], mx = verts[0][i];
        for (const auto& v : verts) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = t * mn;
        hi[i] = t * mx;
    }
    Int sum_lo, sum_hi, pos_cap = 0, neg_cap = 0;
    {
        bool first = true;
        for (const auto& v : verts) {
            Int s = 0, p = 0, q = 0;
            for (const Int& c : v) {
                s += c;
                if (c > 0) p += c;
                else q += c;
            }
            if (first) { sum_lo = s; sum_hi = s; first = false; }
            sum_lo = std::min(sum_lo, s);
            sum_hi = std::max(sum_hi, s);
            pos_cap = std::max(pos_cap, p);
            neg_cap = std::min(neg_cap, q);
        }
        sum_lo *= t;
        sum_hi *= t;
        pos_cap *= t;
        neg_cap *= t;
    }
    // Suffix sums of bounds for the partial-sum prune.
    IntVec suf_lo(n + 1, 0), suf_hi(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suf_lo[i] = suf_lo[i + 1] + lo[i];
        suf_hi[i] = suf_hi[i + 1] + hi[i];
    }
    MembershipTester tester(verts);
    IntVec z(n);
    Int sum = 0, pos = 0, neg = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (sum >= sum_lo && sum <= sum_hi && tester.contains(z, t))
                out.push_back(z);
            return;
        }
        for (Int v = lo[i]; v <= hi[i]; ++v) {
            Int s2 = sum + v;
            if (s2 + suf_hi[i + 1] < sum_lo || s2 + suf_lo[i + 1] > sum_hi) continue;
            Int p2 = pos + (v > 0 ? v : Int(0));
            Int q2 = neg + (v < 0 ? v : Int(0));
            if (p2 > pos_cap || q2 < neg_cap) continue;
            z[i] = v;
            Int po = pos, ne = neg, so = sum;
            sum = s2;
            pos = p2;
            neg = q2;
            self(self, i + 1);
            sum = so;
            pos = po;
            neg = ne;
        }
        z[i] = 0;
    };
    rec(rec, 0);
    return out;
}

inline Int count_lattice_points(const std::vector<IntVec>& verts, const Int& t) {
    return Int(lattice_points(verts, t).size());
}

}  // namespace hstar
