#pragma once

// The lattice-point-counting route to h*: dilate, count, and solve in the
// binomial-coefficient basis.  Independent of any dissection machinery — this
// is the oracle the tree-statistics routes are checked against.

#include "hstar/errors.hpp"
#include "hstar/geometry.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace hstar {

inline Int binomial(const Int& top, int k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= top - i;
        den *= i + 1;
    }
    return num / den;
}

struct HStarPolynomial {
    IntVec coeffs;  // coeffs[k] = h*_k for k = 0..dim (trailing zeros kept)

    int degree() const {
        int d = 0;
        for (int k = 0; k < (int)coeffs.size(); ++k)
            if (coeffs[k] != 0) d = k;
        return d;
    }
    Int sum() const {
        Int s = 0;
        for (const Int& c : coeffs) s += c;
        return s;
    }
    // Equality of polynomials, not of coefficient-vector lengths.
    bool same_polynomial(const HStarPolynomial& o) const {
        size_t hi = std::max(coeffs.size(), o.coeffs.size());
        for (size_t k = 0; k < hi; ++k) {
            Int a = k < coeffs.size() ? coeffs[k] : Int(0);
            Int b = k < o.coeffs.size() ? o.coeffs[k] : Int(0);
            if (a != b) return false;
        }
        return true;
    }
    std::string to_string() const {
        std::ostringstream os;
        bool any = false;
        for (int k = 0; k < (int)coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            if (any) os << " + ";
            if (coeffs[k] != 1 || k == 0) os << coeffs[k].str();
            if (k >= 1) os << "x";
            if (k >= 2) os << "^" << k;
            any = true;
        }
        if (!any) os << "0";
        return os.str();
    }
};

inline HStarPolynomial hstar_from_distribution(const std::vector<int>& stat_values,
                                               int dim) {
    HStarPolynomial h;
    h.coeffs.assign(dim + 1, 0);
    for (int v : stat_values) {
        if (v < 0 || v > dim) throw input_error("statistic value outside 0..dim");
        ++h.coeffs[v];
    }
    return h;
}

struct EhrhartPolynomial {
    int dim = 0;
    IntVec counts;    // counts[t] = |tP n Z^n| for t = 0..dim
    RatVec power;     // power[j] = coefficient of t^j, exact rationals

    Rat eval(const Int& t) const {
        Rat v = 0, p = 1;
        for (const Rat& c : power) {
            v += c * p;
            p *= Rat(t);
        }
        return v;
    }
    std::string to_string() const {
        std::ostringstream os;
        for (int j = 0; j < (int)power.size(); ++j) {
            if (j) os << " + ";
            os << rat_to_string(power[j]);
            if (j >= 1) os << "t";
            if (j >= 2) os << "^" << j;
        }
        return os.str();
    }
};

struct EhrhartData {
    EhrhartPolynomial ehrhart;
    HStarPolynomial hstar;
    Int normalized_volume = 0;  // = sum of h* coefficients = d! * leading coeff
};

// Solves eps(t) = sum_k a_k * C(t + d - k, d) for the a_k given the counts at
// t = 0..d.  The system is triangular: C(t + d - k, d) vanishes for k > t and
// equals 1 at k = t.
inline HStarPolynomial hstar_from_counts(const IntVec& counts) {
    const int d = (int)counts.size() - 1;
    HStarPolynomial h;
    h.coeffs.assign(d + 1, 0);
    for (int t = 0; t <= d; ++t) {
        Int acc = counts[t];
        for (int k = 0; k < t; ++k) acc -= h.coeffs[k] * binomial(Int(t + d - k), d);
        h.coeffs[t] = acc;
    }
    if (d >= 0 && h.coeffs[0] != 1)
        throw input_error("lattice point counts do not start at 1");
    for (const Int& c : h.coeffs)
        if (c < 0)
            throw input_error("negative h* coefficient: input is not a lattice polytope "
                              "or the counts are wrong");
    return h;
}

// Expands sum_k a_k * C(t + d - k, d) into the power basis (exact rationals).
inline EhrhartPolynomial ehrhart_from_hstar(const HStarPolynomial& h, int d,
                                            IntVec counts = {}) {
    EhrhartPolynomial e;
    e.dim = d;
    e.counts = std::move(counts);
    e.power.assign(d + 1, Rat(0));
    Int dfact = 1;
    for (int i = 2; i <= d; ++i) dfact *= i;
    for (int k = 0; k <= d && k < (int)h.coeffs.size(); ++k) {
        if (h.coeffs[k] == 0) continue;
        // C(t + d - k, d) = prod_{j=0}^{d-1} (t + d - k - j) / d!
        std::vector<Int> poly = {1};
        for (int j = 0; j < d; ++j) {
            Int c0 = Int(d - k - j);
            std::vector<Int> next(poly.size() + 1, 0);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i] * c0;
                next[i + 1] += poly[i];
            }
            poly = std::move(next);
        }
        for (size_t j = 0; j < poly.size(); ++j)
            e.power[j] += Rat(h.coeffs[k] * poly[j], dfact);
    }
    return e;
}

// The full oracle: dimension from the affine rank of the vertex set, exact
// lattice-point counts for t = 0..d, then the binomial-basis solve.
inline EhrhartData ehrhart_hstar(const std::vector<IntVec>& verts) {
    if (verts.empty()) throw input_error("ehrhart oracle needs a nonempty vertex set");
    const int d = detail::affine_rank(verts);
    IntVec counts;
    for (int t = 0; t <= d; ++t) counts.push_back(count_lattice_points(verts, Int(t)));
    EhrhartData data;
    data.hstar = hstar_from_counts(counts);
    data.ehrhart = ehrhart_from_hstar(data.hstar, d, counts);
    data.normalized_volume = data.hstar.sum();
    return data;
}

}  // namespace hstar
