#pragma once

#include <vector>

#include "gwzeta/poly.hpp"
#include "gwzeta/ring.hpp"

namespace gwzeta {

// Square matrix over an exact coefficient ring.
template <CoefficientRing R>
class RingMatrix {
public:
    RingMatrix(int n, const R& fill) : n_(require_dim(n)), e_(static_cast<size_t>(n) * n, fill) {}

    static RingMatrix identity(int n, const R& one) {
        RingMatrix m(n, ring_zero(one));
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static RingMatrix scalar(int n, const R& lambda) {
        RingMatrix m(n, ring_zero(lambda));
        for (int i = 0; i < n; ++i) m.at(i, i) = lambda;
        return m;
    }

    int dim() const { return n_; }
    R& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    RingMatrix operator*(const RingMatrix& o) const {
        if (o.n_ != n_) throw Error("matrix dimension mismatch");
        const R zero = ring_zero(e_[0]);
        RingMatrix r(n_, zero);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const R& aik = at(i, k);
                if (is_ring_zero(aik)) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        return r;
    }

    R trace() const {
        R t = ring_zero(e_[0]);
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    friend bool operator==(const RingMatrix&, const RingMatrix&) = default;

private:
    static int require_dim(int n) {
        if (n < 1) throw Error("matrix dimension must be positive");
        return n;
    }
    int n_;
    std::vector<R> e_;
};

namespace detail {

// Cofactor determinant of a matrix of polynomials.  The coefficient rings in
// play are not integral domains (GW(F_q) has zero divisors and 2-torsion), so
// elimination-based determinants are unavailable; sizes stay tiny.
template <CoefficientRing R>
Poly<R> poly_det(const std::vector<std::vector<Poly<R>>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly<R> det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly<R>>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly<R>> row;
            row.reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Poly<R> term = m[0][j] * poly_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace detail

inline constexpr int kDetDimensionCap = 8;

// Characteristic polynomial det(1 - At), exact, constant term 1.
template <CoefficientRing R>
Poly<R> det_one_minus_t(const RingMatrix<R>& a) {
    if (a.dim() > kDetDimensionCap)
        throw Error("dimension cap: det(1 - At) supports matrices up to " +
                    std::to_string(kDetDimensionCap) + "x" + std::to_string(kDetDimensionCap));
    const R one = ring_one(a.at(0, 0));
    const R zero = ring_zero(one);
    std::vector<std::vector<Poly<R>>> m(static_cast<size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            std::vector<R> c{i == j ? one : zero, -a.at(i, j)};
            m[static_cast<size_t>(i)].push_back(Poly<R>(std::move(c)));
        }
    return detail::poly_det(m);
}

// The series with coefficient of t^{m-1} equal to -Tr(A^m); together with
// det_one_minus_t this realizes the Newton identity
//   d/dt log det(1 - At) = sum_m -Tr(A^m) t^{m-1}.
template <CoefficientRing R>
Series<R> newton_trace_series(const RingMatrix<R>& a, int order) {
    const R zero = ring_zero(a.at(0, 0));
    Series<R> s(order, zero);
    RingMatrix<R> power = a;
    for (int m = 1; m <= order; ++m) {
        if (m > 1) power = power * a;
        s[m - 1] = -power.trace();
    }
    return s;
}

}  // namespace gwzeta
