#pragma once

#include <vector>

#include "gwzeta/errors.hpp"
#include "gwzeta/ring.hpp"

namespace gwzeta {

// Dense polynomial over an exact coefficient ring.  Coefficient i is the
// degree-i term; the representation is normalized (no trailing zeros), with
// the zero polynomial stored as an empty list.
template <CoefficientRing R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(const R& x) { return Poly(std::vector<R>{x}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    // Coefficient of t^i, with an explicit zero for indices past the degree.
    R coeff(int i, const R& zero) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }

    Poly operator+(const Poly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const R zero = ring_zero(c_[0]);
        std::vector<R> r;
        size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i)
            r.push_back(coeff(static_cast<int>(i), zero) + o.coeff(static_cast<int>(i), zero));
        return Poly(std::move(r));
    }

    Poly operator-() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const R& x : c_) r.push_back(-x);
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        const R zero = ring_zero(c_[0]);
        std::vector<R> r(c_.size() + o.c_.size() - 1, zero);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    // Formal derivative: coefficient i of P' is (i+1) * P_{i+1}.
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> r;
        r.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.push_back(scale(Integer(i), c_[i]));
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize() {
        while (!c_.empty() && is_ring_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

// Power series truncated at t^M: exactly M coefficients, representing the
// class mod t^M.  Binary operations require matching truncation orders.
template <CoefficientRing R>
class Series {
public:
    Series(int order, const R& zero) : c_(static_cast<size_t>(require_order(order)), zero) {}
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("series must have positive truncation order");
    }

    int order() const { return static_cast<int>(c_.size()); }
    const R& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    R& operator[](int i) { return c_.at(static_cast<size_t>(i)); }
    const std::vector<R>& coeffs() const { return c_; }

    Series operator+(const Series& o) const {
        check_order(o);
        Series r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
        return r;
    }

    Series operator-(const Series& o) const {
        check_order(o);
        Series r = *this;
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    // Truncated Cauchy product.
    Series operator*(const Series& o) const {
        check_order(o);
        const R zero = ring_zero(c_[0]);
        Series r(order(), zero);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_ring_zero(c_[i])) continue;
            for (size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!is_ring_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    static int require_order(int order) {
        if (order < 1) throw Error("series must have positive truncation order");
        return order;
    }
    void check_order(const Series& o) const {
        if (o.order() != order())
            throw Error("series truncation order mismatch: " + std::to_string(order()) + " vs " +
                        std::to_string(o.order()));
    }
    std::vector<R> c_;
};

template <CoefficientRing R>
Series<R> series_from_poly(const Poly<R>& p, int order, const R& zero) {
    Series<R> s(order, zero);
    for (int i = 0; i < order; ++i) s[i] = p.coeff(i, zero);
    return s;
}

// Inverse of a polynomial with constant term 1, as the truncated geometric
// series sum_m (1 - P)^m; each extra factor of (1 - P) raises the valuation,
// so M terms suffice.
template <CoefficientRing R>
Series<R> series_inverse_unit(const Poly<R>& p, int order) {
    if (p.is_zero()) throw Error("not a unit-normalized polynomial (zero)");
    const R one = ring_one(p.coeffs()[0]);
    const R zero = ring_zero(one);
    if (!(p.coeff(0, zero) == one)) throw Error("not a unit-normalized polynomial (constant term != 1)");

    Series<R> e = -series_from_poly(p, order, zero);
    e[0] = e[0] + one;  // e = 1 - P, valuation >= 1
    Series<R> result(order, zero);
    result[0] = one;
    Series<R> term = result;
    for (int m = 1; m < order; ++m) {
        term = term * e;
        if (term.is_zero()) break;
        result = result + term;
    }
    return result;
}

// Formal logarithmic derivative P'(t)/P(t) of a unit-normalized polynomial.
template <CoefficientRing R>
Series<R> dlog_poly(const Poly<R>& p, int order) {
    Series<R> inv = series_inverse_unit(p, order);
    const R zero = ring_zero(p.coeffs()[0]);
    return series_from_poly(p.derivative(), order, zero) * inv;
}

}  // namespace gwzeta
