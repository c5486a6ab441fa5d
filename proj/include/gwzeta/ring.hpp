#pragma once

#include <concepts>

#include "gwzeta/gw.hpp"
#include "gwzeta/integer.hpp"

namespace gwzeta {

// zero/one "like" an existing element.  GW(F_q) values carry their field tag,
// so the neutral elements are derived from a sample rather than default
// construction.
inline Integer ring_zero(const Integer&) { return Integer(0); }
inline Integer ring_one(const Integer&) { return Integer(1); }
inline GwFq ring_zero(const GwFq& x) { return GwFq::zero(x.field()); }
inline GwFq ring_one(const GwFq& x) { return GwFq::one(x.field()); }
inline GwInt ring_zero(const GwInt&) { return GwInt::zero(); }
inline GwInt ring_one(const GwInt&) { return GwInt::one(); }

inline Integer scale(const Integer& m, const Integer& x) { return m * x; }

// Exact commutative coefficient ring: the contract poly/series arithmetic
// needs.  scale is the Z-module action used by formal derivatives.
template <typename R>
concept CoefficientRing = requires(const R a, const R b, const Integer m) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_zero(a) } -> std::convertible_to<R>;
    { ring_one(a) } -> std::convertible_to<R>;
    { scale(m, a) } -> std::convertible_to<R>;
};

template <CoefficientRing R>
bool is_ring_zero(const R& x) {
    return x == ring_zero(x);
}

}  // namespace gwzeta
