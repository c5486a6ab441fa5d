#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gwzeta/gw.hpp"
#include "gwzeta/matrix.hpp"
#include "gwzeta/poly.hpp"
#include "gwzeta/variety.hpp"

namespace gwzeta {

// One term of a dlog-rational closed form: weight * mult * dlog 1/(1 - pole*t).
// A factor list denotes the series whose coefficient of t^{m-1} is
//   sum_j weight_j * mult_j * pole_j^m.
// That expansion rule is the single source of truth for signs; the
// pretty-printer renders the usual "d/dt log 1/(1 - pole t)^mult" style.
template <CoefficientRing R>
struct Factor {
    R weight;
    R pole;
    Integer mult;

    friend bool operator==(const Factor&, const Factor&) = default;
};

template <CoefficientRing R>
using FactorList = std::vector<Factor<R>>;

template <CoefficientRing R>
Series<R> expand_factors(const FactorList<R>& factors, int order, const R& zero) {
    Series<R> s(order, zero);
    for (const auto& f : factors) {
        R pole_pow = ring_one(zero);
        for (int m = 1; m <= order; ++m) {
            pole_pow = pole_pow * f.pole;
            s[m - 1] = s[m - 1] + scale(f.mult, f.weight * pole_pow);
        }
    }
    return s;
}

// The enriched logarithmic zeta series together with its realizations.
// sign_series is the coefficientwise signature of the GW(Z) lift of the
// closed form, present when the catalog knows such a lift.
struct ZetaReport {
    Series<GwFq> enriched;
    std::vector<Integer> rank_series;  // rank of coefficient m-1 = |X(F_{q^m})|
    std::vector<int> disc_series;
    std::optional<FactorList<GwFq>> closed_form;
    std::optional<Series<Integer>> sign_series;
};

// Characteristic polynomials det(1 - t phi | H^i) of an endomorphism on the
// singular cohomology of the real points of a lift, by degree i.
struct TopologyData {
    std::vector<Poly<Integer>> d;
};

// Number of closed points of degree i, by Moebius inversion of the counts:
// alpha(i) = (1/i) sum_{d|i} mu(d) |X(F_{q^{i/d}})|.  A non-integral or
// negative value means the counts cannot come from a variety.
Integer alpha(const Variety& x, int i);

// Enriched trace of Frobenius^m via the trace formula
//   N_m = sum_{i|m} alpha(i) Tr_{F_{q^i}/F_q}<1>.
// Requires a smooth proper source; enriched_trace_formal evaluates the same
// expression on any count sequence (used by the motivic-measure identities).
GwFq enriched_trace_Nm(const Variety& x, int m);
GwFq enriched_trace_formal(const Variety& x, int m);

// The full pipeline: series of N_m for m = 1..M, rank and disc projections,
// and the closed form when the catalog knows one.
ZetaReport dlog_zeta(const Variety& x, int order);
ZetaReport dlog_zeta_serial(const Variety& x, int order);  // reference path

// disc N_m = sum_{i|m, i even} alpha(i) mod 2, computed independently of the
// enriched series.
std::vector<int> disc_series_direct(const Variety& x, int order);

// Closed form for a strict cellular structure: coefficient of t^{m-1} is
// sum_i <-1>^i b_i q_eps^{im}.
std::pair<FactorList<GwFq>, Series<GwFq>> cellular_closed_form(const FqTag& f,
                                                               const CellData& cells, int order);

// The same closed form lifted to GW(Z) (Frobenius acts on the i-cells by
// (q_eps^i as an alternating integer form); defined for odd q).
FactorList<GwInt> cellular_closed_form_int(const CellData& cells, long q);

// Closed form of Res_{F_{q^2}/F_q} P^1:
//   dlog 1/((1-t)(1-q_eps^2 t)) + <-u> dlog 1/(1 - <u> q_eps t)
//                                + <-1> dlog 1/(1 + q_eps t).
std::pair<FactorList<GwFq>, Series<GwFq>> res_p1_closed_form(const FqTag& f, int order);

// GW(Z) lift of the Res P^1 closed form; requires q = 3 mod 4, where u = -1.
FactorList<GwInt> res_p1_closed_form_int(long q);

// Lefschetz-style trace of a graded tuple of GW-matrices:
// sum_i <-1>^i Tr(C_i^m).  The empty complex has trace 0 (give the field).
GwFq cellular_trace(const std::vector<RingMatrix<GwFq>>& c, int m, const FqTag& f);
GwFq cellular_trace(const std::vector<RingMatrix<GwFq>>& c, int m);

// Compactly supported Euler characteristic sum_i <-1>^i b_i.
GwFq euler_characteristic(const CellData& cells, const FqTag& f);
GwInt euler_characteristic_int(const CellData& cells);

// Signature of the enriched series from the topology of the real points:
// sum_i -(-1)^i dlog D_i(t).
Series<Integer> sign_series_from_topology(const TopologyData& top, int order);

// Coefficientwise signature of an expanded GW(Z) factor list.
Series<Integer> sign_series_of_factors(const FactorList<GwInt>& factors, int order);

// Expands a GW(Z) factor list, reduces mod p coefficientwise and compares
// with a GW(F_q) pipeline series.
bool sign_check_via_reduction(const FactorList<GwInt>& factors, const Series<GwFq>& pipeline,
                              const FqTag& f, int order);

// Functional equation of P^n for odd n: the closed-form factor list must be
// carried to itself (up to a global <-1>) by pole q_eps^i -> q_eps^{n-i},
// with the collected constant terms matching the Euler characteristic.
// chi_override substitutes the expected Euler characteristic (a corrupted
// value makes the check fail, as it should).
bool functional_equation_check(const FactorList<GwFq>& factors, int n, const FqTag& f, int order,
                               std::optional<GwFq> chi_override = std::nullopt);

// Reconstruction of a dlog-rational closed form from a truncated series.
// Stage 1 finds the minimal linear recurrence of the rank projection
// (Berlekamp-Massey over Q, exact) and demands integer characteristic roots
// of the form +-q^i; stage 2 solves for the disc decomposition over the pole
// pairs {alpha, <u> alpha} and verifies by re-expansion.
FactorList<GwFq> fit_dlog_rational(const Series<GwFq>& s,
                                   std::optional<std::vector<GwFq>> pole_basis = std::nullopt);

// Motivic-measure laws for N_m, checked to order M:
// multiplicativity N_m(X x Y) = N_m(X) N_m(Y), and cut-and-paste additivity
// N_m(X) = N_m(Z) + N_m(U) evaluated on the formula level.
bool motivic_check_product(const Variety& x, const Variety& y, int order);
bool motivic_check_cut_and_paste(const Variety& x, const Variety& z, const Variety& u, int order);

}  // namespace gwzeta
