#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwzeta/fq.hpp"
#include "gwzeta/integer.hpp"
#include "gwzeta/poly.hpp"

namespace gwzeta {

// Cell ranks of a strict cellular structure: b[i] = number of i-cells.
struct CellData {
    std::vector<long> b;
};

// Integer characteristic polynomials of Frobenius on the cohomology in each
// degree j = 0..2d, each with constant term 1.  Point counts follow from the
// power sums of the inverse roots.
struct WeilData {
    FqTag field;
    std::vector<Poly<Integer>> q;
};

// Shape sanity warnings (degree-0 and top-degree polynomials have a standard
// form for a connected variety); advisory only.
std::vector<std::string> weil_data_warnings(const WeilData& w);

// A point-count source: exact |X(F_{q^m})| for m >= 1, plus the metadata the
// zeta pipeline needs.  Counts are memoized behind a mutex; the count
// function itself must be pure.
class Variety {
public:
    Variety(FqTag field, std::string label, int dim, bool proper,
            std::function<Integer(int)> count_fn, std::optional<CellData> cells = std::nullopt);

    const FqTag& field() const { return field_; }
    const std::string& label() const { return label_; }
    int dim() const { return dim_; }
    bool proper() const { return proper_; }
    const std::optional<CellData>& cells() const { return cells_; }

    // Closed form of the enriched zeta series is available either from cell
    // data or, for the quadratic twist of P^1 x P^1, from its bespoke factor
    // list (see res_p1_closed_form).
    bool is_res_p1() const { return res_p1_; }
    Variety& mark_res_p1() {
        res_p1_ = true;
        return *this;
    }

    Integer counts(int m) const;

private:
    FqTag field_;
    std::string label_;
    int dim_;
    bool proper_;
    std::optional<CellData> cells_;
    bool res_p1_ = false;
    std::function<Integer(int)> count_fn_;

    struct Cache {
        std::mutex mu;
        std::map<int, Integer> memo;
    };
    std::shared_ptr<Cache> cache_;
};

// Exact Gaussian binomial [n choose k]_Q.
Integer gaussian_binomial(int n, int k, const Integer& q);

// Number of partitions with exactly `weight` boxes fitting in a rows x cols
// box; these count the Schubert cells of a Grassmannian by dimension.
std::vector<Integer> partitions_in_box(int rows, int cols);

// --- catalog ---

Variety projective_space(const FqTag& f, int n);
Variety affine_space(const FqTag& f, int n);
Variety point(const FqTag& f);
Variety spec_fq2(const FqTag& f);  // Spec F_{q^2} as an F_q-scheme

// G(r, n): r-planes in P^n, 0 <= r < n.
Variety grassmannian(const FqTag& f, int r, int n);

Variety product(const Variety& x, const Variety& y);
Variety disjoint_union(const Variety& x, const Variety& y);

// Open complement X \ Z for Z closed in X; counts subtract, and a negative
// difference is reported as inconsistent data.
Variety complement_pair(const Variety& x, const Variety& z);

// Res_{F_{q^2}/F_q} P^1: q^{2m} + 1 points over F_{q^m} for m odd,
// (q^m + 1)^2 for m even.
Variety weil_restriction_p1(const FqTag& f);

// y^2 = x^3 + Ax + B over a prime field (k = 1, p odd, nonsingular).
// |E(F_p)| is counted by the quadratic-character kernel; higher counts come
// from the Frobenius power-sum recurrence s_m = a s_{m-1} - p s_{m-2}.
Variety elliptic_curve(const FqTag& f, long a, long b);

Variety from_weil_data(const WeilData& w);

Variety from_table(const FqTag& f, std::vector<Integer> table, bool proper = true,
                   std::string label = "table");

}  // namespace gwzeta
