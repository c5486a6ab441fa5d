#include "gwzeta/variety.hpp"

#include <algorithm>

#include "gwzeta/kernels.hpp"

namespace gwzeta {

namespace {

void check_same_field(const Variety& x, const Variety& y) {
    if (!(x.field() == y.field()))
        throw Error("mismatched fields: " + x.label() + " over " + field_name(x.field()) + ", " +
                    y.label() + " over " + field_name(y.field()));
}

// Power sums p_1..p_count of the inverse roots of Q(t) = prod (1 - lambda t),
// by Newton's identities on the coefficient list; no root finding.
std::vector<Integer> power_sums(const Poly<Integer>& q, int count) {
    const int b = q.degree();
    std::vector<Integer> p(static_cast<size_t>(count) + 1, Integer(0));
    for (int m = 1; m <= count; ++m) {
        Integer acc = 0;
        if (m <= b) acc -= Integer(m) * q.coeff(m, Integer(0));
        for (int i = 1; i < m && i <= b; ++i) acc -= q.coeff(i, Integer(0)) * p[static_cast<size_t>(m - i)];
        p[static_cast<size_t>(m)] = acc;
    }
    p.erase(p.begin());
    return p;
}

}  // namespace

Variety::Variety(FqTag field, std::string label, int dim, bool proper,
                 std::function<Integer(int)> count_fn, std::optional<CellData> cells)
    : field_(field),
      label_(std::move(label)),
      dim_(dim),
      proper_(proper),
      cells_(std::move(cells)),
      count_fn_(std::move(count_fn)),
      cache_(std::make_shared<Cache>()) {}

Integer Variety::counts(int m) const {
    if (m < 1) throw Error("counts requires m >= 1");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->memo.find(m);
    if (it != cache_->memo.end()) return it->second;
    Integer v = count_fn_(m);
    if (v < 0)
        throw InconsistentData("negative count: |" + label_ + "(F_{q^" + std::to_string(m) +
                               "})| = " + v.get_str());
    cache_->memo.emplace(m, v);
    return v;
}

Integer gaussian_binomial(int n, int k, const Integer& q) {
    if (k < 0 || k > n) return 0;
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= ipow(q, static_cast<unsigned long>(n - i)) - 1;
        den *= ipow(q, static_cast<unsigned long>(i + 1)) - 1;
    }
    return divexact(num, den, "gaussian binomial");
}

// Coefficients of the Gaussian binomial [rows+cols choose rows]_x via the
// q-Pascal recurrence; coefficient w counts partitions of w in the box.
std::vector<Integer> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0) throw Error("partitions_in_box requires nonnegative box sides");
    const int n = rows + cols, k = rows;
    std::vector<std::vector<Integer>> prev(static_cast<size_t>(k) + 1), cur;
    for (int kk = 0; kk <= k; ++kk) prev[static_cast<size_t>(kk)] = {Integer(kk == 0 ? 1 : 0)};
    for (int m = 1; m <= n; ++m) {
        cur.assign(static_cast<size_t>(k) + 1, {});
        cur[0] = {Integer(1)};
        for (int kk = 1; kk <= std::min(k, m); ++kk) {
            // [m choose kk]_x = [m-1 choose kk]_x + x^{m-kk} [m-1 choose kk-1]_x
            std::vector<Integer> c = prev[static_cast<size_t>(kk)];
            const auto& lower = prev[static_cast<size_t>(kk - 1)];
            size_t shift = static_cast<size_t>(m - kk);
            if (c.size() < lower.size() + shift) c.resize(lower.size() + shift, Integer(0));
            for (size_t i = 0; i < lower.size(); ++i) c[i + shift] += lower[i];
            cur[static_cast<size_t>(kk)] = std::move(c);
        }
        prev = cur;
    }
    std::vector<Integer> out = prev[static_cast<size_t>(k)];
    out.resize(static_cast<size_t>(rows) * cols + 1, Integer(0));
    return out;
}

Variety projective_space(const FqTag& f, int n) {
    if (n < 0) throw ParseError("projective space needs dimension >= 0");
    long q = f.q;
    CellData cells{std::vector<long>(static_cast<size_t>(n) + 1, 1)};
    return Variety(
        f, "Pn(" + std::to_string(n) + ")", n, true,
        [q, n](int m) {
            Integer total = 0;
            for (int i = 0; i <= n; ++i) total += ipow(q, static_cast<unsigned long>(i) * m);
            return total;
        },
        cells);
}

Variety affine_space(const FqTag& f, int n) {
    if (n < 0) throw ParseError("affine space needs dimension >= 0");
    long q = f.q;
    return Variety(f, "A(" + std::to_string(n) + ")", n, false,
                   [q, n](int m) { return ipow(q, static_cast<unsigned long>(n) * m); });
}

Variety point(const FqTag& f) { return projective_space(f, 0); }

Variety spec_fq2(const FqTag& f) {
    return Variety(f, "spec(F_q2)", 0, true, [](int m) { return Integer(m % 2 == 0 ? 2 : 0); });
}

Variety grassmannian(const FqTag& f, int r, int n) {
    if (r < 0 || r >= n) throw ParseError("Gr(r,n) needs 0 <= r < n");
    long q = f.q;
    std::vector<Integer> by_weight = partitions_in_box(r + 1, n - r);
    CellData cells;
    cells.b.reserve(by_weight.size());
    for (const Integer& c : by_weight) cells.b.push_back(to_long(c, "cell count"));
    int dim = (r + 1) * (n - r);
    return Variety(
        f, "Gr(" + std::to_string(r) + "," + std::to_string(n) + ")", dim, true,
        [q, r, n](int m) {
            return gaussian_binomial(n + 1, r + 1, ipow(q, static_cast<unsigned long>(m)));
        },
        cells);
}

Variety product(const Variety& x, const Variety& y) {
    check_same_field(x, y);
    std::optional<CellData> cells;
    if (x.cells() && y.cells()) {
        const auto& a = x.cells()->b;
        const auto& c = y.cells()->b;
        std::vector<long> b(a.size() + c.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < c.size(); ++j) b[i + j] += a[i] * c[j];
        cells = CellData{std::move(b)};
    }
    return Variety(
        x.field(), "prod(" + x.label() + "," + y.label() + ")", x.dim() + y.dim(),
        x.proper() && y.proper(), [x, y](int m) -> Integer { return x.counts(m) * y.counts(m); }, cells);
}

Variety disjoint_union(const Variety& x, const Variety& y) {
    check_same_field(x, y);
    std::optional<CellData> cells;
    if (x.cells() && y.cells()) {
        std::vector<long> b = x.cells()->b;
        const auto& c = y.cells()->b;
        if (b.size() < c.size()) b.resize(c.size(), 0);
        for (size_t i = 0; i < c.size(); ++i) b[i] += c[i];
        cells = CellData{std::move(b)};
    }
    return Variety(
        x.field(), "disj(" + x.label() + "," + y.label() + ")", std::max(x.dim(), y.dim()),
        x.proper() && y.proper(), [x, y](int m) -> Integer { return x.counts(m) + y.counts(m); }, cells);
}

Variety complement_pair(const Variety& x, const Variety& z) {
    check_same_field(x, z);
    return Variety(x.field(), "compl(" + x.label() + "," + z.label() + ")", x.dim(), false,
                   [x, z](int m) -> Integer { return x.counts(m) - z.counts(m); });
}

Variety weil_restriction_p1(const FqTag& f) {
    long q = f.q;
    // Res(P^1)(F_{q^m}) = P^1(F_{q^m} (x) F_{q^2}); the tensor factor is a
    // field for m odd and splits for m even.
    Variety v(f, "resP1", 2, true, [q](int m) -> Integer {
        if (m % 2 == 1) return ipow(q, 2ul * m) + 1;
        Integer s = ipow(q, static_cast<unsigned long>(m)) + 1;
        return s * s;
    });
    return v.mark_res_p1();
}

Variety elliptic_curve(const FqTag& f, long a, long b) {
    if (f.p == 2) throw ParseError("even characteristic unsupported for elliptic curves");
    if (f.k != 1) throw ParseError("elliptic curves are supported over prime fields only");
    long p = f.p;
    long disc = ((4 % p) * (((a % p) * (a % p) % p) * (a % p) % p) % p + (27 % p) * (((b % p) * (b % p)) % p) % p) % p;
    disc = ((disc % p) + p) % p;
    if (disc == 0)
        throw ParseError("singular curve: 4A^3 + 27B^2 = 0 mod " + std::to_string(p));
    long trace = -elliptic_char_sum(p, a, b);  // a_p, so |E(F_p)| = p + 1 - a_p
    Poly<Integer> frob(std::vector<Integer>{Integer(1), Integer(-trace), Integer(p)});
    return Variety(f, "ell(" + std::to_string(a) + "," + std::to_string(b) + ")", 1, true,
                   [p, frob](int m) -> Integer {
                       std::vector<Integer> s = power_sums(frob, m);
                       return ipow(p, static_cast<unsigned long>(m)) + 1 - s.back();
                   });
}

std::vector<std::string> weil_data_warnings(const WeilData& w) {
    std::vector<std::string> warnings;
    if (w.q.empty()) return warnings;
    Poly<Integer> h0(std::vector<Integer>{Integer(1), Integer(-1)});
    if (!(w.q.front() == h0)) warnings.push_back("degree-0 polynomial is not 1 - t");
    int top = static_cast<int>(w.q.size()) - 1;
    if (top % 2 != 0) {
        warnings.push_back("odd number of cohomological degrees (expected 2*dim + 1 entries)");
    } else {
        Integer qd = ipow(w.field.q, static_cast<unsigned long>(top / 2));
        Poly<Integer> htop(std::vector<Integer>{Integer(1), Integer(-qd)});
        if (!(w.q.back() == htop))
            warnings.push_back("top-degree polynomial is not 1 - q^dim t");
    }
    return warnings;
}

Variety from_weil_data(const WeilData& w) {
    if (w.q.empty()) throw InconsistentData("inconsistent Weil data: no polynomials");
    for (const auto& poly : w.q)
        if (!(poly.coeff(0, Integer(0)) == 1))
            throw InconsistentData("inconsistent Weil data: polynomial without constant term 1");
    int dim = (static_cast<int>(w.q.size()) - 1) / 2;
    std::vector<Poly<Integer>> polys = w.q;
    return Variety(w.field, "weil", dim, true, [polys](int m) {
        Integer total = 0;
        for (size_t j = 0; j < polys.size(); ++j) {
            Integer tm = power_sums(polys[j], m).back();
            total += (j % 2 == 0) ? tm : -tm;
        }
        if (total < 0) throw InconsistentData("inconsistent Weil data: negative point count");
        return total;
    });
}

Variety from_table(const FqTag& f, std::vector<Integer> table, bool proper, std::string label) {
    if (table.empty()) throw InconsistentData("count table must not be empty");
    for (const Integer& v : table)
        if (v < 0) throw InconsistentData("count table entries must be nonnegative");
    return Variety(f, std::move(label), 0, proper, [table](int m) -> Integer {
        if (static_cast<size_t>(m) > table.size())
            throw InconsistentData("insufficient data: table has " + std::to_string(table.size()) +
                                   " entries, count for m = " + std::to_string(m) + " requested");
        return table[static_cast<size_t>(m) - 1];
    });
}

}  // namespace gwzeta
