#include "gwzeta/zeta.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gwzeta {

namespace {

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

Integer alpha(const Variety& x, int i) {
    if (i < 1) throw Error("alpha requires i >= 1");
    Integer sum = 0;
    for (int d : divisors(i)) sum += mobius(d) * x.counts(i / d);
    if (sum % i != 0 || sum < 0)
        throw InconsistentData("inconsistent point counts: sum_{d|" + std::to_string(i) +
                               "} mu(d)|X(F_{q^{" + std::to_string(i) + "/d}})| = " + sum.get_str() +
                               " is not " + (sum < 0 ? "nonnegative" : "divisible by i") + " for " +
                               x.label());
    return sum / i;
}

GwFq enriched_trace_formal(const Variety& x, int m) {
    if (m < 1) throw Error("enriched trace requires m >= 1");
    const FqTag& f = x.field();
    GwFq total = GwFq::zero(f);
    for (int i : divisors(m)) total += scale(alpha(x, i), transfer(f, i));
    return total;
}

GwFq enriched_trace_Nm(const Variety& x, int m) {
    if (!x.proper())
        throw MissingCapability("pipeline requires proper: " + x.label() +
                                " is not flagged smooth proper");
    return enriched_trace_formal(x, m);
}

std::vector<int> disc_series_direct(const Variety& x, int order) {
    std::vector<int> bits(static_cast<size_t>(order), 0);
    if (!x.field().odd()) return bits;
    for (int m = 1; m <= order; ++m) {
        Integer sum = 0;
        for (int i : divisors(m))
            if (i % 2 == 0) sum += alpha(x, i);
        bits[static_cast<size_t>(m - 1)] = is_odd(sum) ? 1 : 0;
    }
    return bits;
}

namespace {

ZetaReport dlog_zeta_impl(const Variety& x, int order, bool parallel) {
    if (order < 1) throw Error("dlog_zeta requires order >= 1");
    if (!x.proper())
        throw MissingCapability("pipeline requires proper: " + x.label() +
                                " is not flagged smooth proper");
    const FqTag& f = x.field();
    // Closed-point counts once, serially; this also validates the counts.
    // The per-m loop below is then pure arithmetic on shared immutable data.
    std::vector<Integer> alphas(static_cast<size_t>(order) + 1);
    for (int i = 1; i <= order; ++i) alphas[static_cast<size_t>(i)] = alpha(x, i);

    Series<GwFq> enriched(order, GwFq::zero(f));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int m = 1; m <= order; ++m) {
        GwFq total = GwFq::zero(f);
        for (int i : divisors(m)) total += scale(alphas[static_cast<size_t>(i)], transfer(f, i));
        enriched[m - 1] = total;
    }
    (void)parallel;

    ZetaReport report{std::move(enriched), {}, {}, std::nullopt, std::nullopt};
    report.rank_series.reserve(static_cast<size_t>(order));
    report.disc_series.reserve(static_cast<size_t>(order));
    for (int m = 1; m <= order; ++m) {
        const GwFq& c = report.enriched[m - 1];
        if (c.rank() != x.counts(m))
            throw Error("rank projection broke: coefficient " + std::to_string(m - 1) + " of " +
                        x.label());
        report.rank_series.push_back(c.rank());
        report.disc_series.push_back(c.disc());
    }
    if (x.cells()) {
        report.closed_form = cellular_closed_form(f, *x.cells(), order).first;
        if (f.odd())
            report.sign_series =
                sign_series_of_factors(cellular_closed_form_int(*x.cells(), f.q), order);
    } else if (x.is_res_p1() && f.odd()) {
        report.closed_form = res_p1_closed_form(f, order).first;
        if (f.q % 4 == 3)
            report.sign_series = sign_series_of_factors(res_p1_closed_form_int(f.q), order);
    }
    return report;
}

}  // namespace

ZetaReport dlog_zeta(const Variety& x, int order) { return dlog_zeta_impl(x, order, true); }
ZetaReport dlog_zeta_serial(const Variety& x, int order) { return dlog_zeta_impl(x, order, false); }

std::pair<FactorList<GwFq>, Series<GwFq>> cellular_closed_form(const FqTag& f,
                                                               const CellData& cells, int order) {
    if (cells.b.empty()) throw Error("cell data must be nonempty");
    FactorList<GwFq> factors;
    GwFq weight = GwFq::one(f);
    const GwFq minus_one = gw_minus_one(f);
    for (size_t i = 0; i < cells.b.size(); ++i) {
        if (cells.b[i] < 0) throw Error("cell data entries must be nonnegative");
        if (cells.b[i] > 0)
            factors.push_back({weight, q_eps_pow(f, static_cast<int>(i)), Integer(cells.b[i])});
        weight = weight * minus_one;
    }
    return {factors, expand_factors(factors, order, GwFq::zero(f))};
}

FactorList<GwInt> cellular_closed_form_int(const CellData& cells, long q) {
    if (cells.b.empty()) throw Error("cell data must be nonempty");
    FactorList<GwInt> factors;
    GwInt weight = GwInt::one();
    GwInt pole = GwInt::one();
    const GwInt qe = q_eps_int(q);
    const GwInt minus_one = GwInt::minus_one_form();
    for (size_t i = 0; i < cells.b.size(); ++i) {
        if (cells.b[i] > 0) factors.push_back({weight, pole, Integer(cells.b[i])});
        weight = weight * minus_one;
        pole = pole * qe;
    }
    return factors;
}

std::pair<FactorList<GwFq>, Series<GwFq>> res_p1_closed_form(const FqTag& f, int order) {
    if (!f.odd()) throw MissingCapability("Res P^1 closed form requires odd q");
    const GwFq one = GwFq::one(f);
    const GwFq u = gw_u(f);
    const GwFq minus_one = gw_minus_one(f);
    const GwFq qe = q_eps(f);
    FactorList<GwFq> factors{
        {one, one, Integer(1)},
        {one, qe * qe, Integer(1)},
        {minus_one * u, u * qe, Integer(1)},  // <-u> dlog 1/(1 - <u> q_eps t)
        {minus_one, -qe, Integer(1)},         // <-1> dlog 1/(1 + q_eps t)
    };
    return {factors, expand_factors(factors, order, GwFq::zero(f))};
}

FactorList<GwInt> res_p1_closed_form_int(long q) {
    if (q % 4 != 3) throw Error("GW(Z) lift of Res P^1 requires q = 3 mod 4 (u = -1)");
    const GwInt one = GwInt::one();
    const GwInt minus_one = GwInt::minus_one_form();
    const GwInt qe = q_eps_int(q);
    return FactorList<GwInt>{
        {one, one, Integer(1)},
        {one, qe * qe, Integer(1)},
        {one, minus_one * qe, Integer(1)},  // <-u> = <1> and <u> q_eps = <-1> q_eps
        {minus_one, -qe, Integer(1)},
    };
}

GwFq cellular_trace(const std::vector<RingMatrix<GwFq>>& c, int m, const FqTag& f) {
    if (m < 1) throw Error("cellular trace requires m >= 1");
    GwFq total = GwFq::zero(f);
    GwFq sign = GwFq::one(f);
    const GwFq minus_one = gw_minus_one(f);
    for (const auto& mat : c) {
        RingMatrix<GwFq> power = mat;
        for (int j = 1; j < m; ++j) power = power * mat;
        total += sign * power.trace();
        sign = sign * minus_one;
    }
    return total;
}

GwFq cellular_trace(const std::vector<RingMatrix<GwFq>>& c, int m) {
    if (c.empty()) throw Error("cellular trace of an empty complex needs an explicit field");
    return cellular_trace(c, m, c.front().at(0, 0).field());
}

GwFq euler_characteristic(const CellData& cells, const FqTag& f) {
    GwFq total = GwFq::zero(f);
    GwFq sign = GwFq::one(f);
    const GwFq minus_one = gw_minus_one(f);
    for (long bi : cells.b) {
        total += scale(Integer(bi), sign);
        sign = sign * minus_one;
    }
    return total;
}

GwInt euler_characteristic_int(const CellData& cells) {
    GwInt total = GwInt::zero();
    GwInt sign = GwInt::one();
    for (long bi : cells.b) {
        total += scale(Integer(bi), sign);
        sign = sign * GwInt::minus_one_form();
    }
    return total;
}

Series<Integer> sign_series_from_topology(const TopologyData& top, int order) {
    Series<Integer> total(order, Integer(0));
    for (size_t i = 0; i < top.d.size(); ++i) {
        if (top.d[i].is_zero()) throw Error("topology data polynomials must be unit-normalized");
        if (top.d[i].degree() == 0) continue;  // D_i = 1 contributes nothing
        Series<Integer> term = dlog_poly(top.d[i], order);
        total = (i % 2 == 0) ? total - term : total + term;
    }
    return total;
}

Series<Integer> sign_series_of_factors(const FactorList<GwInt>& factors, int order) {
    Series<GwInt> expanded = expand_factors(factors, order, GwInt::zero());
    Series<Integer> s(order, Integer(0));
    for (int i = 0; i < order; ++i) s[i] = expanded[i].sign();
    return s;
}

bool sign_check_via_reduction(const FactorList<GwInt>& factors, const Series<GwFq>& pipeline,
                              const FqTag& f, int order) {
    Series<GwInt> expanded = expand_factors(factors, order, GwInt::zero());
    if (pipeline.order() != order) return false;
    for (int i = 0; i < order; ++i)
        if (!(reduce_mod_p(expanded[i], f) == pipeline[i])) return false;
    return true;
}

bool functional_equation_check(const FactorList<GwFq>& factors, int n, const FqTag& f, int order,
                               std::optional<GwFq> chi_override) {
    if (n < 1 || n % 2 == 0) throw Error("functional equation stated only for odd n");
    // Every pole must be a Frobenius weight q_eps^a with 0 <= a <= n.
    std::vector<GwFq> powers;
    for (int i = 0; i <= n; ++i) powers.push_back(q_eps_pow(f, i));
    std::vector<int> exponent;
    for (const auto& fac : factors) {
        int a = -1;
        for (int i = 0; i <= n; ++i)
            if (fac.pole == powers[static_cast<size_t>(i)]) a = i;
        if (a < 0) return false;
        exponent.push_back(a);
    }

    // Substituting t -> 1/(q_eps^n t) sends the factor at q_eps^a to the one
    // at q_eps^{n-a} and leaves behind the constant mult * weight * t^{-1}.
    GwFq constants = GwFq::zero(f);
    FactorList<GwFq> transformed;
    const GwFq minus_one = gw_minus_one(f);
    for (size_t j = 0; j < factors.size(); ++j) {
        constants += scale(factors[j].mult, factors[j].weight);
        transformed.push_back({minus_one * factors[j].weight,
                               powers[static_cast<size_t>(n - exponent[j])], factors[j].mult});
    }
    GwFq chi = chi_override ? *chi_override
                            : euler_characteristic(
                                  CellData{std::vector<long>(static_cast<size_t>(n) + 1, 1)}, f);
    if (!(minus_one * constants == chi)) return false;

    const GwFq zero = GwFq::zero(f);
    return expand_factors(transformed, order, zero) == expand_factors(factors, order, zero);
}

bool motivic_check_product(const Variety& x, const Variety& y, int order) {
    Variety xy = product(x, y);
    for (int m = 1; m <= order; ++m)
        if (!(enriched_trace_Nm(xy, m) == enriched_trace_Nm(x, m) * enriched_trace_Nm(y, m)))
            return false;
    return true;
}

bool motivic_check_cut_and_paste(const Variety& x, const Variety& z, const Variety& u, int order) {
    for (int m = 1; m <= order; ++m)
        if (!(enriched_trace_formal(x, m) ==
              enriched_trace_formal(z, m) + enriched_trace_formal(u, m)))
            return false;
    return true;
}

}  // namespace gwzeta
