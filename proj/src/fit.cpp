#include <algorithm>

#include "gwzeta/zeta.hpp"

namespace gwzeta {

namespace {

// Minimal LFSR for the sequence s over Q (Berlekamp-Massey).  Returns the
// connection polynomial C with C[0] = 1 and
//   sum_{i=0}^{L} C[i] s[m-i] = 0   for L <= m < |s|.
std::vector<Rational> berlekamp_massey(const std::vector<Rational>& s) {
    std::vector<Rational> c{1}, b{1};
    int L = 0, m = 1;
    Rational last_d = 1;
    for (size_t n = 0; n < s.size(); ++n) {
        Rational d = s[n];
        for (int i = 1; i <= L; ++i) d += c[static_cast<size_t>(i)] * s[n - static_cast<size_t>(i)];
        if (d == 0) {
            ++m;
        } else if (2 * L <= static_cast<int>(n)) {
            std::vector<Rational> t = c;
            Rational coef = d / last_d;
            if (c.size() < b.size() + static_cast<size_t>(m)) c.resize(b.size() + static_cast<size_t>(m), Rational(0));
            for (size_t i = 0; i < b.size(); ++i) c[i + static_cast<size_t>(m)] -= coef * b[i];
            L = static_cast<int>(n) + 1 - L;
            b = std::move(t);
            last_d = d;
            m = 1;
        } else {
            Rational coef = d / last_d;
            if (c.size() < b.size() + static_cast<size_t>(m)) c.resize(b.size() + static_cast<size_t>(m), Rational(0));
            for (size_t i = 0; i < b.size(); ++i) c[i + static_cast<size_t>(m)] -= coef * b[i];
            ++m;
        }
    }
    c.resize(static_cast<size_t>(L) + 1, Rational(0));
    return c;
}

Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
    Rational v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// p(x) / (x - root), exact; p must vanish at root.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& root) {
    std::vector<Rational> q(p.size() - 1, Rational(0));
    Rational carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry = p[i] + root * carry;
        q[i - 1] = carry;
    }
    return q;
}

// Solve the Vandermonde system sum_j c_j rho_j^m = r_m, m = 1..L, exactly.
std::vector<Rational> solve_vandermonde(const std::vector<Integer>& rho,
                                        const std::vector<Rational>& r) {
    size_t L = rho.size();
    std::vector<std::vector<Rational>> aug(L, std::vector<Rational>(L + 1, Rational(0)));
    for (size_t m = 0; m < L; ++m) {
        for (size_t j = 0; j < L; ++j) {
            Rational pw = 1;
            for (size_t e = 0; e <= m; ++e) pw *= Rational(rho[j]);
            aug[m][j] = pw;
        }
        aug[m][L] = r[m];
    }
    for (size_t col = 0; col < L; ++col) {
        size_t pivot = col;
        while (pivot < L && aug[pivot][col] == 0) ++pivot;
        if (pivot == L) throw FitError("not dlog-rational over the candidate basis (singular system)");
        std::swap(aug[col], aug[pivot]);
        for (size_t row = 0; row < L; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rational factor = aug[row][col] / aug[col][col];
            for (size_t k = col; k <= L; ++k) aug[row][k] -= factor * aug[col][k];
        }
    }
    std::vector<Rational> c(L);
    for (size_t j = 0; j < L; ++j) c[j] = aug[j][L] / aug[j][j];
    return c;
}

struct PolePair {
    Integer rho;      // rank of the pole, +-q^i
    int exponent;     // the i in |rho| = q^i
    bool negative;    // sign of rho
    Integer c;        // combined rank coefficient from stage 1
    GwFq alpha;       // canonical pole (+-q_eps^i)
    int y_even = 0;   // disc of the combined even-m weight
    int y_odd = 0;    // disc of the combined odd-m weight
    PolePair(Integer rho_, int exponent_, bool negative_, Integer c_, GwFq alpha_)
        : rho(std::move(rho_)), exponent(exponent_), negative(negative_), c(std::move(c_)),
          alpha(std::move(alpha_)) {}
};

}  // namespace

FactorList<GwFq> fit_dlog_rational(const Series<GwFq>& s,
                                   std::optional<std::vector<GwFq>> pole_basis) {
    const int order = s.order();
    const FqTag f = s[0].field();
    const Integer q = f.q;

    std::optional<std::vector<Integer>> basis_ranks;
    if (pole_basis) {
        if (order < 2 * static_cast<int>(pole_basis->size()))
            throw FitError("insufficient order: " + std::to_string(order) + " terms for " +
                           std::to_string(pole_basis->size()) + " candidate poles");
        basis_ranks.emplace();
        for (const auto& p : *pole_basis) basis_ranks->push_back(p.rank());
    }

    // Stage 1: minimal recurrence of the rank projection, roots in {+-q^i}.
    std::vector<Rational> ranks;
    ranks.reserve(static_cast<size_t>(order));
    for (int m = 1; m <= order; ++m) ranks.emplace_back(s[m - 1].rank());

    std::vector<Rational> connection = berlekamp_massey(ranks);
    const int big_l = static_cast<int>(connection.size()) - 1;
    if (2 * big_l > order)
        throw FitError("insufficient order: recurrence of order " + std::to_string(big_l) +
                       " cannot be certified from " + std::to_string(order) + " terms");

    // Characteristic polynomial of the recurrence: x^L + C1 x^{L-1} + ... + CL.
    std::vector<Rational> charpoly(connection.rbegin(), connection.rend());

    Rational bound = 1;
    for (const auto& coef : charpoly) bound += abs(coef);
    std::vector<PolePair> pairs;
    for (Integer mag = 1; Rational(mag) <= bound && static_cast<int>(charpoly.size()) > 1;
         mag *= q) {
        for (int sign = 0; sign < 2 && static_cast<int>(charpoly.size()) > 1; ++sign) {
            Integer rho = sign == 0 ? mag : -mag;
            if (basis_ranks &&
                std::find(basis_ranks->begin(), basis_ranks->end(), rho) == basis_ranks->end())
                continue;
            if (eval_poly(charpoly, Rational(rho)) != 0) continue;
            charpoly = deflate(charpoly, Rational(rho));
            if (eval_poly(charpoly, Rational(rho)) == 0)
                throw FitError("not dlog-rational over the candidate basis (repeated pole rank " +
                               rho.get_str() + ")");
            int exponent = 0;
            for (Integer v = 1; v < mag; v *= q) ++exponent;
            GwFq alpha = q_eps_pow(f, exponent);
            if (sign == 1) alpha = -alpha;
            pairs.emplace_back(rho, exponent, sign == 1, Integer(0), alpha);
        }
    }
    if (charpoly.size() > 1)
        throw FitError("not dlog-rational over the candidate basis (roots outside {+-q^i})");

    if (!pairs.empty()) {
        std::vector<Integer> rho;
        for (const auto& p : pairs) rho.push_back(p.rho);
        std::vector<Rational> coeffs = solve_vandermonde(rho, ranks);
        for (size_t j = 0; j < pairs.size(); ++j) {
            if (coeffs[j].get_den() != 1)
                throw FitError("not dlog-rational over the candidate basis (non-integer weight)");
            pairs[j].c = coeffs[j].get_num();
        }
        // The recurrence certifies the tail; re-check every term anyway.
        for (int m = 1; m <= order; ++m) {
            Rational acc = 0;
            for (const auto& p : pairs) {
                Rational pw = 1;
                for (int e = 0; e < m; ++e) pw *= Rational(p.rho);
                acc += Rational(p.c) * pw;
            }
            if (acc != ranks[static_cast<size_t>(m - 1)])
                throw FitError("not dlog-rational over the candidate basis (rank re-expansion)");
        }
    }

    // Stage 2: disc decomposition over the pole pairs {alpha, <u> alpha}.
    // With all pole ranks odd, disc(W alpha^m) = c delta_m + y_{parity(m)},
    // so the residual disc sequence must be constant on each parity class.
    if (f.odd()) {
        std::vector<int> residual(static_cast<size_t>(order), 0);
        for (int m = 1; m <= order; ++m) {
            int e = s[m - 1].disc();
            for (const auto& p : pairs) {
                if (!is_odd(p.c)) continue;
                GwFq apow = GwFq::one(f);
                for (int j = 0; j < m; ++j) apow = apow * p.alpha;
                e ^= apow.disc();
            }
            residual[static_cast<size_t>(m - 1)] = e;
        }
        std::optional<int> y_odd, y_even;
        for (int m = 1; m <= order; ++m) {
            int e = residual[static_cast<size_t>(m - 1)];
            auto& slot = (m % 2 == 1) ? y_odd : y_even;
            if (!slot)
                slot = e;
            else if (*slot != e)
                throw FitError("not dlog-rational over the candidate basis (disc series)");
        }

        // Preferred guess: the weight at +-q_eps^i is c <-1>^i, as in cellular
        // closed forms; leftovers go to a rank-one carrier pole.
        int guess_sum = 0;
        for (auto& p : pairs) {
            int guess = is_odd(p.c) ? scale(p.c, gw_minus_one(f)).disc() * (p.exponent % 2) : 0;
            p.y_even = p.y_odd = guess;
            guess_sum ^= guess;
        }
        int need_odd = y_odd.value_or(guess_sum) ^ guess_sum;
        int need_even = y_even.value_or(guess_sum) ^ guess_sum;
        if (need_odd || need_even) {
            PolePair* carrier = nullptr;
            for (auto& p : pairs)
                if (p.exponent == 0 && !p.negative) carrier = &p;
            if (!carrier) {
                if (basis_ranks && std::find(basis_ranks->begin(), basis_ranks->end(),
                                             Integer(1)) == basis_ranks->end())
                    throw FitError("not dlog-rational over the candidate basis (no carrier pole)");
                pairs.emplace_back(Integer(1), 0, false, Integer(0), GwFq::one(f));
                carrier = &pairs.back();
            }
            carrier->y_odd ^= need_odd;
            carrier->y_even ^= need_even;
        }
    }

    // Reconstruct one weight per pole (and its <u>-twin when the even and odd
    // combined weights differ).
    FactorList<GwFq> out;
    const GwFq u = gw_u(f);
    auto emit = [&](const GwFq& weight, const GwFq& pole) {
        if (weight.is_zero()) return;
        if (weight.disc() == 0) {
            out.push_back({GwFq::one(f), pole, weight.rank()});
        } else if (is_odd(weight.rank())) {
            out.push_back({u, pole, weight.rank()});
        } else {
            out.push_back({GwFq::one(f), pole, weight.rank() - 1});
            out.push_back({u, pole, Integer(1)});
        }
    };
    for (const auto& p : pairs) {
        if (p.y_even == p.y_odd) {
            emit(GwFq(f, p.c, p.y_even), p.alpha);
        } else if (is_odd(p.c)) {
            emit(GwFq(f, p.c, p.y_even), u * p.alpha);
        } else {
            emit(GwFq(f, p.c - 1, 0), p.alpha);
            emit(GwFq(f, 1, p.y_even), u * p.alpha);
        }
    }

    if (!(expand_factors(out, order, GwFq::zero(f)) == s))
        throw FitError("not dlog-rational over the candidate basis (re-expansion mismatch)");
    return out;
}

}  // namespace gwzeta
