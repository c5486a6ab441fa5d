#include "gwzeta/gw.hpp"

namespace gwzeta {

namespace {

void check_same_field(const FqTag& a, const FqTag& b) {
    if (!(a == b))
        throw Error("mismatched fields: " + field_name(a) + " vs " + field_name(b));
}

int disc_minus_one(const FqTag& f) {
    if (!f.odd()) return 0;
    return is_square_in_fq(f, -1) ? 0 : 1;
}

}  // namespace

GwFq::GwFq(FqTag field, Integer rank, int disc_bit)
    : field_(field), n_(std::move(rank)), s_(field.odd() ? (disc_bit & 1) : 0) {}

GwFq GwFq::operator+(const GwFq& o) const {
    check_same_field(field_, o.field_);
    return GwFq(field_, n_ + o.n_, s_ ^ o.s_);
}

GwFq GwFq::operator-(const GwFq& o) const { return *this + (-o); }

// (n1, s1)(n2, s2) = (n1 n2, n1 s2 + s1 n2 mod 2), from <u>^2 = <1> and
// 2<u> = 2<1>.
GwFq GwFq::operator*(const GwFq& o) const {
    check_same_field(field_, o.field_);
    int s = 0;
    if (o.s_ && is_odd(n_)) s ^= 1;
    if (s_ && is_odd(o.n_)) s ^= 1;
    return GwFq(field_, n_ * o.n_, s);
}

GwFq scale(const Integer& m, const GwFq& x) {
    return GwFq(x.field(), m * x.rank(), is_odd(m) ? x.disc() : 0);
}

GwFq gw_gen(const FqTag& f, const Integer& a) {
    Integer rem = a % f.p;
    long a_mod_p = rem.get_si();  // |rem| < p < 2^31
    if (a_mod_p % f.p == 0)
        throw Error("degenerate form: <a> requires gcd(a, p) = 1");
    return GwFq(f, 1, is_square_in_fq(f, a_mod_p) ? 0 : 1);
}

GwFq n_eps(const FqTag& f, long n) {
    if (n < 0) throw Error("n_eps requires n >= 0");
    // ceil(n/2) copies of <1> and floor(n/2) copies of <-1>.
    long minus_ones = n / 2;
    int s = (minus_ones % 2 != 0) ? disc_minus_one(f) : 0;
    return GwFq(f, n, s);
}

GwFq q_eps(const FqTag& f) { return n_eps(f, f.q); }

GwFq q_eps_pow(const FqTag& f, int i) {
    GwFq r = GwFq::one(f);
    GwFq base = q_eps(f);
    for (int j = 0; j < i; ++j) r = r * base;
    return r;
}

GwFq hyperbolic(const FqTag& f) { return n_eps(f, 2); }

GwFq gw_minus_one(const FqTag& f) { return GwFq(f, 1, disc_minus_one(f)); }

GwFq gw_u(const FqTag& f) { return GwFq(f, 1, f.odd() ? 1 : 0); }

GwFq transfer(const FqTag& f, long i) {
    if (i <= 0) throw Error("transfer requires a positive extension degree");
    return GwFq(f, i, i % 2 == 0 ? (f.odd() ? 1 : 0) : 0);
}

GwInt scale(const Integer& m, const GwInt& x) { return GwInt(m * x.c1(), m * x.cm1()); }

GwInt n_eps_int(long n) {
    if (n < 0) throw Error("n_eps requires n >= 0");
    return GwInt((n + 1) / 2, n / 2);
}

GwInt q_eps_int(long q) { return n_eps_int(q); }

GwFq reduce_mod_p(const GwInt& x, const FqTag& f) {
    if (!f.odd()) return GwFq(f, x.rank(), 0);
    GwFq m1 = gw_minus_one(f);
    return scale(x.c1(), GwFq::one(f)) + scale(x.cm1(), m1);
}

}  // namespace gwzeta
