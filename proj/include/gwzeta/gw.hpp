#pragma once

#include <string>

#include "gwzeta/errors.hpp"
#include "gwzeta/fq.hpp"
#include "gwzeta/integer.hpp"

namespace gwzeta {

// Element of the Grothendieck-Witt ring GW(F_q) in canonical form
// (rank, disc bit): the element (n - s)<1> + s<u> for a fixed non-square u.
// The presentation GW(F_q) = Z[<u>]/(<u>^2 - 1, 2(<u> - 1)) makes the pair
// (n, s) a complete invariant; u itself is never stored.  In characteristic 2
// the discriminant is trivial and s is forced to 0.
class GwFq {
public:
    GwFq(FqTag field, Integer rank, int disc_bit);

    static GwFq zero(const FqTag& f) { return GwFq(f, 0, 0); }
    static GwFq one(const FqTag& f) { return GwFq(f, 1, 0); }

    const FqTag& field() const { return field_; }
    const Integer& rank() const { return n_; }
    int disc() const { return s_; }
    bool is_zero() const { return n_ == 0 && s_ == 0; }

    GwFq operator+(const GwFq& o) const;
    GwFq operator-(const GwFq& o) const;
    GwFq operator*(const GwFq& o) const;
    GwFq operator-() const { return GwFq(field_, -n_, s_); }
    GwFq& operator+=(const GwFq& o) { return *this = *this + o; }

    friend bool operator==(const GwFq&, const GwFq&) = default;

private:
    FqTag field_;
    Integer n_;  // rank
    int s_;      // disc bit, always 0 for even q
};

// Scalar action of Z on GW(F_q) (the image of m under Z -> GW, m |-> m<1>).
GwFq scale(const Integer& m, const GwFq& x);

// <a> for a prime-field unit a; throws on a = 0 mod p ("degenerate form").
GwFq gw_gen(const FqTag& f, const Integer& a);

// n_eps = <1> + <-1> + <1> + ... (n summands); n_eps * m_eps = (nm)_eps.
GwFq n_eps(const FqTag& f, long n);

GwFq q_eps(const FqTag& f);              // n_eps at n = q
GwFq q_eps_pow(const FqTag& f, int i);   // q_eps^i
GwFq hyperbolic(const FqTag& f);         // h = <1> + <-1>
GwFq gw_minus_one(const FqTag& f);       // <-1>
GwFq gw_u(const FqTag& f);               // <u>, the fixed non-square class

// Transfer Tr_{F_{q^i}/F_q}<1>: i<1> for i odd, (i-1)<1> + <u> for i even.
GwFq transfer(const FqTag& f, long i);

inline Integer rank_fq(const GwFq& x) { return x.rank(); }
inline int disc_fq(const GwFq& x) { return x.disc(); }

// Element of GW(Z) = GW(R), a free abelian group on <1> and <-1>.
class GwInt {
public:
    GwInt() : c1_(0), cm1_(0) {}
    GwInt(Integer c1, Integer cm1) : c1_(std::move(c1)), cm1_(std::move(cm1)) {}

    static GwInt zero() { return GwInt(0, 0); }
    static GwInt one() { return GwInt(1, 0); }
    static GwInt minus_one_form() { return GwInt(0, 1); }  // <-1>

    const Integer& c1() const { return c1_; }
    const Integer& cm1() const { return cm1_; }
    bool is_zero() const { return c1_ == 0 && cm1_ == 0; }

    Integer rank() const { return c1_ + cm1_; }
    Integer sign() const { return c1_ - cm1_; }

    GwInt operator+(const GwInt& o) const { return GwInt(c1_ + o.c1_, cm1_ + o.cm1_); }
    GwInt operator-(const GwInt& o) const { return GwInt(c1_ - o.c1_, cm1_ - o.cm1_); }
    GwInt operator-() const { return GwInt(-c1_, -cm1_); }
    // <-1>^2 = <1>
    GwInt operator*(const GwInt& o) const {
        return GwInt(c1_ * o.c1_ + cm1_ * o.cm1_, c1_ * o.cm1_ + cm1_ * o.c1_);
    }
    GwInt& operator+=(const GwInt& o) { return *this = *this + o; }

    friend bool operator==(const GwInt&, const GwInt&) = default;

private:
    Integer c1_, cm1_;
};

GwInt scale(const Integer& m, const GwInt& x);

GwInt n_eps_int(long n);
GwInt q_eps_int(long q);
inline Integer rank_int(const GwInt& x) { return x.rank(); }
inline Integer sign_int(const GwInt& x) { return x.sign(); }

// Reduction GW(Z) -> GW(F_q): <1> |-> <1>, <-1> |-> <-1 mod p>.
// For even q the map collapses to the rank.
GwFq reduce_mod_p(const GwInt& x, const FqTag& f);

}  // namespace gwzeta
