#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwzeta/checks.hpp"
#include "gwzeta/gw.hpp"

using namespace gwzeta;

namespace {
GwFq gw(long q, long n, int s) { return GwFq(FqTag::make(q), n, s); }
}  // namespace

TEST_CASE("FqTag factors prime powers and rejects the rest") {
    FqTag f9 = FqTag::make(9);
    CHECK(f9.p == 3);
    CHECK(f9.k == 2);
    CHECK(f9.odd());
    CHECK(FqTag::make(2).odd() == false);
    CHECK(FqTag::make(8).p == 2);
    CHECK_THROWS_AS(FqTag::make(6), ParseError);
    CHECK_THROWS_AS(FqTag::make(12), ParseError);
    CHECK_THROWS_AS(FqTag::make(1), ParseError);
}

TEST_CASE("gw_gen computes the square class") {
    CHECK(gw_gen(FqTag::make(7), 1) == gw(7, 1, 0));
    // squares mod 7 are {1, 2, 4}
    CHECK(gw_gen(FqTag::make(7), 3) == gw(7, 1, 1));
    CHECK(gw_gen(FqTag::make(3), -1) == gw(3, 1, 1));
    CHECK(gw_gen(FqTag::make(5), -1) == gw(5, 1, 0));
    // exhaustive squaring oracle over small odd primes
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        FqTag f = FqTag::make(p);
        for (long a = 1; a < p; ++a) {
            bool square = false;
            for (long x = 1; x < p; ++x) square = square || (x * x % p == a);
            CHECK(gw_gen(f, a).disc() == (square ? 0 : 1));
        }
    }
    // every prime-field unit is a square in F_9 and F_4
    CHECK(gw_gen(FqTag::make(9), 2) == gw(9, 1, 0));
    CHECK(gw_gen(FqTag::make(4), 3) == gw(4, 1, 0));
    CHECK_THROWS_WITH_AS(gw_gen(FqTag::make(7), 14), doctest::Contains("degenerate form"), Error);
}

TEST_CASE("n_eps, q_eps, transfer, hyperbolic") {
    CHECK(n_eps(FqTag::make(3), 3) == gw(3, 3, 1));
    CHECK(n_eps(FqTag::make(5), 3) == gw(5, 3, 0));
    CHECK(n_eps(FqTag::make(7), 0) == gw(7, 0, 0));

    CHECK(q_eps(FqTag::make(3)) == gw(3, 3, 1));
    CHECK(q_eps(FqTag::make(5)) == gw(5, 5, 0));
    CHECK(q_eps(FqTag::make(7)) == gw(7, 7, 1));

    CHECK(transfer(FqTag::make(7), 2) == gw(7, 2, 1));
    CHECK(transfer(FqTag::make(7), 3) == gw(7, 3, 0));
    CHECK(transfer(FqTag::make(2), 2) == gw(2, 2, 0));
    CHECK_THROWS_AS(transfer(FqTag::make(7), 0), Error);

    CHECK(hyperbolic(FqTag::make(3)) == gw(3, 2, 1));
    CHECK(hyperbolic(FqTag::make(5)) == gw(5, 2, 0));
    CHECK(hyperbolic(FqTag::make(2)) == gw(2, 2, 0));
}

TEST_CASE("GwFq arithmetic in canonical form") {
    FqTag f3 = FqTag::make(3);
    GwFq u = gw_u(f3);
    CHECK(u * u == GwFq::one(f3));
    CHECK(q_eps(f3) * q_eps(f3) == gw(3, 9, 0));
    CHECK(gw(3, 2, 1) + gw(3, 2, 1) == gw(3, 4, 0));
    CHECK(-gw(3, 2, 1) == gw(3, -2, 1));
    CHECK(scale(Integer(3), gw(3, 2, 1)) == gw(3, 6, 1));
    CHECK(scale(Integer(4), gw(3, 2, 1)) == gw(3, 8, 0));
    CHECK_THROWS_WITH_AS(gw(3, 1, 0) + gw(5, 1, 0), doctest::Contains("mismatched fields"), Error);

    CHECK(rank_fq(gw(7, 60, 1)) == 60);
    CHECK(disc_fq(gw(7, 60, 1)) == 1);
    CHECK(GwFq::zero(f3).rank() == 0);
    CHECK(disc_fq(gw(3, 2, 1) + gw(3, 2, 1)) == 0);
}

TEST_CASE("GwInt arithmetic, rank and signature") {
    GwInt m1 = GwInt::minus_one_form();
    CHECK(m1 * m1 == GwInt::one());
    CHECK(sign_int(GwInt(3, 1)) == 2);
    CHECK(rank_int(GwInt(1, 1) * GwInt(1, 1)) == 4);
    CHECK(GwInt(1, 1) * GwInt(1, 1) == GwInt(2, 2));
}

TEST_CASE("reduce_mod_p maps <-1> to its square class") {
    CHECK(reduce_mod_p(GwInt::minus_one_form(), FqTag::make(7)) == gw(7, 1, 1));
    CHECK(reduce_mod_p(GwInt::minus_one_form(), FqTag::make(5)) == gw(5, 1, 0));
    CHECK(reduce_mod_p(GwInt::one(), FqTag::make(11)) == gw(11, 1, 0));
    CHECK(reduce_mod_p(GwInt(2, 3), FqTag::make(2)) == gw(2, 5, 0));
}

TEST_CASE("no solution of 2x = <1> - <u> for odd q") {
    for (long q : {3L, 5L, 7L, 9L, 11L}) {
        FqTag f = FqTag::make(q);
        GwFq target = GwFq::one(f) - gw_u(f);
        CHECK(target == gw(q, 0, 1));
        for (long n = -30; n <= 30; ++n)
            for (int s = 0; s <= 1; ++s) {
                GwFq x(f, n, s);
                CHECK_FALSE(x + x == target);
            }
    }
}

TEST_CASE("rings property suite is green") {
    for (const auto& result : run_rings_suite({3, 5, 7, 9})) {
        INFO(result.first);
        CHECK(result.second);
    }
}
