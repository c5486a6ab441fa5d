#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "gwzeta/kernels.hpp"
#include "gwzeta/variety.hpp"

using namespace gwzeta;

TEST_CASE("projective and affine space counts") {
    FqTag f3 = FqTag::make(3), f7 = FqTag::make(7), f5 = FqTag::make(5);
    CHECK(projective_space(f3, 1).counts(1) == 4);
    CHECK(projective_space(f3, 2).counts(1) == 13);
    CHECK(projective_space(f7, 1).counts(2) == 50);
    CHECK(projective_space(f3, 2).cells()->b == std::vector<long>{1, 1, 1});

    CHECK(affine_space(f3, 1).counts(2) == 9);
    CHECK(affine_space(f3, 0).counts(5) == 1);
    CHECK(affine_space(f5, 2).counts(1) == 25);
    CHECK_FALSE(affine_space(f5, 2).proper());
    CHECK_FALSE(affine_space(f5, 2).cells().has_value());
}

TEST_CASE("grassmannian cells and counts") {
    FqTag f2 = FqTag::make(2);
    Variety g13 = grassmannian(f2, 1, 3);
    CHECK(g13.cells()->b == std::vector<long>{1, 1, 2, 1, 1});

    // oracle: enumerate the 2-dimensional subspaces of F_2^4 as bitmask spans
    std::set<std::set<int>> spans;
    for (int v1 = 1; v1 < 16; ++v1)
        for (int v2 = 1; v2 < 16; ++v2) {
            if (v1 == v2) continue;
            spans.insert({v1, v2, v1 ^ v2});
        }
    CHECK(g13.counts(1) == Integer(static_cast<long>(spans.size())));
    CHECK(g13.counts(1) == 35);

    // G(0, n) = P^n
    FqTag f5 = FqTag::make(5);
    for (int m = 1; m <= 4; ++m)
        CHECK(grassmannian(f5, 0, 3).counts(m) == projective_space(f5, 3).counts(m));
    CHECK_THROWS_AS(grassmannian(f5, 2, 2), ParseError);
    CHECK_THROWS_AS(grassmannian(f5, -1, 2), ParseError);
}

TEST_CASE("cell data generates the counts: sum_i b_i q^im") {
    for (long q : {2L, 3L, 5L, 7L, 9L}) {
        FqTag f = FqTag::make(q);
        std::vector<Variety> cellular{projective_space(f, 3), grassmannian(f, 1, 3),
                                      grassmannian(f, 1, 4), grassmannian(f, 2, 4),
                                      product(projective_space(f, 1), projective_space(f, 2))};
        for (const Variety& v : cellular) {
            REQUIRE(v.cells().has_value());
            for (int m = 1; m <= 6; ++m) {
                Integer expected = 0;
                for (size_t i = 0; i < v.cells()->b.size(); ++i)
                    expected += v.cells()->b[i] * ipow(Integer(q), static_cast<unsigned long>(i) * m);
                CHECK(v.counts(m) == expected);
            }
        }
    }
}

TEST_CASE("product, disjoint union, complement") {
    FqTag f3 = FqTag::make(3);
    Variety p1 = projective_space(f3, 1);
    Variety p1xp1 = product(p1, p1);
    CHECK(p1xp1.cells()->b == std::vector<long>{1, 2, 1});
    CHECK(p1xp1.counts(1) == 16);
    CHECK(product(p1, point(f3)).counts(2) == p1.counts(2));

    // P^1 = pt u A^1, P^n \ P^{n-1} = A^n
    Variety pt_union_a1 = disjoint_union(point(f3), affine_space(f3, 1));
    for (int m = 1; m <= 5; ++m) CHECK(pt_union_a1.counts(m) == p1.counts(m));
    Variety a2 = complement_pair(projective_space(f3, 2), p1);
    for (int m = 1; m <= 5; ++m) CHECK(a2.counts(m) == affine_space(f3, 2).counts(m));

    CHECK_THROWS_WITH_AS(product(p1, projective_space(FqTag::make(5), 1)),
                         doctest::Contains("mismatched fields"), Error);
    CHECK_THROWS_WITH_AS(complement_pair(p1, projective_space(f3, 2)).counts(1),
                         doctest::Contains("negative count"), InconsistentData);

    // counts form a commutative semiring pointwise
    Variety g = grassmannian(f3, 1, 3);
    for (int m = 1; m <= 4; ++m) {
        CHECK(product(p1, g).counts(m) == product(g, p1).counts(m));
        CHECK(disjoint_union(p1, g).counts(m) == disjoint_union(g, p1).counts(m));
        CHECK(product(p1, disjoint_union(g, p1)).counts(m) ==
              disjoint_union(product(p1, g), product(p1, p1)).counts(m));
    }
}

TEST_CASE("weil restriction of P^1") {
    FqTag f3 = FqTag::make(3), f7 = FqTag::make(7);
    CHECK(weil_restriction_p1(f3).counts(1) == 10);
    CHECK(weil_restriction_p1(f3).counts(2) == 100);
    CHECK(weil_restriction_p1(f7).counts(3) == 117650);
    CHECK(weil_restriction_p1(f3).proper());
    CHECK(weil_restriction_p1(f3).is_res_p1());
}

TEST_CASE("elliptic curve point counts") {
    FqTag f7 = FqTag::make(7);
    Variety e = elliptic_curve(f7, 2, 3);
    CHECK(e.counts(1) == 6);
    CHECK(e.counts(2) == 60);
    CHECK_THROWS_WITH_AS(elliptic_curve(FqTag::make(5), 0, 0), doctest::Contains("singular"),
                         ParseError);
    CHECK_THROWS_AS(elliptic_curve(FqTag::make(2), 1, 1), ParseError);
    CHECK_THROWS_AS(elliptic_curve(FqTag::make(9), 1, 1), ParseError);

    // brute-force |E(F_p)| by the defining equation, plus the Hasse bound
    for (long p : {5L, 7L, 11L, 13L}) {
        FqTag f = FqTag::make(p);
        for (long a = 0; a <= 2; ++a)
            for (long b = 1; b <= 2; ++b) {
                if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
                Variety curve = elliptic_curve(f, a, b);
                long direct = 1;  // point at infinity
                for (long x = 0; x < p; ++x)
                    for (long y = 0; y < p; ++y)
                        if ((y * y - (x * x * x + a * x + b)) % p == 0) ++direct;
                CHECK(curve.counts(1) == direct);
                for (int m = 1; m <= 6; ++m) {
                    Integer defect = ipow(p, static_cast<unsigned long>(m)) + 1 - curve.counts(m);
                    Integer square_bound = 4 * ipow(p, static_cast<unsigned long>(m));
                    CHECK(defect * defect <= square_bound);
                }
            }
    }
}

TEST_CASE("character-sum kernels agree: serial vs parallel") {
    for (long p : {5L, 7L, 101L, 10007L})
        for (long a = 0; a <= 3; ++a)
            CHECK(elliptic_char_sum_serial(p, a, 1) == elliptic_char_sum_parallel(p, a, 1));
    CHECK(legendre_symbol(2, 7) == 1);
    CHECK(legendre_symbol(3, 7) == -1);
    CHECK(legendre_symbol(7, 7) == 0);
}

TEST_CASE("from_weil_data") {
    FqTag f7 = FqTag::make(7);
    WeilData elliptic{f7,
                      {Poly<Integer>({Integer(1), Integer(-1)}),
                       Poly<Integer>({Integer(1), Integer(-2), Integer(7)}),
                       Poly<Integer>({Integer(1), Integer(-7)})}};
    Variety e = from_weil_data(elliptic);
    CHECK(e.counts(1) == 6);
    for (int m = 1; m <= 6; ++m) CHECK(e.counts(m) == elliptic_curve(f7, 2, 3).counts(m));
    CHECK(weil_data_warnings(elliptic).empty());

    WeilData p1{f7, {Poly<Integer>({Integer(1), Integer(-1)}), Poly<Integer>::constant(1),
                     Poly<Integer>({Integer(1), Integer(-7)})}};
    for (int m = 1; m <= 5; ++m)
        CHECK(from_weil_data(p1).counts(m) == projective_space(f7, 1).counts(m));

    FqTag f3 = FqTag::make(3);
    WeilData curve{f3, {Poly<Integer>({Integer(1), Integer(-1)}),
                        Poly<Integer>({Integer(1), Integer(3)}),
                        Poly<Integer>({Integer(1), Integer(-3)})}};
    CHECK(from_weil_data(curve).counts(2) == 1);  // 1 - (-3)^2 + 3^2

    WeilData bad{f3, {Poly<Integer>({Integer(2), Integer(1)})}};
    CHECK_THROWS_AS(from_weil_data(bad), InconsistentData);
    WeilData odd_shape{f3, {Poly<Integer>({Integer(1), Integer(-1)}),
                            Poly<Integer>({Integer(1), Integer(-3)})}};
    CHECK_FALSE(weil_data_warnings(odd_shape).empty());

    // projective-space data reproduces catalog counts
    WeilData p2{f3, {Poly<Integer>({Integer(1), Integer(-1)}), Poly<Integer>::constant(1),
                     Poly<Integer>({Integer(1), Integer(-3)}), Poly<Integer>::constant(1),
                     Poly<Integer>({Integer(1), Integer(-9)})}};
    for (int m = 1; m <= 5; ++m)
        CHECK(from_weil_data(p2).counts(m) == projective_space(f3, 2).counts(m));
}

TEST_CASE("memoized counts are safe under concurrent readers") {
    FqTag f5 = FqTag::make(5);
    Variety v = product(grassmannian(f5, 1, 3), projective_space(f5, 2));
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&] {
            for (int m = 1; m <= 20; ++m)
                if (v.counts(m) != grassmannian(f5, 1, 3).counts(m) *
                                       projective_space(f5, 2).counts(m))
                    ok = false;
        });
    for (auto& t : workers) t.join();
    CHECK(ok);
}

TEST_CASE("from_table") {
    FqTag f7 = FqTag::make(7);
    Variety t = from_table(f7, {Integer(6), Integer(60)});
    CHECK(t.counts(1) == 6);
    CHECK(t.counts(2) == 60);
    CHECK_THROWS_WITH_AS(t.counts(3), doctest::Contains("insufficient data"), InconsistentData);
    CHECK_THROWS_AS(from_table(f7, {}), InconsistentData);
    CHECK_THROWS_AS(from_table(f7, {Integer(-1)}), InconsistentData);
}
