#include "gwzeta/fq.hpp"

#include "gwzeta/integer.hpp"

namespace gwzeta {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FqTag FqTag::make(long q) {
    if (q < 2) throw ParseError("q must be at least 2, got " + std::to_string(q));
    if (q >= (1L << 31)) throw ParseError("q must be below 2^31, got " + std::to_string(q));
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    if (!is_prime(p)) throw ParseError("q = " + std::to_string(q) + " is not a prime power");
    int k = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw ParseError("q = " + std::to_string(q) + " is not a prime power");
    return FqTag{p, k, q};
}

std::string field_name(const FqTag& f) { return "F_" + std::to_string(f.q); }

namespace {

long powmod(long base, long exp, long mod) {
    unsigned long long r = 1, b = static_cast<unsigned long long>(((base % mod) + mod) % mod);
    unsigned long long m = static_cast<unsigned long long>(mod);
    while (exp > 0) {
        if (exp & 1) r = r * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<long>(r);
}

}  // namespace

bool is_square_in_fq(const FqTag& f, long a_mod_p) {
    long a = ((a_mod_p % f.p) + f.p) % f.p;
    if (a == 0) throw Error("degenerate form: <a> requires a unit, got a = 0 mod " + std::to_string(f.p));
    if (f.p == 2) return true;  // every unit of F_{2^k} is a square
    bool square_in_fp = powmod(a, (f.p - 1) / 2, f.p) == 1;
    return square_in_fp || f.k % 2 == 0;
}

}  // namespace gwzeta
