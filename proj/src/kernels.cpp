#include "gwzeta/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gwzeta {

namespace {

using u64 = std::uint64_t;

// p < 2^31, so products of reduced residues fit in 64 bits.
inline u64 mulmod(u64 a, u64 b, u64 m) { return a * b % m; }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline int chi(u64 v, u64 p) {
    if (v == 0) return 0;
    return powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline long reduce(long a, long p) { return ((a % p) + p) % p; }

}  // namespace

int legendre_symbol(long a, long p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("legendre_symbol requires an odd prime");
    return chi(static_cast<u64>(reduce(a, p)), static_cast<u64>(p));
}

long elliptic_char_sum_serial(long p, long a, long b) {
    const u64 up = static_cast<u64>(p);
    const u64 ua = static_cast<u64>(reduce(a, p));
    const u64 ub = static_cast<u64>(reduce(b, p));
    long sum = 0;
    for (u64 x = 0; x < up; ++x) {
        u64 v = (mulmod(mulmod(x, x, up) + ua, x, up) + ub) % up;  // x^3 + ax + b
        sum += chi(v, up);
    }
    return sum;
}

long elliptic_char_sum_parallel(long p, long a, long b) {
#ifdef _OPENMP
    const u64 up = static_cast<u64>(p);
    const u64 ua = static_cast<u64>(reduce(a, p));
    const u64 ub = static_cast<u64>(reduce(b, p));
    long sum = 0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (long xi = 0; xi < p; ++xi) {
        u64 x = static_cast<u64>(xi);
        u64 v = (mulmod(mulmod(x, x, up) + ua, x, up) + ub) % up;
        sum += chi(v, up);
    }
    return sum;
#else
    return elliptic_char_sum_serial(p, a, b);
#endif
}

long elliptic_char_sum(long p, long a, long b) {
#ifdef _OPENMP
    return elliptic_char_sum_parallel(p, a, b);
#else
    return elliptic_char_sum_serial(p, a, b);
#endif
}

}  // namespace gwzeta
