#pragma once

#include <cstdint>

namespace gwzeta {

// Quadratic-character kernels over the prime field F_p.  These are the only
// loops in the library whose trip count grows with the field size, so they
// come in a serial reference version and an OpenMP version; the test suite
// pins the two against each other and tools/bench_kernels compares timings.

// Legendre symbol (a/p) in {-1, 0, 1} for odd prime p.
int legendre_symbol(long a, long p);

// sum_{x in F_p} chi(x^3 + A x + B), the Frobenius trace term of the curve
// y^2 = x^3 + Ax + B, so |E(F_p)| = p + 1 + chi_sum.
long elliptic_char_sum_serial(long p, long a, long b);
long elliptic_char_sum_parallel(long p, long a, long b);

// Dispatches to the parallel kernel when built with OpenMP.
long elliptic_char_sum(long p, long a, long b);

}  // namespace gwzeta
