#pragma once

#include <string>

#include "gwzeta/errors.hpp"

namespace gwzeta {

// Tag for a finite field F_q, q = p^k.  Only the shape of the field matters
// here; no F_q element arithmetic is done, so the tag stores p, k and q.
struct FqTag {
    long p = 0;  // characteristic (prime)
    int k = 0;   // extension degree
    long q = 0;  // p^k

    bool odd() const { return p != 2; }

    // Factors q as p^k and verifies p prime by trial division (q < 2^31).
    static FqTag make(long q);

    friend bool operator==(const FqTag&, const FqTag&) = default;
};

std::string field_name(const FqTag& f);  // "F_9"

// True iff the integer a (a unit of the prime field) is a square in F_q.
// For k = 1 this is Euler's criterion; for k > 1 a prime-field unit is a
// square iff it is one in F_p or k is even.
bool is_square_in_fq(const FqTag& f, long a_mod_p);

}  // namespace gwzeta
