#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ihara {

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
// Coefficients of the zeta power series and of the formal-group machinery
// grow quickly, so nothing in the exact layer is allowed to use fixed-width
// integers or floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational num/den. mpq_class(n, d) does not reduce on its own.
inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// Single final rounding of an exact rational to double.
inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

// Every finite double is an exact rational; this is the lossless direction.
inline Rat rat_from_double(double x) {
    Rat q(x);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int binomial(const Int& n, unsigned long k);
Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

// Moebius function for the trace -> prime-count divisor inversion.
int moebius(int n);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

}  // namespace ihara
