#pragma once

#include <gmpxx.h>

namespace pxp {

// All counts, charges and Fibonacci numbers are exact; sweeps go up to
// L = 1000, far beyond any fixed-width integer.
using BigInt = mpz_class;
using BigRat = mpq_class;

// C(a, b) with the zero convention: 0 whenever a < 0, b < 0 or b > a.
// Every counting formula in this project relies on this convention.
BigInt binomial(long a, long b);

// F_l with F_0 = 0, F_1 = 1. Rejects negative indices.
BigInt fibonacci(long l);

// Lucas number L_l (L_0 = 2, L_1 = 1); counts constrained ring configurations.
BigInt lucas(long l);

// Euler totient of k >= 1.
BigInt totient(long k);

// a / d, throwing std::logic_error unless d divides a exactly. Used to turn
// silent formula bugs into hard failures.
BigInt exact_div(const BigInt& a, const BigInt& d);

// a / 2 with the same exactness guarantee.
BigInt exact_half(const BigInt& a);

}  // namespace pxp
